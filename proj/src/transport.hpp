#pragma once

// Segment holonomy of Uhlmann parallel transport (a Thomas rotation),
// hyperbolic-translation invariance, and path-ordered products over
// geodesic polygons with phase and visibility extraction.

#include <vector>

#include "bures.hpp"

namespace uhl {

// Visibility below this floor leaves the geometric phase undefined.
inline constexpr double kVisibilityFloor = 1e-12;

// Transport from v to u (destination first), as a unit quaternion:
//   Y = (k, -(u x v)) / sqrt(k^2 + |u x v|^2),
//   k = (1 + C_u)(1 + C_v) + u.v.
Quaternion thomas_rotation(const Vec3 &u, const Vec3 &v,
                           double eps = kInteriorEps);

// Same element computed from density matrices as
// rho_u^{-1/2} rho_v^{-1/2} (rho_v^{1/2} rho_u rho_v^{1/2})^{1/2},
// with the matrix square root and adjugate inverses.  The inner
// determinant is supplied exactly as (C_u C_v / 4)^2, which keeps the
// result accurate arbitrarily close to the pure boundary.
Quaternion thomas_rotation_oracle(const Vec3 &u, const Vec3 &v,
                                  double eps = kInteriorEps);

// Rotation between renormalized vectors a = u/(1+C_u), b = v/(1+C_v):
//   R(a, b) = ((1 + a.b), -(a x b)) / sqrt(1 + 2 a.b + |a|^2 |b|^2).
// Equal to thomas_rotation of the corresponding Bloch vectors.
Quaternion renormalized_rotation(const Vec3 &a, const Vec3 &b);

// X_{uv} = rho_v^{-1/2} (rho_v^{1/2} rho_u rho_v^{1/2})^{1/2} rho_v^{-1/2};
// satisfies X_{uv} rho_v^{1/2} = rho_u^{1/2} Y_{uv} exactly.
Mat2 segment_x(const Vec3 &u, const Vec3 &v, double eps = kInteriorEps);

// tau_a(b) = ((1 - |a|^2) b + (1 + 2 a.b + |b|^2) a)
//            / (1 + 2 a.b + |a|^2 |b|^2), for |a| < 1, |b| < 1.
Vec3 hyperbolic_translate(const Vec3 &a, const Vec3 &b);

struct HolonomyResult {
    Quaternion rotation;       // path-ordered product, exact SU(2) element
    double angle = 0.0;        // in [0, 2 pi]; 2 pi only for -I
    Vec3 axis{0.0, 0.0, 1.0};  // canonical +z when the rotation is +-I
    double phase = 0.0;        // arg Tr(rotation rho_0), in (-pi, pi]
    double visibility = 1.0;   // |Tr(rotation rho_0)|
    bool phase_defined = true; // false when visibility < kVisibilityFloor
};

// nu exp(i phase) = Tr(quat_to_mat(rotation) rho(base)) = w - i (vec . base).
void attach_phase(HolonomyResult &h, const Vec3 &base);

// Angle/axis of an SU(2) element without sign canonicalization:
// angle = 2 atan2(|vec|, w) in [0, 2 pi], axis = -vec/|vec|.
void attach_angle_axis(HolonomyResult &h);

// Ordered product of segment rotations along the open chain
// v0 -> v1 -> ... -> vm, earliest factor rightmost.
Quaternion path_transport(const std::vector<Vec3> &vertices,
                          double eps = kInteriorEps);

// Holonomy of the closed loop v0 -> v1 -> ... -> vm -> v0 (implicit return
// leg), with phase and visibility against rho of v0.  Reversing the
// orientation conjugates the phase.
HolonomyResult polygon_holonomy(const std::vector<Vec3> &vertices,
                                bool reverse_orientation = false,
                                double eps = kInteriorEps);

// Product of segment rotations over the geodesic from u to v subdivided
// into n equal-arc pieces, which reproduces the single-segment rotation;
// *deviation (optional) receives the max component difference from it.
Quaternion refined_geodesic_holonomy(const Vec3 &u, const Vec3 &v, int n_subdiv,
                                     double *deviation = nullptr,
                                     double eps = kInteriorEps);

} // namespace uhl
