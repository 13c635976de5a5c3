#pragma once

// Closed-form holonomy, phase, and visibility of geodesic triangles,
// the pure-state solid-angle limit, the fixed-radius family, and the
// Slater and interferometric comparison formulas.

#include <utility>

#include "transport.hpp"

namespace uhl {

struct TriangleResult {
    Quaternion rotation;       // loop u -> v -> w -> u, exact SU(2) element
    double delta = 0.0;        // rotation angle in [0, 2 pi]
    Vec3 axis{0.0, 0.0, 1.0};  // canonical +z when the rotation is +-I
    double phase = 0.0;        // arg Tr(rotation rho_u), in (-pi, pi]
    double visibility = 1.0;   // |Tr(rotation rho_u)|
    bool phase_defined = true;
    Vec3 p{};                  // axis-construction vector of the u -> w leg
    Vec3 q{};                  // axis-construction vector of the u -> v leg
    double volume = 0.0;       // u . (v x w)
    double mu = 0.0;           // 1 + sum of pairwise dots of unit directions
};

struct PhaseVisibility {
    double phase = 0.0;
    double visibility = 0.0;
    bool phase_defined = true;
};

struct SolidAnglePhase {
    double phase = 0.0; // in (-pi, pi]
    double omega = 0.0; // oriented solid angle, in (-2 pi, 2 pi]
};

struct SlaterComparison {
    double r = 0.0;
    double mu = 0.0;
    double omega = 0.0;
    double tan_uhlmann = 0.0;
    double tan_slater = 0.0;        // +-inf when the denominator vanishes
    double tan_interferometric = 0.0;
    double ratio = 0.0;             // r^2 mu / (r^2 mu + 4(1 - r^2))
    bool slater_defined = true;
};

// p and q from the renormalized vertices a = u/(1+C_u), b, c:
//   p = ((1+a^2) c - (1 + 2 a.c - c^2) a) / (1 + 2 a.c + a^2 c^2),
//   q = ((1+a^2) b - (1 + 2 a.b - b^2) a) / (1 + 2 a.b + a^2 b^2).
// The loop rotation is ((1+p.q) I + i (p x q).sigma) / sqrt(1+2p.q+p^2q^2).
std::pair<Vec3, Vec3> triangle_pq(const Vec3 &a, const Vec3 &b, const Vec3 &c);

// Full holonomy data of the geodesic triangle u -> v -> w -> u through
// the p, q closed form; phase and visibility from the rotation's trace.
TriangleResult triangle_rotation(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                                 double eps = kInteriorEps);

// cos(delta/2) = (F_uw + F_wv + F_vu - 1) / (2 sqrt(F_uw F_wv F_vu)).
double triangle_delta_cos(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                          double eps = kInteriorEps);

// Unnormalized rotation J = (I + A C)(I + C B)(I + B A) with A = a.sigma
// of the renormalized vertices, by direct multiplication.
Mat2 j_matrix_oracle(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                     double eps = kInteriorEps);

// The same matrix collected into scalar, single-commutator, and
// commutator-sum pieces.
Mat2 j_matrix_expansion(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                        double eps = kInteriorEps);

// Scale turning j_matrix_oracle into the unit-determinant rotation.
double j_matrix_prefactor(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                          double eps = kInteriorEps);

// center + (r2/|x - center|^2)(x - center); involutive on the sphere of
// squared radius r2 about center.
Vec3 sphere_inversion(const Vec3 &x, const Vec3 &center, double r2);

// nu exp(i phase) = (F_uv + F_vw + F_wu - 1 - (i/2) u.(v x w))
//                   / (2 sqrt(F_uv F_vw F_wu)),
// the fidelity closed form of the trace of the loop rotation against
// rho_u.  phase_defined is false below the visibility floor.
PhaseVisibility triangle_phase_visibility(const Vec3 &u, const Vec3 &v,
                                          const Vec3 &w,
                                          double eps = kInteriorEps);

// Pure-state limit over unit vectors:
//   omega = 2 atan2(n1.(n2 x n3), 1 + n1.n2 + n2.n3 + n3.n1),
//   phase = -omega/2.
SolidAnglePhase solid_angle_phase(const Vec3 &n1, const Vec3 &n2,
                                  const Vec3 &n3);

// tan(phase) = -r^3 n1.(n2 x n3) / (4(1 - r^2) + r^2 mu) for the triangle
// with vertices r n1, r n2, r n3; quadrant fixed by the trace formula.
double fixed_radius_phase(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3,
                          double r);

// Slater's published fixed-radius formula, kept verbatim as an erroneous
// comparison target: tan(phase) = -r^3 mu tan(omega/2)
// / (4 + (mu - 10) r^2 + 6 r^4).  Substituting 6r^2 for the 6r^4 term
// recovers the correct denominator.
double slater_phase(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3, double r);

// Interferometric mixed-state phase tan(phase) = -r tan(omega/2).
double interferometric_phase(double omega, double r);

// All fixed-radius comparison quantities at once; tan_slater is set to
// +-inf instead of throwing when its denominator vanishes.
SlaterComparison compare_slater(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3,
                                double r);

} // namespace uhl
