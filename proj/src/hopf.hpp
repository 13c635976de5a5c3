#pragma once

// Purifications as quaternionic spinors, the Hopf projection to S^4, the
// canonical section over the C > 0 subbundle, quaternion-valued
// Pancharatnam transport, and the discretized connection Wilson loop.

#include <vector>

#include "bures.hpp"

namespace uhl {

// Normalized pair (q0, q1), |q0|^2 + |q1|^2 = 1.  The purification it
// encodes is W = (M(q0) + i M(q1)) / sqrt(2) with M the quaternion-to-
// matrix embedding; the gauge freedom is right multiplication of both
// components by one unit quaternion.
struct QuaternionSpinor {
    Quaternion q0{1.0, 0.0, 0.0, 0.0};
    Quaternion q1{0.0, 0.0, 0.0, 0.0};
};

// Point of S^4: (u0, u, u4) with u0^2 + |u|^2 + u4^2 = 1.  The physical
// subbundle sits at u0 = 0, where u is the Bloch vector and u4 = C its
// concurrence; u4 + i u0 = 2 Det W tracks the overall phase otherwise.
struct S4Point {
    double u0 = 0.0;
    Vec3 u{};
    double u4 = 1.0;
};

struct WilsonResult {
    Quaternion holonomy{1.0, 0.0, 0.0, 0.0};
    double drift = 0.0;     // accumulated per-step renormalization
    bool converged = true;  // false when drift exceeds the threshold
};

// Spinor components of a normalized purification (Tr W W^dagger = 1).
QuaternionSpinor w_to_spinor(const Mat2 &w, double norm_tol = 1e-10);

// Inverse embedding; w_to_spinor(spinor_to_w(s)) = s exactly.
Mat2 spinor_to_w(const QuaternionSpinor &s);

// Hopf map: u = 2 q1 conj(q0) split as (u0, u), u4 = |q0|^2 - |q1|^2.
// Invariant under the right gauge action.
S4Point hopf_projection(const QuaternionSpinor &s, double norm_tol = 1e-9);

// Canonical section over S^4 minus the south pole:
//   (q0, q1) = ((1 + u4, 0), (u0, u)) / sqrt(2 (1 + u4)).
// On the subbundle this is the spinor of rho^{1/2}.
QuaternionSpinor section(const S4Point &p, double norm_tol = 1e-9);

// Section spinor of the strictly mixed Bloch vector u.
QuaternionSpinor section_of_bloch(const Vec3 &u, double eps = kInteriorEps);

// <p|q> = conj(p0) q0 + conj(p1) q1; quaternionic conjugation acts on
// the first factor.
Quaternion spinor_inner(const QuaternionSpinor &p, const QuaternionSpinor &q);

// True when <p|q> has vanishing imaginary part (within tol) and positive
// real part; matches Uhlmann parallelity of the encoded purifications.
bool in_phase(const QuaternionSpinor &p, const QuaternionSpinor &q,
              double tol = 1e-10);

// Holonomy of the closed spinor sequence: unit-quaternion factors
// <s_{k+1}|s_k> / |<s_{k+1}|s_k>| multiplied with the earliest segment
// rightmost.  For section spinors this equals the loop rotation of the
// underlying Bloch polygon.
Quaternion quaternionic_pancharatnam(const std::vector<QuaternionSpinor> &s);

// First-order Wilson loop of the subbundle connection
//   A = Im(conj(u) du) / (2 (1 + u4))
// along the closed Bloch polygon, its edges subdivided into about n_steps
// geodesic pieces total: ordered product of (1 - A_k) factors, each step
// renormalized.  converged is false when the accumulated renormalization
// exceeds drift_tol, signaling too coarse a discretization.
WilsonResult wilson_loop(const std::vector<Vec3> &vertices, int n_steps,
                         double drift_tol = 1e-3, double eps = kInteriorEps);

} // namespace uhl
