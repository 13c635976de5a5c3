#pragma once

// One-qubit density matrices parametrized by Bloch vectors, their square
// roots and boost forms, and purifications W with rho = W W^dagger.

#include <utility>

#include "mat2q.hpp"

namespace uhl {

// Margin below purity that sqrt-based transport operations demand:
// they accept |u| <= 1 - kInteriorEps.
inline constexpr double kInteriorEps = 1e-9;

// sqrt(1 - |u|^2); the concurrence of the canonical purification.
double concurrence(const Vec3 &u);

// Throws DomainError unless |u| <= 1 (within roundoff slack).
void require_bloch(const Vec3 &u);

// Throws DomainError unless |u| <= 1 - eps.
void require_interior(const Vec3 &u, double eps = kInteriorEps);

// rho = (I + u.sigma) / 2.
Mat2 bloch_to_density(const Vec3 &u);

// rho^{1/2} = ((1 + C) I + u.sigma) / (2 sqrt(1 + C)), strictly mixed only.
Mat2 sqrt_density(const Vec3 &u, double eps = kInteriorEps);

// rho^{-1/2} = ((1 + C) I - u.sigma) / (C sqrt(1 + C)).
Mat2 inv_sqrt_density(const Vec3 &u, double eps = kInteriorEps);

struct Rapidity {
    double theta = 0.0;          // hyperbolic angle, tanh(theta) = |u|
    Vec3 direction{0.0, 0.0, 1.0}; // unit; canonical +z when u = 0
};

Rapidity bloch_to_rapidity(const Vec3 &u, double eps = kInteriorEps);

// L(theta, n) = cosh(theta/2) I + sinh(theta/2) n.sigma; the positive
// matrix with rho^{1/2} = sqrt(C/2) L.
Mat2 boost_spinor(const Rapidity &r, double unit_tol = 1e-10);

// Recover (u, C) from a normalized purification; C is computed as
// 2 |det W|, which equals sqrt(1 - |u|^2).
std::pair<Vec3, double> purification_to_bloch(const Mat2 &w,
                                              double norm_tol = 1e-10);

// Uhlmann parallelity: W1^dagger W2 Hermitian with positive eigenvalues.
bool is_parallel(const Mat2 &w1, const Mat2 &w2, double tol = 1e-10);

// a = u / (1 + C); equivalently tanh(theta/2) in the direction of u.
Vec3 renormalized_vector(const Vec3 &u);

} // namespace uhl
