#include "state.hpp"

namespace uhl {

double concurrence(const Vec3 &u) {
    require_bloch(u);
    const double s = 1.0 - norm2(u);
    return s > 0.0 ? std::sqrt(s) : 0.0;
}

void require_bloch(const Vec3 &u) {
    if (!(norm2(u) <= 1.0 + 4e-16))
        throw DomainError("Bloch vector must satisfy |u| <= 1");
}

void require_interior(const Vec3 &u, double eps) {
    require_bloch(u);
    if (norm(u) > 1.0 - eps)
        throw DomainError("operation requires a strictly mixed state");
}

Mat2 bloch_to_density(const Vec3 &u) {
    require_bloch(u);
    return (Mat2::identity() + pauli_dot(u)) * 0.5;
}

Mat2 sqrt_density(const Vec3 &u, double eps) {
    require_interior(u, eps);
    const double c = concurrence(u);
    return (Mat2::identity() * (1.0 + c) + pauli_dot(u)) *
           (0.5 / std::sqrt(1.0 + c));
}

Mat2 inv_sqrt_density(const Vec3 &u, double eps) {
    require_interior(u, eps);
    const double c = concurrence(u);
    return (Mat2::identity() * (1.0 + c) - pauli_dot(u)) *
           (1.0 / (c * std::sqrt(1.0 + c)));
}

Rapidity bloch_to_rapidity(const Vec3 &u, double eps) {
    require_interior(u, eps);
    const double r = norm(u);
    if (r == 0.0) return Rapidity{};
    return Rapidity{std::atanh(r), u / r};
}

Mat2 boost_spinor(const Rapidity &r, double unit_tol) {
    if (r.theta < 0.0) throw DomainError("rapidity must be nonnegative");
    if (std::abs(norm(r.direction) - 1.0) > unit_tol)
        throw DomainError("rapidity direction must be a unit vector");
    return Mat2::identity() * std::cosh(0.5 * r.theta) +
           pauli_dot(r.direction) * std::sinh(0.5 * r.theta);
}

std::pair<Vec3, double> purification_to_bloch(const Mat2 &w, double norm_tol) {
    const Mat2 rho = w * w.adjoint();
    if (std::abs(rho.trace().real() - 1.0) > norm_tol)
        throw DomainError("purification must have unit Hilbert-Schmidt norm");
    const Vec3 u{2.0 * rho.c.real(), 2.0 * rho.c.imag(),
                 rho.a.real() - rho.d.real()};
    return {u, 2.0 * std::abs(w.det())};
}

bool is_parallel(const Mat2 &w1, const Mat2 &w2, double tol) {
    const Mat2 h = w1.adjoint() * w2;
    if (max_abs(h - h.adjoint()) > 2.0 * tol) return false;
    // Hermitian 2x2 has positive eigenvalues iff trace and det are positive.
    return h.trace().real() > 0.0 && h.det().real() > 0.0;
}

Vec3 renormalized_vector(const Vec3 &u) {
    return u / (1.0 + concurrence(u));
}

} // namespace uhl
