#include "mat2q.hpp"

namespace uhl {

bool is_hermitian(const Mat2 &m, double tol) {
    return std::abs(m.a - std::conj(m.a)) <= 2.0 * tol &&
           std::abs(m.d - std::conj(m.d)) <= 2.0 * tol &&
           std::abs(m.b - std::conj(m.c)) <= tol;
}

bool is_unitary_det1(const Mat2 &m, double tol) {
    const Mat2 g = m * m.adjoint();
    return std::abs(m.det() - 1.0) <= tol &&
           max_abs(g - Mat2::identity()) <= tol;
}

static Mat2 mat_sqrt_impl(const Mat2 &m, double sqrt_det, double hermitian_tol) {
    if (!is_hermitian(m, hermitian_tol))
        throw DomainError("matrix square root requires a Hermitian matrix");
    const double tr = m.trace().real();
    // Both eigenvalues are nonnegative iff tr >= 0 and det >= 0.
    if (sqrt_det < 0.0 || tr < -hermitian_tol)
        throw DomainError("matrix square root requires nonnegative eigenvalues");
    const double denom2 = tr + 2.0 * sqrt_det;
    if (denom2 <= 0.0)
        throw DegenerateError("matrix square root of the zero matrix");
    return (m + Mat2::identity() * sqrt_det) * (1.0 / std::sqrt(denom2));
}

Mat2 mat_sqrt_2x2(const Mat2 &m, double hermitian_tol) {
    double det = m.det().real();
    if (det < 0.0) {
        if (det < -hermitian_tol)
            throw DomainError("matrix square root requires nonnegative eigenvalues");
        det = 0.0;
    }
    return mat_sqrt_impl(m, std::sqrt(det), hermitian_tol);
}

Mat2 mat_sqrt_2x2_with_det(const Mat2 &m, double sqrt_det, double hermitian_tol) {
    return mat_sqrt_impl(m, sqrt_det, hermitian_tol);
}

Mat2 quat_to_mat(const Quaternion &q) {
    // w I + x (-i sigma_1) + y (-i sigma_2) + z (-i sigma_3)
    return {cplx{q.w, -q.z}, cplx{-q.y, -q.x}, cplx{q.y, -q.x}, cplx{q.w, q.z}};
}

Quaternion mat_to_quat(const Mat2 &m) {
    return {0.5 * (m.a.real() + m.d.real()), -0.5 * (m.b.imag() + m.c.imag()),
            0.5 * (m.c.real() - m.b.real()), 0.5 * (m.d.imag() - m.a.imag())};
}

AxisAngle quat_to_axis_angle(const Quaternion &q) {
    const Quaternion c = q.sign_canonical();
    const Vec3 v = c.vec();
    const double s = norm(v);
    if (s < 1e-14) return AxisAngle{0.0, {0.0, 0.0, 1.0}};
    // c = (cos(angle/2), -sin(angle/2) axis) with cos >= 0 after
    // canonicalization, so the angle lands in [0, pi].
    return AxisAngle{2.0 * std::atan2(s, c.w), -(v / s)};
}

AxisAngle mat_to_axis_angle(const Mat2 &r, double tol) {
    if (!is_unitary_det1(r, tol))
        throw DomainError("axis-angle decomposition requires an SU(2) matrix");
    return quat_to_axis_angle(mat_to_quat(r));
}

Quaternion axis_angle_to_quat(const AxisAngle &aa) {
    const double h = 0.5 * aa.angle;
    const Vec3 v = aa.axis * (-std::sin(h));
    return {std::cos(h), v.x, v.y, v.z};
}

} // namespace uhl
