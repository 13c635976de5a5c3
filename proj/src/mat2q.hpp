#pragma once

// Kernels for 2x2 complex matrices, quaternions, and the correspondence
// between them.  The quaternion units map to matrices as 1 -> I,
// i -> -i sigma_1, j -> -i sigma_2, k -> -i sigma_3, which makes
// quat_to_mat a homomorphism onto the real span {I, -i sigma_a} and sends
// unit quaternions to SU(2).

#include <cmath>
#include <complex>

#include "errors.hpp"

namespace uhl {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3 &v) { return v * s; }

inline double dot(const Vec3 &a, const Vec3 &b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3 &v) { return dot(v, v); }
inline double norm(const Vec3 &v) { return std::sqrt(norm2(v)); }

struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion operator+(const Quaternion &o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    Quaternion operator-(const Quaternion &o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    // Hamilton product.
    Quaternion operator*(const Quaternion &o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y + y * o.w + z * o.x - x * o.z,
                w * o.z + z * o.w + x * o.y - y * o.x};
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    Quaternion normalized() const { return *this / norm(); }
    Vec3 vec() const { return {x, y, z}; }

    // Representative of {q, -q} with w >= 0, ties broken toward the first
    // nonzero component being positive.
    Quaternion sign_canonical() const {
        if (w > 0.0) return *this;
        if (w < 0.0) return -*this;
        if (x != 0.0) return x > 0.0 ? *this : -*this;
        if (y != 0.0) return y > 0.0 ? *this : -*this;
        if (z > 0.0) return *this;
        return -*this;
    }
};

inline double quat_distance(const Quaternion &p, const Quaternion &q) {
    return std::max(std::max(std::abs(p.w - q.w), std::abs(p.x - q.x)),
                    std::max(std::abs(p.y - q.y), std::abs(p.z - q.z)));
}

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator+(const Mat2 &o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2 &o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2 &o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2 adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }
    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    // Inverse via the adjugate; pass the determinant when it is known
    // exactly to avoid cancellation in ill-conditioned cases.
    Mat2 inverse(cplx determinant) const {
        return Mat2{d, -b, -c, a} * (1.0 / determinant);
    }
    Mat2 inverse() const { return inverse(det()); }
};

inline double max_abs(const Mat2 &m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

// u.sigma = [[u3, u1 - i u2], [u1 + i u2, -u3]].
inline Mat2 pauli_dot(const Vec3 &u) {
    return {cplx{u.z, 0.0}, cplx{u.x, -u.y}, cplx{u.x, u.y}, cplx{-u.z, 0.0}};
}

struct AxisAngle {
    double angle = 0.0;       // radians in (-pi, pi]
    Vec3 axis{0.0, 0.0, 1.0}; // unit; canonical +z for zero rotation
};

bool is_hermitian(const Mat2 &m, double tol = 1e-10);
bool is_unitary_det1(const Mat2 &m, double tol = 1e-10);

// Principal square root of a positive-semidefinite Hermitian matrix,
//   sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
// The second overload takes sqrt(det M) as a known exact value.
Mat2 mat_sqrt_2x2(const Mat2 &m, double hermitian_tol = 1e-10);
Mat2 mat_sqrt_2x2_with_det(const Mat2 &m, double sqrt_det,
                           double hermitian_tol = 1e-10);

Mat2 quat_to_mat(const Quaternion &q);

// Component extraction inverse to quat_to_mat on its image.
Quaternion mat_to_quat(const Mat2 &m);

// Reproducible axis-angle form of an SU(2) element.  The sign ambiguity
// {q, -q} of the matrix-to-quaternion lift is resolved canonically, which
// lands the angle in [0, pi] (a subset of the documented (-pi, pi]).
AxisAngle mat_to_axis_angle(const Mat2 &r, double tol = 1e-10);
AxisAngle quat_to_axis_angle(const Quaternion &q);

Quaternion axis_angle_to_quat(const AxisAngle &aa);

} // namespace uhl
