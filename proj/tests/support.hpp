#pragma once

// Shared helpers for the test binaries: a deterministic random source that
// produces identical streams on every platform, an independent matrix square
// root built from the spectral decomposition, and tolerance predicates.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mat2q.hpp"

namespace support {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double symmetric() { return 2.0 * uniform() - 1.0; }

    uhl::Vec3 ball(double radius = 1.0) {
        for (;;) {
            const uhl::Vec3 p{symmetric(), symmetric(), symmetric()};
            if (norm2(p) < 1.0)
                return p * radius;
        }
    }

    uhl::Vec3 sphere() {
        for (;;) {
            const uhl::Vec3 p{symmetric(), symmetric(), symmetric()};
            const double n2 = norm2(p);
            if (n2 > 1e-6 && n2 < 1.0)
                return p / std::sqrt(n2);
        }
    }

    uhl::Quaternion rotor() {
        for (;;) {
            const uhl::Quaternion q{symmetric(), symmetric(), symmetric(),
                                    symmetric()};
            const double n2 = q.norm2();
            if (n2 > 1e-2 && n2 < 1.0)
                return q.normalized();
        }
    }
};

// Square root of a positive Hermitian 2x2 matrix through its eigensystem,
// kept deliberately different from the trace-based formula in the library.
inline uhl::Mat2 spectral_sqrt(const uhl::Mat2 &m) {
    const double half_tr = 0.5 * (m.a.real() + m.d.real());
    const double gap = std::sqrt(std::max(
        0.0, half_tr * half_tr - (m.a.real() * m.d.real() -
                                  (m.b * m.c).real())));
    const double lo = std::sqrt(std::max(0.0, half_tr - gap));
    const double hi = std::sqrt(std::max(0.0, half_tr + gap));
    if (std::abs(m.b) < 1e-15 && std::abs(m.c) < 1e-15) {
        const bool a_hi = m.a.real() >= m.d.real();
        return uhl::Mat2{a_hi ? hi : lo, 0.0, 0.0, a_hi ? lo : hi};
    }
    // Eigenvector for the larger eigenvalue, padded to an orthonormal pair.
    const uhl::cplx x = m.b;
    const uhl::cplx y = uhl::cplx{half_tr + gap, 0.0} - m.a;
    const double inv = 1.0 / std::sqrt(std::norm(x) + std::norm(y));
    const uhl::cplx v0 = x * inv, v1 = y * inv;
    const uhl::cplx u0 = -std::conj(v1), u1 = std::conj(v0);
    return uhl::Mat2{hi * v0 * std::conj(v0) + lo * u0 * std::conj(u0),
                     hi * v0 * std::conj(v1) + lo * u0 * std::conj(u1),
                     hi * v1 * std::conj(v0) + lo * u1 * std::conj(u0),
                     hi * v1 * std::conj(v1) + lo * u1 * std::conj(u1)};
}

inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool vec_close(const uhl::Vec3 &a, const uhl::Vec3 &b, double tol) {
    return close(a.x, b.x, tol) && close(a.y, b.y, tol) && close(a.z, b.z, tol);
}

inline bool quat_close(const uhl::Quaternion &a, const uhl::Quaternion &b,
                       double tol) {
    return uhl::quat_distance(a, b) <= tol;
}

inline bool mat_close(const uhl::Mat2 &a, const uhl::Mat2 &b, double tol) {
    return uhl::max_abs(a - b) <= tol;
}

// Smallest signed difference between two angles on the circle.
inline double angle_diff(double a, double b) {
    constexpr double pi = std::numbers::pi;
    double d = std::fmod(a - b + pi, 2.0 * pi);
    if (d < 0.0)
        d += 2.0 * pi;
    return d - pi;
}

} // namespace support
