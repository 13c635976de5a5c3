#include "hopf.hpp"

#include <cmath>

#include "errors.hpp"

namespace uhl {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

Quaternion normalized_or_throw(const Quaternion &q, const char *what) {
    const double n = q.norm();
    if (n < 1e-12)
        throw DegenerateError(what);
    return q / n;
}

} // namespace

QuaternionSpinor w_to_spinor(const Mat2 &w, double norm_tol) {
    const double tr = (w * w.adjoint()).trace().real();
    if (std::abs(tr - 1.0) > norm_tol)
        throw DomainError("w_to_spinor: purification not normalized");
    QuaternionSpinor s;
    s.q0 = mat_to_quat(w * cplx{kSqrt2, 0.0});
    s.q1 = mat_to_quat(w * cplx{0.0, -kSqrt2});
    return s;
}

Mat2 spinor_to_w(const QuaternionSpinor &s) {
    return (quat_to_mat(s.q0) + quat_to_mat(s.q1) * cplx{0.0, 1.0}) *
           (1.0 / kSqrt2);
}

S4Point hopf_projection(const QuaternionSpinor &s, double norm_tol) {
    const double n = s.q0.norm2() + s.q1.norm2();
    if (std::abs(n - 1.0) > norm_tol)
        throw DomainError("hopf_projection: spinor not normalized");
    const Quaternion u = (s.q1 * s.q0.conjugate()) * 2.0;
    S4Point p;
    p.u0 = u.w;
    p.u = u.vec();
    p.u4 = s.q0.norm2() - s.q1.norm2();
    return p;
}

QuaternionSpinor section(const S4Point &p, double norm_tol) {
    const double n =
        p.u0 * p.u0 + norm2(p.u) + p.u4 * p.u4;
    if (std::abs(n - 1.0) > norm_tol)
        throw DomainError("section: point not on the sphere");
    if (p.u4 <= -1.0 + 1e-12)
        throw DegenerateError("section: undefined at the south pole");
    const double s = std::sqrt(2.0 * (1.0 + p.u4));
    QuaternionSpinor out;
    out.q0 = Quaternion{(1.0 + p.u4) / s, 0.0, 0.0, 0.0};
    out.q1 = Quaternion{p.u0 / s, p.u.x / s, p.u.y / s, p.u.z / s};
    return out;
}

QuaternionSpinor section_of_bloch(const Vec3 &u, double eps) {
    require_interior(u, eps);
    S4Point p;
    p.u0 = 0.0;
    p.u = u;
    p.u4 = concurrence(u);
    return section(p);
}

Quaternion spinor_inner(const QuaternionSpinor &p, const QuaternionSpinor &q) {
    return p.q0.conjugate() * q.q0 + p.q1.conjugate() * q.q1;
}

bool in_phase(const QuaternionSpinor &p, const QuaternionSpinor &q,
              double tol) {
    const Quaternion inner = spinor_inner(p, q);
    return norm(inner.vec()) <= 2.0 * tol && inner.w > 0.0;
}

Quaternion quaternionic_pancharatnam(const std::vector<QuaternionSpinor> &s) {
    if (s.empty())
        throw DomainError("quaternionic_pancharatnam: empty sequence");
    Quaternion acc{1.0, 0.0, 0.0, 0.0};
    const std::size_t n = s.size();
    for (std::size_t k = 0; k < n; ++k) {
        const QuaternionSpinor &from = s[k];
        const QuaternionSpinor &to = s[(k + 1) % n];
        const Quaternion f = normalized_or_throw(
            spinor_inner(to, from),
            "quaternionic_pancharatnam: orthogonal consecutive spinors");
        acc = f * acc;
    }
    return acc;
}

WilsonResult wilson_loop(const std::vector<Vec3> &vertices, int n_steps,
                         double drift_tol, double eps) {
    if (vertices.empty())
        throw DomainError("wilson_loop: empty polygon");
    if (n_steps < 1)
        throw DomainError("wilson_loop: need n_steps >= 1");
    for (const Vec3 &v : vertices)
        require_interior(v, eps);

    const std::size_t m = vertices.size();
    const int per = std::max<int>(1, n_steps / static_cast<int>(m));
    std::vector<Vec3> pts;
    pts.reserve(m * static_cast<std::size_t>(per));
    for (std::size_t i = 0; i < m; ++i) {
        const Vec3 &a = vertices[i];
        const Vec3 &b = vertices[(i + 1) % m];
        for (int k = 0; k < per; ++k)
            pts.push_back(k == 0 ? a
                                 : geodesic_interpolate(
                                       a, b, static_cast<double>(k) / per,
                                       eps));
    }

    WilsonResult out;
    Quaternion acc{1.0, 0.0, 0.0, 0.0};
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec3 &cur = pts[k];
        const Vec3 &nxt = pts[(k + 1) % n];
        const Quaternion uq{0.0, cur.x, cur.y, cur.z};
        const Vec3 d = nxt - cur;
        const Quaternion du{0.0, d.x, d.y, d.z};
        Quaternion a = (uq.conjugate() * du) / (2.0 * (1.0 + concurrence(cur)));
        a.w = 0.0;
        const Quaternion f = Quaternion{1.0, 0.0, 0.0, 0.0} - a;
        acc = f * acc;
        const double norm = acc.norm();
        out.drift += std::abs(norm - 1.0);
        acc = acc / norm;
    }
    out.holonomy = acc;
    out.converged = out.drift <= drift_tol;
    return out;
}

} // namespace uhl
