#include "triangle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace uhl {

namespace {

void require_unit(const Vec3 &n, const char *name) {
    if (std::abs(norm(n) - 1.0) > 1e-9)
        throw DomainError(std::string(name) + ": unit vector required");
}

double require_radius(double r) {
    if (!(r > 0.0 && r <= 1.0))
        throw DomainError("radius must lie in (0, 1]");
    return r;
}

// atan2 lands in [-pi, pi]; fold the closed end onto +pi.
double half_open(double phase) { return phase <= -M_PI ? M_PI : phase; }

Mat2 comm(const Mat2 &x, const Mat2 &y) { return x * y - y * x; }

double pure_mu(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3) {
    return 1.0 + dot(n1, n2) + dot(n2, n3) + dot(n3, n1);
}

double directions_mu(const Vec3 &u, const Vec3 &v, const Vec3 &w) {
    const double nu = norm(u), nv = norm(v), nw = norm(w);
    if (nu < 1e-15 || nv < 1e-15 || nw < 1e-15)
        return std::numeric_limits<double>::quiet_NaN();
    return pure_mu(u / nu, v / nv, w / nw);
}

} // namespace

std::pair<Vec3, Vec3> triangle_pq(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
    const double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    const double ab = dot(a, b), ac = dot(a, c);
    const double dp = 1.0 + 2.0 * ac + a2 * c2;
    const double dq = 1.0 + 2.0 * ab + a2 * b2;
    if (dp < 1e-300 || dq < 1e-300)
        throw DegenerateError("triangle_pq: antipodal unit vectors");
    const Vec3 p = (c * (1.0 + a2) - a * (1.0 + 2.0 * ac - c2)) / dp;
    const Vec3 q = (b * (1.0 + a2) - a * (1.0 + 2.0 * ab - b2)) / dq;
    return {p, q};
}

TriangleResult triangle_rotation(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                                 double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    TriangleResult t;
    const auto pq = triangle_pq(renormalized_vector(u), renormalized_vector(v),
                                renormalized_vector(w));
    t.p = pq.first;
    t.q = pq.second;
    t.rotation = renormalized_rotation(t.p, t.q);
    const Vec3 vec = t.rotation.vec();
    const double s = norm(vec);
    t.delta = 2.0 * std::atan2(s, t.rotation.w);
    t.axis = s < 1e-14 ? Vec3{0.0, 0.0, 1.0} : vec * (-1.0 / s);
    const double re = t.rotation.w;
    const double im = -dot(vec, u);
    t.visibility = std::hypot(re, im);
    if (t.visibility < kVisibilityFloor) {
        t.phase = 0.0;
        t.phase_defined = false;
    } else {
        t.phase = half_open(std::atan2(im, re));
        t.phase_defined = true;
    }
    t.volume = dot(u, cross(v, w));
    t.mu = directions_mu(u, v, w);
    return t;
}

double triangle_delta_cos(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                          double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    const double fuw = fidelity(u, w);
    const double fwv = fidelity(w, v);
    const double fvu = fidelity(v, u);
    const double prod = fuw * fwv * fvu;
    if (prod <= 0.0)
        throw DegenerateError("triangle_delta_cos: vanishing fidelity");
    return (fuw + fwv + fvu - 1.0) / (2.0 * std::sqrt(prod));
}

Mat2 j_matrix_oracle(const Vec3 &u, const Vec3 &v, const Vec3 &w, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    const Mat2 a = pauli_dot(renormalized_vector(u));
    const Mat2 b = pauli_dot(renormalized_vector(v));
    const Mat2 c = pauli_dot(renormalized_vector(w));
    const Mat2 i = Mat2::identity();
    return (i + a * c) * (i + c * b) * (i + b * a);
}

Mat2 j_matrix_expansion(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                        double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    const Vec3 a = renormalized_vector(u);
    const Vec3 b = renormalized_vector(v);
    const Vec3 c = renormalized_vector(w);
    const double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    const double ab = dot(a, b), bc = dot(b, c), ca = dot(c, a);
    const Mat2 am = pauli_dot(a), bm = pauli_dot(b), cm = pauli_dot(c);
    const double scal = 1.0 + a2 * b2 * c2 + (1.0 + a2) * bc +
                        (1.0 + b2) * ca + (1.0 + c2) * ab;
    const Mat2 single = comm(cm - am * ca, bm - am * ab);
    const Mat2 sum = (comm(bm, cm) * (1.0 - a2) - comm(cm, am) * (1.0 - b2) -
                      comm(am, bm) * (1.0 - c2)) *
                     0.5;
    return Mat2::identity() * scal + single + sum;
}

double j_matrix_prefactor(const Vec3 &u, const Vec3 &v, const Vec3 &w,
                          double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    const Vec3 a = renormalized_vector(u);
    const Vec3 b = renormalized_vector(v);
    const Vec3 c = renormalized_vector(w);
    const double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
    const double nac = 1.0 + 2.0 * dot(a, c) + a2 * c2;
    const double ncb = 1.0 + 2.0 * dot(c, b) + c2 * b2;
    const double nba = 1.0 + 2.0 * dot(b, a) + b2 * a2;
    return 1.0 / std::sqrt(nac * ncb * nba);
}

Vec3 sphere_inversion(const Vec3 &x, const Vec3 &center, double r2) {
    if (!(r2 > 0.0))
        throw DomainError("sphere_inversion: squared radius must be positive");
    const Vec3 d = x - center;
    const double d2 = norm2(d);
    if (d2 < 1e-300)
        throw DegenerateError("sphere_inversion: point at the center");
    return center + d * (r2 / d2);
}

PhaseVisibility triangle_phase_visibility(const Vec3 &u, const Vec3 &v,
                                          const Vec3 &w, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    require_interior(w, eps);
    const double fuv = fidelity(u, v);
    const double fvw = fidelity(v, w);
    const double fwu = fidelity(w, u);
    const double prod = fuv * fvw * fwu;
    if (prod <= 0.0)
        throw DegenerateError("triangle_phase_visibility: vanishing fidelity");
    const double re = fuv + fvw + fwu - 1.0;
    const double im = -0.5 * dot(u, cross(v, w));
    PhaseVisibility out;
    out.visibility = std::hypot(re, im) / (2.0 * std::sqrt(prod));
    if (out.visibility < kVisibilityFloor) {
        out.phase = 0.0;
        out.phase_defined = false;
    } else {
        out.phase = half_open(std::atan2(im, re));
        out.phase_defined = true;
    }
    return out;
}

SolidAnglePhase solid_angle_phase(const Vec3 &n1, const Vec3 &n2,
                                  const Vec3 &n3) {
    require_unit(n1, "n1");
    require_unit(n2, "n2");
    require_unit(n3, "n3");
    const double vol = dot(n1, cross(n2, n3));
    const double mu = pure_mu(n1, n2, n3);
    if (std::hypot(vol, mu) < 1e-14)
        throw DegenerateError("solid_angle_phase: antipodal pair");
    SolidAnglePhase out;
    out.omega = 2.0 * std::atan2(vol, mu);
    out.phase = half_open(std::atan2(-vol, mu));
    return out;
}

double fixed_radius_phase(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3,
                          double r) {
    require_unit(n1, "n1");
    require_unit(n2, "n2");
    require_unit(n3, "n3");
    require_radius(r);
    const double vol = dot(n1, cross(n2, n3));
    const double mu = pure_mu(n1, n2, n3);
    const double r2 = r * r;
    return half_open(
        std::atan2(-r2 * r * vol, 4.0 * (1.0 - r2) + r2 * mu));
}

double slater_phase(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3, double r) {
    require_unit(n1, "n1");
    require_unit(n2, "n2");
    require_unit(n3, "n3");
    require_radius(r);
    const double vol = dot(n1, cross(n2, n3));
    const double mu = pure_mu(n1, n2, n3);
    const double r2 = r * r;
    const double denom = 4.0 + (mu - 10.0) * r2 + 6.0 * r2 * r2;
    if (std::abs(denom) < 1e-12)
        throw DegenerateError("slater_phase: vanishing denominator");
    return half_open(std::atan2(-r2 * r * vol, denom));
}

double interferometric_phase(double omega, double r) {
    require_radius(r);
    const double ch = std::cos(0.5 * omega);
    const double sh = std::sin(0.5 * omega);
    if (std::abs(ch) < 1e-15)
        throw DegenerateError("interferometric_phase: tangent pole");
    return half_open(std::atan2(-r * sh, ch));
}

SlaterComparison compare_slater(const Vec3 &n1, const Vec3 &n2, const Vec3 &n3,
                                double r) {
    require_unit(n1, "n1");
    require_unit(n2, "n2");
    require_unit(n3, "n3");
    require_radius(r);
    const double vol = dot(n1, cross(n2, n3));
    const double mu = pure_mu(n1, n2, n3);
    if (std::hypot(vol, mu) < 1e-14)
        throw DegenerateError("compare_slater: antipodal pair");
    SlaterComparison out;
    out.r = r;
    out.mu = mu;
    out.omega = 2.0 * std::atan2(vol, mu);
    const double r2 = r * r;
    out.tan_uhlmann = -r2 * r * vol / (4.0 * (1.0 - r2) + r2 * mu);
    const double denom = 4.0 + (mu - 10.0) * r2 + 6.0 * r2 * r2;
    out.slater_defined = std::abs(denom) >= 1e-12;
    if (denom == 0.0) {
        out.tan_slater = vol == 0.0
                             ? std::numeric_limits<double>::infinity()
                             : std::copysign(
                                   std::numeric_limits<double>::infinity(),
                                   -vol);
    } else {
        out.tan_slater = -r2 * r * vol / denom;
    }
    out.tan_interferometric = -r * vol / mu;
    out.ratio = r2 * mu / (r2 * mu + 4.0 * (1.0 - r2));
    return out;
}

} // namespace uhl
