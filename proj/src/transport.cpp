#include "transport.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace uhl {

Quaternion thomas_rotation(const Vec3 &u, const Vec3 &v, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    const double cu = concurrence(u);
    const double cv = concurrence(v);
    const double k = (1.0 + cu) * (1.0 + cv) + dot(u, v);
    const Vec3 c = cross(u, v);
    const double n = std::sqrt(k * k + norm2(c));
    return Quaternion{k / n, -c.x / n, -c.y / n, -c.z / n};
}

Quaternion thomas_rotation_oracle(const Vec3 &u, const Vec3 &v, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    const double cu = concurrence(u);
    const double cv = concurrence(v);
    const Mat2 rho_u = bloch_to_density(u);
    const Mat2 sqrt_v = sqrt_density(v);
    const Mat2 inner = sqrt_v * rho_u * sqrt_v;
    const Mat2 root = mat_sqrt_2x2_with_det(inner, cu * cv / 4.0);
    const Mat2 y = inv_sqrt_density(u) * inv_sqrt_density(v) * root;
    return mat_to_quat(y).normalized();
}

Quaternion renormalized_rotation(const Vec3 &a, const Vec3 &b) {
    const double ab = dot(a, b);
    const Vec3 c = cross(a, b);
    const double n2 = 1.0 + 2.0 * ab + norm2(a) * norm2(b);
    if (n2 <= 0.0)
        throw DegenerateError("renormalized_rotation: antipodal unit vectors");
    const double n = std::sqrt(n2);
    return Quaternion{(1.0 + ab) / n, -c.x / n, -c.y / n, -c.z / n};
}

Mat2 segment_x(const Vec3 &u, const Vec3 &v, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    const double cu = concurrence(u);
    const double cv = concurrence(v);
    const Mat2 sqrt_v = sqrt_density(v);
    const Mat2 inv_sqrt_v = inv_sqrt_density(v);
    const Mat2 inner = sqrt_v * bloch_to_density(u) * sqrt_v;
    const Mat2 root = mat_sqrt_2x2_with_det(inner, cu * cv / 4.0);
    return inv_sqrt_v * root * inv_sqrt_v;
}

Vec3 hyperbolic_translate(const Vec3 &a, const Vec3 &b) {
    require_bloch(a);
    require_bloch(b);
    const double ab = dot(a, b);
    const double denom = 1.0 + 2.0 * ab + norm2(a) * norm2(b);
    if (denom < 1e-300)
        throw DegenerateError("hyperbolic_translate: antipodal unit vectors");
    const double sb = (1.0 - norm2(a)) / denom;
    const double sa = (1.0 + 2.0 * ab + norm2(b)) / denom;
    return b * sb + a * sa;
}

void attach_phase(HolonomyResult &h, const Vec3 &base) {
    const double re = h.rotation.w;
    const double im = -(h.rotation.x * base.x + h.rotation.y * base.y +
                        h.rotation.z * base.z);
    h.visibility = std::hypot(re, im);
    if (h.visibility < kVisibilityFloor) {
        h.phase = 0.0;
        h.phase_defined = false;
        return;
    }
    h.phase = std::atan2(im, re);
    if (h.phase <= -M_PI)
        h.phase = M_PI;
    h.phase_defined = true;
}

void attach_angle_axis(HolonomyResult &h) {
    const Vec3 v = h.rotation.vec();
    const double s = norm(v);
    h.angle = 2.0 * std::atan2(s, h.rotation.w);
    if (s < 1e-14) {
        h.axis = Vec3{0.0, 0.0, 1.0};
    } else {
        h.axis = v * (-1.0 / s);
    }
}

Quaternion path_transport(const std::vector<Vec3> &vertices, double eps) {
    if (vertices.size() < 2)
        throw DomainError("path_transport: need at least two vertices");
    Quaternion q{1.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        q = thomas_rotation(vertices[i + 1], vertices[i], eps) * q;
    return q;
}

HolonomyResult polygon_holonomy(const std::vector<Vec3> &vertices,
                                bool reverse_orientation, double eps) {
    if (vertices.size() < 2)
        throw DomainError("polygon_holonomy: need at least two vertices");
    std::vector<Vec3> loop = vertices;
    if (reverse_orientation)
        std::reverse(loop.begin() + 1, loop.end());
    loop.push_back(loop.front());
    HolonomyResult h;
    h.rotation = path_transport(loop, eps);
    attach_angle_axis(h);
    attach_phase(h, vertices.front());
    return h;
}

Quaternion refined_geodesic_holonomy(const Vec3 &u, const Vec3 &v, int n_subdiv,
                                     double *deviation, double eps) {
    if (n_subdiv < 1)
        throw DomainError("refined_geodesic_holonomy: need n_subdiv >= 1");
    Quaternion q{1.0, 0.0, 0.0, 0.0};
    Vec3 prev = u;
    for (int i = 1; i <= n_subdiv; ++i) {
        const Vec3 next = (i == n_subdiv)
                              ? v
                              : geodesic_interpolate(
                                    u, v, static_cast<double>(i) / n_subdiv, eps);
        q = thomas_rotation(next, prev, eps) * q;
        prev = next;
    }
    if (deviation != nullptr)
        *deviation = quat_distance(q, thomas_rotation(v, u, eps));
    return q;
}

} // namespace uhl
