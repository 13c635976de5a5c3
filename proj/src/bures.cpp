#include "bures.hpp"

#include <algorithm>

namespace uhl {

double fidelity(const Vec3 &u, const Vec3 &v) {
    const double f = 0.5 * (1.0 + dot(u, v) + concurrence(u) * concurrence(v));
    return std::clamp(f, 0.0, 1.0);
}

GeodesicDistance geodesic_distance(const Vec3 &u, const Vec3 &v) {
    const double f = fidelity(u, v);
    if (f == 0.0) return {M_PI, false};
    return {2.0 * std::acos(std::min(1.0, std::sqrt(f))), true};
}

Vec3 geodesic_interpolate(const Vec3 &u, const Vec3 &v, double t, double eps) {
    require_interior(u, eps);
    require_interior(v, eps);
    if (t < 0.0 || t > 1.0)
        throw DomainError("interpolation parameter must lie in [0, 1]");
    const double cu = concurrence(u), cv = concurrence(v);
    const double cosd = std::clamp(dot(u, v) + cu * cv, -1.0, 1.0);
    const double d = std::acos(cosd);
    if (d < 1e-15) return u;
    const double su = std::sin((1.0 - t) * d) / std::sin(d);
    const double sv = std::sin(t * d) / std::sin(d);
    // Interior endpoints keep the whole minor arc on the upper hemisphere.
    return u * su + v * sv;
}

} // namespace uhl
