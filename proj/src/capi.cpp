#include "uhlmann/uhlmann.h"

#include <cmath>
#include <new>
#include <vector>

#include "errors.hpp"
#include "hopf.hpp"
#include "triangle.hpp"
#include "transport.hpp"

struct uhl_path {
    std::vector<uhl::Vec3> vertices;
};

namespace {

using uhl::Vec3;

Vec3 to_vec(const double p[3]) { return Vec3{p[0], p[1], p[2]}; }

void store(const Vec3 &v, double out[3]) {
    out[0] = v.x;
    out[1] = v.y;
    out[2] = v.z;
}

void store(const uhl::Quaternion &q, double out[4]) {
    out[0] = q.w;
    out[1] = q.x;
    out[2] = q.y;
    out[3] = q.z;
}

bool finite3(const double p[3]) {
    return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
}

template <typename Fn> uhl_status guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const uhl::DomainError &) {
        return UHL_ERR_DOMAIN;
    } catch (const uhl::DegenerateError &) {
        return UHL_ERR_DEGENERATE;
    } catch (const uhl::PhaseUndefinedError &) {
        return UHL_ERR_PHASE_UNDEFINED;
    } catch (const uhl::ConvergenceError &) {
        return UHL_ERR_NOT_CONVERGED;
    } catch (...) {
        return UHL_ERR_INVALID_ARGUMENT;
    }
}

} // namespace

extern "C" {

const char *uhl_status_string(uhl_status s) {
    switch (s) {
    case UHL_OK:
        return "ok";
    case UHL_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case UHL_ERR_DOMAIN:
        return "domain error";
    case UHL_ERR_DEGENERATE:
        return "degenerate configuration";
    case UHL_ERR_PHASE_UNDEFINED:
        return "phase undefined";
    case UHL_ERR_NOT_CONVERGED:
        return "not converged";
    }
    return "unknown status";
}

const char *uhl_version(void) { return "1.0.0"; }

uhl_status uhl_fidelity(const double u[3], const double v[3], double *out) {
    if (u == nullptr || v == nullptr || out == nullptr || !finite3(u) ||
        !finite3(v))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = uhl::fidelity(to_vec(u), to_vec(v));
        return UHL_OK;
    });
}

uhl_status uhl_geodesic_distance(const double u[3], const double v[3],
                                 double *out, int *unique) {
    if (u == nullptr || v == nullptr || out == nullptr || !finite3(u) ||
        !finite3(v))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::GeodesicDistance d =
            uhl::geodesic_distance(to_vec(u), to_vec(v));
        *out = d.delta;
        if (unique != nullptr)
            *unique = d.unique ? 1 : 0;
        return UHL_OK;
    });
}

uhl_status uhl_geodesic_interpolate(const double u[3], const double v[3],
                                    double t, double out[3]) {
    if (u == nullptr || v == nullptr || out == nullptr || !finite3(u) ||
        !finite3(v) || !std::isfinite(t))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::geodesic_interpolate(to_vec(u), to_vec(v), t), out);
        return UHL_OK;
    });
}

uhl_status uhl_thomas_rotation(const double u[3], const double v[3],
                               double quat[4]) {
    if (u == nullptr || v == nullptr || quat == nullptr || !finite3(u) ||
        !finite3(v))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::thomas_rotation(to_vec(u), to_vec(v)), quat);
        return UHL_OK;
    });
}

uhl_status uhl_thomas_rotation_oracle(const double u[3], const double v[3],
                                      double quat[4]) {
    if (u == nullptr || v == nullptr || quat == nullptr || !finite3(u) ||
        !finite3(v))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::thomas_rotation_oracle(to_vec(u), to_vec(v)), quat);
        return UHL_OK;
    });
}

uhl_status uhl_rotation_axis_angle(const double quat[4], double *angle,
                                   double axis[3]) {
    if (quat == nullptr || angle == nullptr || axis == nullptr)
        return UHL_ERR_INVALID_ARGUMENT;
    const uhl::Quaternion q{quat[0], quat[1], quat[2], quat[3]};
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z) || q.norm() < 1e-12)
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::AxisAngle aa = uhl::quat_to_axis_angle(q);
        *angle = aa.angle;
        store(aa.axis, axis);
        return UHL_OK;
    });
}

uhl_status uhl_hyperbolic_translate(const double a[3], const double b[3],
                                    double out[3]) {
    if (a == nullptr || b == nullptr || out == nullptr || !finite3(a) ||
        !finite3(b))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::hyperbolic_translate(to_vec(a), to_vec(b)), out);
        return UHL_OK;
    });
}

uhl_status uhl_triangle(const double u[3], const double v[3],
                        const double w[3], uhl_triangle_result *out) {
    if (u == nullptr || v == nullptr || w == nullptr || out == nullptr ||
        !finite3(u) || !finite3(v) || !finite3(w))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::TriangleResult t =
            uhl::triangle_rotation(to_vec(u), to_vec(v), to_vec(w));
        store(t.rotation, out->rotation);
        out->delta = t.delta;
        store(t.axis, out->axis);
        out->visibility = t.visibility;
        store(t.p, out->p);
        store(t.q, out->q);
        out->volume = t.volume;
        out->mu = t.mu;
        if (!t.phase_defined)
            return UHL_ERR_PHASE_UNDEFINED;
        out->phase = t.phase;
        return UHL_OK;
    });
}

uhl_status uhl_solid_angle_phase(const double n1[3], const double n2[3],
                                 const double n3[3], double *phase,
                                 double *omega) {
    if (n1 == nullptr || n2 == nullptr || n3 == nullptr || phase == nullptr ||
        omega == nullptr || !finite3(n1) || !finite3(n2) || !finite3(n3))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::SolidAnglePhase s =
            uhl::solid_angle_phase(to_vec(n1), to_vec(n2), to_vec(n3));
        *phase = s.phase;
        *omega = s.omega;
        return UHL_OK;
    });
}

uhl_status uhl_fixed_radius_phase(const double n1[3], const double n2[3],
                                  const double n3[3], double r,
                                  double *phase) {
    if (n1 == nullptr || n2 == nullptr || n3 == nullptr || phase == nullptr ||
        !finite3(n1) || !finite3(n2) || !finite3(n3) || !std::isfinite(r))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *phase = uhl::fixed_radius_phase(to_vec(n1), to_vec(n2), to_vec(n3), r);
        return UHL_OK;
    });
}

uhl_status uhl_slater_phase(const double n1[3], const double n2[3],
                            const double n3[3], double r, double *phase) {
    if (n1 == nullptr || n2 == nullptr || n3 == nullptr || phase == nullptr ||
        !finite3(n1) || !finite3(n2) || !finite3(n3) || !std::isfinite(r))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *phase = uhl::slater_phase(to_vec(n1), to_vec(n2), to_vec(n3), r);
        return UHL_OK;
    });
}

uhl_status uhl_interferometric_phase(double omega, double r, double *phase) {
    if (phase == nullptr || !std::isfinite(omega) || !std::isfinite(r))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *phase = uhl::interferometric_phase(omega, r);
        return UHL_OK;
    });
}

uhl_status uhl_compare_slater(const double n1[3], const double n2[3],
                              const double n3[3], double r,
                              uhl_slater_comparison *out) {
    if (n1 == nullptr || n2 == nullptr || n3 == nullptr || out == nullptr ||
        !finite3(n1) || !finite3(n2) || !finite3(n3) || !std::isfinite(r))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::SlaterComparison c =
            uhl::compare_slater(to_vec(n1), to_vec(n2), to_vec(n3), r);
        out->r = c.r;
        out->mu = c.mu;
        out->omega = c.omega;
        out->tan_uhlmann = c.tan_uhlmann;
        out->tan_slater = c.tan_slater;
        out->tan_interferometric = c.tan_interferometric;
        out->ratio = c.ratio;
        return c.slater_defined ? UHL_OK : UHL_ERR_DEGENERATE;
    });
}

uhl_path *uhl_path_create(void) { return new (std::nothrow) uhl_path; }

void uhl_path_destroy(uhl_path *p) { delete p; }

uhl_status uhl_path_push(uhl_path *p, const double u[3]) {
    if (p == nullptr || u == nullptr || !finite3(u))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const Vec3 v = to_vec(u);
        uhl::require_interior(v);
        p->vertices.push_back(v);
        return UHL_OK;
    });
}

size_t uhl_path_size(const uhl_path *p) {
    return p == nullptr ? 0 : p->vertices.size();
}

uhl_status uhl_path_transport(const uhl_path *p, double quat[4]) {
    if (p == nullptr || quat == nullptr)
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::path_transport(p->vertices), quat);
        return UHL_OK;
    });
}

uhl_status uhl_path_holonomy(const uhl_path *p, int reverse_orientation,
                             uhl_holonomy_result *out) {
    if (p == nullptr || out == nullptr)
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::HolonomyResult h =
            uhl::polygon_holonomy(p->vertices, reverse_orientation != 0);
        store(h.rotation, out->rotation);
        out->angle = h.angle;
        store(h.axis, out->axis);
        out->visibility = h.visibility;
        if (!h.phase_defined)
            return UHL_ERR_PHASE_UNDEFINED;
        out->phase = h.phase;
        return UHL_OK;
    });
}

uhl_status uhl_refined_geodesic_holonomy(const double u[3], const double v[3],
                                         int n_subdiv, double quat[4],
                                         double *deviation) {
    if (u == nullptr || v == nullptr || quat == nullptr || !finite3(u) ||
        !finite3(v))
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        store(uhl::refined_geodesic_holonomy(to_vec(u), to_vec(v), n_subdiv,
                                             deviation),
              quat);
        return UHL_OK;
    });
}

uhl_status uhl_pancharatnam_holonomy(const uhl_path *p, double quat[4]) {
    if (p == nullptr || quat == nullptr)
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<uhl::QuaternionSpinor> spinors;
        spinors.reserve(p->vertices.size());
        for (const Vec3 &v : p->vertices)
            spinors.push_back(uhl::section_of_bloch(v));
        store(uhl::quaternionic_pancharatnam(spinors), quat);
        return UHL_OK;
    });
}

uhl_status uhl_wilson_loop(const uhl_path *p, int n_steps, double quat[4]) {
    if (p == nullptr || quat == nullptr)
        return UHL_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const uhl::WilsonResult w = uhl::wilson_loop(p->vertices, n_steps);
        store(w.holonomy, quat);
        return w.converged ? UHL_OK : UHL_ERR_NOT_CONVERGED;
    });
}

} /* extern "C" */
