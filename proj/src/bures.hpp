#pragma once

// Bures fidelity and the spherical geometry it induces on the Bloch ball:
// interior states embed as (u, C) on the upper hemisphere of S^3, where
// fidelity becomes cos^2 of half the great-circle distance.

#include "state.hpp"

namespace uhl {

// F(u, v) = (1 + u.v + C_u C_v) / 2, clamped to [0, 1].
double fidelity(const Vec3 &u, const Vec3 &v);

struct GeodesicDistance {
    double delta = 0.0; // 2 acos(sqrt F), in [0, pi]
    bool unique = true; // false for orthogonal pure states (F = 0)
};

GeodesicDistance geodesic_distance(const Vec3 &u, const Vec3 &v);

// Point at parameter t in [0, 1] of the great-circle arc between the
// hemisphere embeddings of u and v, projected back to the Bloch ball.
// Both endpoints must be strictly mixed.
Vec3 geodesic_interpolate(const Vec3 &u, const Vec3 &v, double t,
                          double eps = kInteriorEps);

} // namespace uhl
