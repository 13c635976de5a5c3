/**
 * @file uhlmann.h
 * @brief C interface for mixed-state geometric phases of one-qubit density
 *        matrices.
 *
 * A density matrix is addressed by its Bloch vector u (|u| <= 1), stored as
 * double[3].  SU(2) rotations are returned as unit quaternions, stored as
 * double[4] in (w, x, y, z) order.  Holonomy quaternions are exact group
 * elements: q and -q are distinct results (they differ by pi in the phase),
 * so no sign canonicalization is applied to them.  Only the axis-angle
 * decomposition canonicalizes the sign (w >= 0, then x >= 0, ...) to make
 * its output reproducible.  Angles are radians.
 *
 * Every function returns a status code; output parameters are written only
 * on UHL_OK unless stated otherwise.  All computations are pure and
 * thread-safe; the only stateful object is the opaque path builder.
 */
#ifndef UHLMANN_H
#define UHLMANN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uhl_status {
    UHL_OK = 0,
    UHL_ERR_INVALID_ARGUMENT = 1, /**< null pointer, malformed value */
    UHL_ERR_DOMAIN = 2,           /**< input outside the operation's domain */
    UHL_ERR_DEGENERATE = 3,       /**< degenerate configuration (pole, antipodal pair, zero denominator) */
    UHL_ERR_PHASE_UNDEFINED = 4,  /**< visibility below the floor; phase meaningless */
    UHL_ERR_NOT_CONVERGED = 5     /**< discretization too coarse */
} uhl_status;

/** Human-readable name of a status code. Never returns NULL. */
const char *uhl_status_string(uhl_status s);

/** Library version as "major.minor.patch". */
const char *uhl_version(void);

/* ------------------------------------------------------------------ */
/* Two-state quantities                                                */
/* ------------------------------------------------------------------ */

/** Bures fidelity F(u,v) = (1 + u.v + C_u C_v)/2 into *out. */
uhl_status uhl_fidelity(const double u[3], const double v[3], double *out);

/**
 * Bures geodesic distance Delta = 2 acos(sqrt F).
 * For orthogonal pure states (F == 0) writes pi and sets *unique to 0:
 * the connecting geodesic is not unique.  Otherwise *unique is 1.
 * The unique flag may be NULL.
 */
uhl_status uhl_geodesic_distance(const double u[3], const double v[3],
                                 double *out, int *unique);

/**
 * Point at parameter t in [0,1] on the Bures geodesic from u to v,
 * realized as the great-circle arc through (u, C_u) and (v, C_v) on S^3.
 * Requires F(u,v) > 0 and both states strictly mixed.
 */
uhl_status uhl_geodesic_interpolate(const double u[3], const double v[3],
                                    double t, double out[3]);

/**
 * Closed-form segment holonomy of Uhlmann transport from v to u
 * (destination first):
 *   Y = (k I + i (u x v).sigma) / sqrt(k^2 + |u x v|^2),
 *   k = (1 + C_u)(1 + C_v) + u.v.
 * Requires both states strictly mixed.
 */
uhl_status uhl_thomas_rotation(const double u[3], const double v[3],
                               double quat[4]);

/**
 * Same rotation computed the brute-force way, as
 * rho_u^{-1/2} rho_v^{-1/2} (rho_v^{1/2} rho_u rho_v^{1/2})^{1/2},
 * using the 2x2 matrix square root and explicit inverses.
 */
uhl_status uhl_thomas_rotation_oracle(const double u[3], const double v[3],
                                      double quat[4]);

/**
 * Axis-angle decomposition of a unit quaternion.  The angle lands in
 * (-pi, pi]; a zero rotation reports the canonical +z axis.
 */
uhl_status uhl_rotation_axis_angle(const double quat[4], double *angle,
                                   double axis[3]);

/**
 * Hyperbolic translation of b by a inside the Poincare ball:
 *   tau_a(b) = ((1-|a|^2) b + (1 + 2 a.b + |b|^2) a) / (1 + 2 a.b + |a|^2 |b|^2).
 * Requires |a| < 1 and |b| < 1.
 */
uhl_status uhl_hyperbolic_translate(const double a[3], const double b[3],
                                    double out[3]);

/* ------------------------------------------------------------------ */
/* Geodesic triangles                                                  */
/* ------------------------------------------------------------------ */

typedef struct uhl_triangle_result {
    double rotation[4]; /**< loop holonomy u->v->w->u as unit quaternion */
    double delta;       /**< rotation angle in [0, 2 pi] (2 pi only for -I) */
    double axis[3];     /**< rotation axis (canonical +z when delta == 0) */
    double phase;       /**< geometric phase arg Tr(rotation rho_u), in (-pi, pi] */
    double visibility;  /**< |Tr(rotation rho_u)| in [0, 1] */
    double p[3];        /**< axis-construction vector belonging to the u->w leg */
    double q[3];        /**< axis-construction vector belonging to the u->v leg */
    double volume;      /**< oriented volume u.(v x w) */
    double mu;          /**< 1 + sum of pairwise dots of the unit directions
                             (NaN when a vertex sits at the origin) */
} uhl_triangle_result;

/**
 * Full closed-form holonomy data of the geodesic triangle u -> v -> w -> u.
 * Requires strictly mixed vertices with pairwise positive fidelities.
 * Returns UHL_ERR_PHASE_UNDEFINED when the visibility is below 1e-12;
 * in that case every field except phase is still written.
 */
uhl_status uhl_triangle(const double u[3], const double v[3],
                        const double w[3], uhl_triangle_result *out);

/**
 * Pure-state limit: geometric phase and oriented solid angle of the
 * spherical triangle (n1, n2, n3),
 *   Omega = 2 atan2(n1.(n2 x n3), 1 + n1.n2 + n2.n3 + n3.n1),
 * phase = -Omega/2.  Inputs must be unit vectors, no antipodal pair.
 */
uhl_status uhl_solid_angle_phase(const double n1[3], const double n2[3],
                                 const double n3[3], double *phase,
                                 double *omega);

/**
 * Geometric phase of the triangle with vertices r*n1, r*n2, r*n3 via
 *   tan(phase) = -r^3 n1.(n2 x n3) / (4(1-r^2) + r^2 mu),
 *   mu = 1 + n1.n2 + n2.n3 + n3.n1,
 * with the quadrant fixed by the trace formula.  Requires 0 < r <= 1;
 * at r == 1 this reduces to the solid-angle phase.
 */
uhl_status uhl_fixed_radius_phase(const double n1[3], const double n2[3],
                                  const double n3[3], double r,
                                  double *phase);

/**
 * Slater's published (erroneous) fixed-radius phase,
 *   tan(phase) = -r^3 mu tan(Omega/2) / (4 + (mu - 10) r^2 + 6 r^4),
 * kept verbatim as a comparison target.  Returns UHL_ERR_DEGENERATE when
 * the denominator vanishes.
 */
uhl_status uhl_slater_phase(const double n1[3], const double n2[3],
                            const double n3[3], double r, double *phase);

/**
 * Interferometric mixed-state phase tan(phase) = -r tan(Omega/2).
 * Returns UHL_ERR_DEGENERATE at Omega == pi where the tangent blows up.
 */
uhl_status uhl_interferometric_phase(double omega, double r, double *phase);

typedef struct uhl_slater_comparison {
    double r;
    double mu;                  /**< 1 + n1.n2 + n2.n3 + n3.n1 */
    double omega;               /**< oriented solid angle */
    double tan_uhlmann;         /**< tangent of the Uhlmann phase */
    double tan_slater;          /**< tangent of Slater's formula (inf when degenerate) */
    double tan_interferometric; /**< tangent of the interferometric phase */
    double ratio;               /**< r^2 mu / (r^2 mu + 4(1 - r^2)) */
} uhl_slater_comparison;

/**
 * One row of the Uhlmann / Slater / interferometric comparison at radius r.
 * Degenerate Slater denominators yield an infinite tan_slater together
 * with UHL_ERR_DEGENERATE; the other fields are still written.
 */
uhl_status uhl_compare_slater(const double n1[3], const double n2[3],
                              const double n3[3], double r,
                              uhl_slater_comparison *out);

/* ------------------------------------------------------------------ */
/* Polygon paths                                                       */
/* ------------------------------------------------------------------ */

/** Opaque builder for a polygon of Bloch vectors. */
typedef struct uhl_path uhl_path;

/** New empty path. Returns NULL on allocation failure. */
uhl_path *uhl_path_create(void);

/** Destroy a path (NULL is allowed). */
void uhl_path_destroy(uhl_path *p);

/** Append a strictly mixed vertex. */
uhl_status uhl_path_push(uhl_path *p, const double u[3]);

/** Number of vertices pushed so far. */
size_t uhl_path_size(const uhl_path *p);

typedef struct uhl_holonomy_result {
    double rotation[4];
    double angle;      /**< rotation angle in [0, 2 pi] (2 pi only for -I) */
    double axis[3];
    double phase;      /**< in (-pi, pi] */
    double visibility; /**< in [0, 1] */
} uhl_holonomy_result;

/**
 * Ordered product of segment rotations along the open chain
 * v0 -> v1 -> ... -> vm (earliest segment rightmost).  Needs >= 2 vertices
 * and consecutive positive fidelities.
 */
uhl_status uhl_path_transport(const uhl_path *p, double quat[4]);

/**
 * Holonomy of the closed loop v0 -> v1 -> ... -> vm -> v0 (the return leg
 * is implicit; do not repeat the first vertex).  The phase and visibility
 * are taken against rho of the first vertex.  With reverse_orientation
 * nonzero the loop is traversed backwards, conjugating the phase.
 * Returns UHL_ERR_PHASE_UNDEFINED when visibility < 1e-12 (rotation,
 * angle, axis and visibility are still written).
 */
uhl_status uhl_path_holonomy(const uhl_path *p, int reverse_orientation,
                             uhl_holonomy_result *out);

/**
 * Product of segment rotations along the geodesic from u to v subdivided
 * into n equal-arc pieces (a single piece reproduces uhl_thomas_rotation
 * exactly).  *deviation, which may be NULL, receives the max quaternion
 * component difference from the unsubdivided rotation.
 */
uhl_status uhl_refined_geodesic_holonomy(const double u[3], const double v[3],
                                         int n_subdiv, double quat[4],
                                         double *deviation);

/* ------------------------------------------------------------------ */
/* Quaternionic bundle picture                                         */
/* ------------------------------------------------------------------ */

/**
 * Holonomy of the closed loop over the path's vertices computed in the
 * quaternionic picture: chained Pancharatnam phase factors of the
 * canonical section spinors.  Agrees with uhl_path_holonomy's rotation.
 */
uhl_status uhl_pancharatnam_holonomy(const uhl_path *p, double quat[4]);

/**
 * Wilson loop of the bundle connection along the closed loop over the
 * path's vertices, discretized into n_steps first-order factors with
 * per-step renormalization.  Converges to the Pancharatnam holonomy as
 * n_steps grows; UHL_ERR_NOT_CONVERGED signals renormalization drift
 * beyond 1e-3 (the result is still written).
 */
uhl_status uhl_wilson_loop(const uhl_path *p, int n_steps, double quat[4]);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UHLMANN_H */
