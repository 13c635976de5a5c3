#include "doctest.h"

#include <cmath>
#include <vector>

#include "hopf.hpp"
#include "support.hpp"
#include "triangle.hpp"

using namespace uhl;
using support::Rng;

namespace {

QuaternionSpinor random_spinor(Rng &rng) {
    const double mix = rng.uniform(0.05, 1.52);
    QuaternionSpinor s;
    s.q0 = rng.rotor() * std::cos(mix);
    s.q1 = rng.rotor() * std::sin(mix);
    return s;
}

QuaternionSpinor gauged(const QuaternionSpinor &s, const Quaternion &g) {
    return {s.q0 * g, s.q1 * g};
}

S4Point random_s4_point(Rng &rng) {
    for (;;) {
        const double c0 = rng.symmetric(), c4 = rng.symmetric();
        const Vec3 v{rng.symmetric(), rng.symmetric(), rng.symmetric()};
        const double n2 = c0 * c0 + norm2(v) + c4 * c4;
        if (n2 < 0.01 || n2 > 1.0)
            continue;
        const double inv = 1.0 / std::sqrt(n2);
        const S4Point p{c0 * inv, v * inv, c4 * inv};
        if (p.u4 > -0.9)
            return p;
    }
}

} // namespace

TEST_CASE("spinor and purification encodings invert each other") {
    Rng rng(91);
    for (int i = 0; i < 200; ++i) {
        const QuaternionSpinor s = random_spinor(rng);
        const QuaternionSpinor back = w_to_spinor(spinor_to_w(s));
        CHECK(support::quat_close(back.q0, s.q0, 1e-14));
        CHECK(support::quat_close(back.q1, s.q1, 1e-14));

        const Vec3 u = rng.ball(0.99);
        const Mat2 w = sqrt_density(u);
        CHECK(support::mat_close(spinor_to_w(w_to_spinor(w)), w, 1e-14));
    }
    CHECK_THROWS_AS(w_to_spinor(Mat2::identity()), DomainError);
}

TEST_CASE("hopf projection lands on the 4-sphere") {
    Rng rng(92);
    for (int i = 0; i < 200; ++i) {
        const S4Point p = hopf_projection(random_spinor(rng));
        const double n2 = p.u0 * p.u0 + norm2(p.u) + p.u4 * p.u4;
        CHECK(support::close(n2, 1.0, 1e-13));
    }
}

TEST_CASE("hopf projection is gauge invariant") {
    Rng rng(93);
    for (int i = 0; i < 200; ++i) {
        const QuaternionSpinor s = random_spinor(rng);
        const S4Point p = hopf_projection(s);
        const S4Point pg = hopf_projection(gauged(s, rng.rotor()));
        CHECK(support::close(p.u0, pg.u0, 1e-13));
        CHECK(support::vec_close(p.u, pg.u, 1e-13));
        CHECK(support::close(p.u4, pg.u4, 1e-13));
    }
}

TEST_CASE("the projection reads off the state of a purification") {
    Rng rng(94);
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = rng.ball(0.99);
        const Mat2 w = sqrt_density(u) * quat_to_mat(rng.rotor());
        const S4Point p = hopf_projection(w_to_spinor(w));
        CHECK(std::abs(p.u0) < 1e-13);
        CHECK(support::vec_close(p.u, u, 1e-13));
        CHECK(support::close(p.u4, concurrence(u), 1e-13));
    }
}

TEST_CASE("the last two coordinates track the determinant") {
    Rng rng(95);
    for (int i = 0; i < 200; ++i) {
        const QuaternionSpinor s = random_spinor(rng);
        const S4Point p = hopf_projection(s);
        const cplx two_det = spinor_to_w(s).det() * 2.0;
        CHECK(support::close(p.u4, two_det.real(), 1e-13));
        CHECK(support::close(p.u0, two_det.imag(), 1e-13));
    }
}

TEST_CASE("canonical section is a right inverse of the projection") {
    Rng rng(96);
    for (int i = 0; i < 200; ++i) {
        const S4Point p = random_s4_point(rng);
        const QuaternionSpinor s = section(p);
        CHECK(support::close(s.q0.norm2() + s.q1.norm2(), 1.0, 1e-13));
        const S4Point back = hopf_projection(s);
        CHECK(support::close(back.u0, p.u0, 1e-12));
        CHECK(support::vec_close(back.u, p.u, 1e-12));
        CHECK(support::close(back.u4, p.u4, 1e-12));
    }
    CHECK_THROWS_AS(section(S4Point{0.0, Vec3{}, -1.0}), DegenerateError);
}

TEST_CASE("on the physical subbundle the section is the root density") {
    Rng rng(97);
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = rng.ball(0.99);
        const QuaternionSpinor direct = section_of_bloch(u);
        const QuaternionSpinor from_w = w_to_spinor(sqrt_density(u));
        CHECK(support::quat_close(direct.q0, from_w.q0, 1e-14));
        CHECK(support::quat_close(direct.q1, from_w.q1, 1e-14));
        CHECK(norm(direct.q0.vec()) < 1e-15);
        CHECK(direct.q0.w > 0.0);
    }
    CHECK_THROWS_AS(section_of_bloch(Vec3{0, 0, 1}), DomainError);
}

TEST_CASE("spinor inner product is a gauge-covariant pairing") {
    Rng rng(98);
    for (int i = 0; i < 200; ++i) {
        const QuaternionSpinor p = random_spinor(rng);
        const QuaternionSpinor q = random_spinor(rng);
        const Quaternion self = spinor_inner(p, p);
        CHECK(support::close(self.w, 1.0, 1e-13));
        CHECK(norm(self.vec()) < 1e-13);
        CHECK(support::quat_close(spinor_inner(p, q).conjugate(),
                                  spinor_inner(q, p), 1e-15));
        const Quaternion g = rng.rotor(), h = rng.rotor();
        const Quaternion covariant =
            spinor_inner(gauged(p, g), gauged(q, h));
        CHECK(support::quat_close(covariant,
                                  g.conjugate() * spinor_inner(p, q) * h,
                                  1e-13));
    }
}

TEST_CASE("in_phase detects aligned purifications") {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const Vec3 u = rng.ball(0.9), v = rng.ball(0.9);
        const QuaternionSpinor p = gauged(section_of_bloch(u), rng.rotor());
        const QuaternionSpinor sec_v = section_of_bloch(v);

        // Aligning v's section to p by the polar part of the inner product
        // produces the parallel-transported representative.
        const Quaternion t = spinor_inner(sec_v, p);
        REQUIRE(t.norm() > 1e-6);
        const QuaternionSpinor q = gauged(sec_v, t.normalized());
        CHECK(in_phase(p, q));
        CHECK(in_phase(p, p));
        // A generic gauge breaks the alignment, as does a sign flip.
        CHECK_FALSE(in_phase(p, gauged(q, Quaternion{0.5, 0.5, 0.5, 0.5})));
        CHECK_FALSE(in_phase(p, gauged(q, Quaternion{-1, 0, 0, 0})));
    }
}

TEST_CASE("in_phase matches matrix parallelity on the subbundle") {
    Rng rng(100);
    for (int i = 0; i < 300; ++i) {
        const Vec3 u = rng.ball(0.9), v = rng.ball(0.9);
        const QuaternionSpinor p = gauged(section_of_bloch(u), rng.rotor());
        QuaternionSpinor q = gauged(section_of_bloch(v), rng.rotor());
        if (i % 2 == 0) {
            const Quaternion t = spinor_inner(q, p);
            q = gauged(q, t.normalized());
        }
        CHECK(in_phase(p, q) == is_parallel(spinor_to_w(p), spinor_to_w(q)));
    }
}

TEST_CASE("pancharatnam holonomy of section spinors is the loop rotation") {
    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const Vec3 u = rng.ball(0.99), v = rng.ball(0.99), w = rng.ball(0.99);
        const std::vector<QuaternionSpinor> sections{
            section_of_bloch(u), section_of_bloch(v), section_of_bloch(w)};
        const Quaternion holo = quaternionic_pancharatnam(sections);
        CHECK(support::quat_close(holo,
                                  triangle_rotation(u, v, w).rotation,
                                  1e-12));
    }
    CHECK_THROWS_AS(quaternionic_pancharatnam({}), DomainError);
}

TEST_CASE("one-point pancharatnam loops are trivial") {
    Rng rng(102);
    const std::vector<QuaternionSpinor> single{
        section_of_bloch(rng.ball(0.9))};
    CHECK(support::quat_close(quaternionic_pancharatnam(single),
                              Quaternion{1, 0, 0, 0}, 1e-14));
}

TEST_CASE("wilson loop approaches the exact holonomy quadratically") {
    const std::vector<Vec3> octant{Vec3{0.5, 0, 0}, Vec3{0, 0.5, 0},
                                   Vec3{0, 0, 0.5}};
    const Quaternion exact =
        triangle_rotation(octant[0], octant[1], octant[2]).rotation;
    const WilsonResult coarse = wilson_loop(octant, 64);
    const WilsonResult fine = wilson_loop(octant, 256);
    const double dev_coarse = quat_distance(coarse.holonomy, exact);
    const double dev_fine = quat_distance(fine.holonomy, exact);
    CHECK(coarse.converged);
    CHECK(fine.converged);
    CHECK(dev_coarse < 1e-4);
    CHECK(dev_fine < 1e-5);
    // Halving the step four times over should gain about a factor 16.
    CHECK(dev_coarse / dev_fine > 8.0);
    CHECK(fine.drift < 1e-3);
}

TEST_CASE("a too-coarse wilson discretization reports non-convergence") {
    const std::vector<Vec3> octant{Vec3{0.5, 0, 0}, Vec3{0, 0.5, 0},
                                   Vec3{0, 0, 0.5}};
    const WilsonResult w = wilson_loop(octant, 16);
    CHECK_FALSE(w.converged);
    CHECK(w.drift > 1e-3);
    CHECK_THROWS_AS(wilson_loop(octant, 0), DomainError);
    CHECK_THROWS_AS(wilson_loop({}, 64), DomainError);
}
