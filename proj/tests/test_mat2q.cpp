#include "doctest.h"

#include <cmath>

#include "mat2q.hpp"
#include "support.hpp"

using namespace uhl;
using support::Rng;

TEST_CASE("vector algebra identities") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Vec3 a = rng.ball(), b = rng.ball(), c = rng.ball();
        CHECK(support::vec_close(cross(a, b), -cross(b, a), 1e-15));
        CHECK(std::abs(dot(a, cross(a, b))) < 1e-15);
        CHECK(support::close(dot(a, cross(b, c)), dot(c, cross(a, b)), 1e-14));
        CHECK(support::close(norm2(cross(a, b)),
                             norm2(a) * norm2(b) - dot(a, b) * dot(a, b),
                             1e-14));
    }
}

TEST_CASE("quaternion product is associative and norm-multiplicative") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Quaternion p = rng.rotor() * rng.uniform(0.1, 2.0);
        const Quaternion q = rng.rotor() * rng.uniform(0.1, 2.0);
        const Quaternion r = rng.rotor();
        CHECK(support::quat_close((p * q) * r, p * (q * r), 1e-14));
        CHECK(support::close((p * q).norm(), p.norm() * q.norm(), 1e-14));
        CHECK(support::quat_close((p * q).conjugate(),
                                  q.conjugate() * p.conjugate(), 1e-15));
        CHECK(support::close((p.conjugate() * p).w, p.norm2(), 1e-14));
        CHECK(norm((p.conjugate() * p).vec()) < 1e-14);
    }
}

TEST_CASE("quaternion basis obeys ij = k") {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(support::quat_close(i * j, k, 0.0));
    CHECK(support::quat_close(j * k, i, 0.0));
    CHECK(support::quat_close(k * i, j, 0.0));
    CHECK(support::quat_close(i * i, Quaternion{-1, 0, 0, 0}, 0.0));
}

TEST_CASE("sign_canonical picks one representative of {q, -q}") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = rng.rotor();
        CHECK(support::quat_close(q.sign_canonical(), (-q).sign_canonical(),
                                  0.0));
        CHECK(q.sign_canonical().w >= 0.0);
    }
    CHECK(Quaternion{0, -1, 0, 0}.sign_canonical().x == 1.0);
    CHECK(Quaternion{0, 0, 0, -1}.sign_canonical().z == 1.0);
}

TEST_CASE("quat_to_mat is a homomorphism into SU(2)") {
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const Quaternion p = rng.rotor(), q = rng.rotor();
        CHECK(support::mat_close(quat_to_mat(p * q),
                                 quat_to_mat(p) * quat_to_mat(q), 1e-14));
        CHECK(is_unitary_det1(quat_to_mat(p)));
        CHECK(support::mat_close(quat_to_mat(p.conjugate()),
                                 quat_to_mat(p).adjoint(), 0.0));
    }
    CHECK(support::mat_close(quat_to_mat(Quaternion{1, 0, 0, 0}),
                             Mat2::identity(), 0.0));
}

TEST_CASE("mat_to_quat inverts quat_to_mat exactly") {
    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        const Quaternion q = rng.rotor() * rng.uniform(0.1, 2.0);
        CHECK(support::quat_close(mat_to_quat(quat_to_mat(q)), q, 0.0));
    }
}

TEST_CASE("imaginary pauli combinations embed as pure quaternions") {
    Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        const Vec3 n = rng.ball();
        const Mat2 lhs = pauli_dot(n) * cplx{0.0, 1.0};
        const Mat2 rhs = quat_to_mat(Quaternion{0.0, -n.x, -n.y, -n.z});
        CHECK(support::mat_close(lhs, rhs, 0.0));
    }
}

TEST_CASE("pauli_dot multiplication rule") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const Vec3 a = rng.ball(), b = rng.ball();
        const Mat2 prod = pauli_dot(a) * pauli_dot(b);
        const Mat2 expect =
            Mat2::identity() * dot(a, b) +
            pauli_dot(cross(a, b)) * cplx{0.0, 1.0};
        CHECK(support::mat_close(prod, expect, 1e-15));
    }
}

TEST_CASE("matrix square root against the spectral form") {
    Rng rng(18);
    for (int i = 0; i < 300; ++i) {
        // Random positive definite Hermitian with unit trace.
        const Vec3 u = rng.ball(0.999);
        Mat2 m = (Mat2::identity() + pauli_dot(u)) * 0.5;
        const double scale = rng.uniform(0.2, 3.0);
        m = m * scale;
        const Mat2 root = mat_sqrt_2x2(m);
        CHECK(is_hermitian(root));
        CHECK(support::mat_close(root * root, m, 1e-12));
        CHECK(support::mat_close(root, support::spectral_sqrt(m), 1e-12));
    }
}

TEST_CASE("matrix square root with known determinant near the boundary") {
    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        Vec3 u = rng.sphere() * (1.0 - 1e-12);
        const Mat2 m = (Mat2::identity() + pauli_dot(u)) * 0.5;
        const double sqrt_det = 0.5 * std::sqrt(std::max(0.0, 1.0 - norm2(u)));
        const Mat2 root = mat_sqrt_2x2_with_det(m, sqrt_det);
        CHECK(support::mat_close(root * root, m, 1e-10));
    }
}

TEST_CASE("matrix square root rejects a non-Hermitian argument") {
    const Mat2 m{cplx{1.0, 0.0}, cplx{0.5, 0.0}, cplx{0.1, 0.0},
                 cplx{1.0, 0.0}};
    CHECK_THROWS_AS(mat_sqrt_2x2(m), DomainError);
}

TEST_CASE("inverse via adjugate") {
    Rng rng(20);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = rng.rotor() * rng.uniform(0.3, 2.0);
        const Mat2 m = quat_to_mat(q);
        CHECK(support::mat_close(m * m.inverse(), Mat2::identity(), 1e-13));
        CHECK(support::mat_close(m.inverse() * m, Mat2::identity(), 1e-13));
    }
}

TEST_CASE("axis-angle round trip") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const Quaternion q = rng.rotor();
        const AxisAngle aa = quat_to_axis_angle(q);
        CHECK(aa.angle >= 0.0);
        CHECK(aa.angle <= 3.14159265358979324);
        CHECK(support::close(norm(aa.axis), 1.0, 1e-12));
        CHECK(support::quat_close(axis_angle_to_quat(aa), q.sign_canonical(),
                                  1e-13));
        const AxisAngle from_mat = mat_to_axis_angle(quat_to_mat(q));
        CHECK(support::close(from_mat.angle, aa.angle, 1e-12));
        CHECK(support::vec_close(from_mat.axis, aa.axis, 1e-10));
    }
}

TEST_CASE("axis-angle of the identity is canonical") {
    const AxisAngle aa = quat_to_axis_angle(Quaternion{1, 0, 0, 0});
    CHECK(aa.angle == 0.0);
    CHECK(aa.axis.z == 1.0);
    const AxisAngle neg = quat_to_axis_angle(Quaternion{-1, 0, 0, 0});
    CHECK(neg.angle == 0.0);
}

TEST_CASE("mat_to_axis_angle rejects a non-unitary argument") {
    CHECK_THROWS_AS(mat_to_axis_angle(Mat2::identity() * 2.0), DomainError);
}
