#include "wignerlab/spin_algebra.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Geometry>

#include <random>

using namespace wignerlab;

namespace {
double mdiff(const Mat2c& a, const Mat2c& b) { return (a - b).cwiseAbs().maxCoeff(); }
double mdiff4(const Mat4c& a, const Mat4c& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("pauli algebra") {
    CHECK(mdiff(pauli_x() * pauli_x(), Mat2c::Identity()) < 1e-15);
    CHECK(mdiff(pauli_y() * pauli_y(), Mat2c::Identity()) < 1e-15);
    CHECK(mdiff(pauli_z() * pauli_z(), Mat2c::Identity()) < 1e-15);
    CHECK(mdiff(pauli_x() * pauli_y() - pauli_y() * pauli_x(), 2.0 * iu * pauli_z()) < 1e-15);
    CHECK(mdiff(pauli_x() * pauli_y() + pauli_y() * pauli_x(), Mat2c::Zero()) < 1e-15);
}

TEST_CASE("su2 rotation basics") {
    CHECK(mdiff(su2_rotation(Axis::Y, 0.0).matrix, Mat2c::Identity()) < 1e-15);
    // Spinor double cover: a full turn is -1.
    CHECK(mdiff(su2_rotation(Axis::Y, 2.0 * pi).matrix, -Mat2c::Identity()) < 1e-12);

    // R_y(pi) flips spin-up to spin-down up to a global phase.
    const Eigen::Vector2cd up(1.0, 0.0);
    const Eigen::Vector2cd flipped = su2_rotation(Axis::Y, pi).matrix * up;
    CHECK(std::abs(flipped(0)) < 1e-14);
    CHECK_THAT(std::abs(flipped(1)), Catch::Matchers::WithinAbs(1.0, 1e-14));

    CHECK_THROWS_AS(su2_rotation(Vec3(1.0, 1.0, 0.0), 0.5), std::domain_error);
}

TEST_CASE("su2 rotation properties over random parameters") {
    std::uniform_real_distribution<double> ang(-2.0 * pi, 2.0 * pi);
    double unitarity = 0.0, det_err = 0.0, comp = 0.0, adj = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Vec3 n = testhelp::random_unit_axis();
        const double a = ang(testhelp::rng());
        const double b = ang(testhelp::rng());
        const Mat2c ra = su2_rotation(n, a).matrix;
        const Mat2c rb = su2_rotation(n, b).matrix;
        unitarity = std::max(unitarity, mdiff(ra.adjoint() * ra, Mat2c::Identity()));
        det_err = std::max(det_err, std::abs(ra.determinant() - cplx(1.0, 0.0)));
        comp = std::max(comp, mdiff(ra * rb, su2_rotation(n, a + b).matrix));
        adj = std::max(adj, mdiff(ra.adjoint(), su2_rotation(n, -a).matrix));
    }
    CHECK(unitarity < 1e-12);
    CHECK(det_err < 1e-12);
    CHECK(comp < 1e-12);
    CHECK(adj < 1e-12);
}

TEST_CASE("bell states") {
    const Vec4c phi = bell_state(BellKind::PhiPlus);
    CHECK_THAT(phi(0).real(), Catch::Matchers::WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK(std::abs(phi(1)) == 0.0);
    CHECK(std::abs(phi(2)) == 0.0);
    CHECK_THAT(phi(3).real(), Catch::Matchers::WithinAbs(1.0 / std::sqrt(2.0), 1e-15));

    const BellKind kinds[] = {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                              BellKind::PsiMinus};
    for (BellKind a : kinds) {
        CHECK_THAT(bell_state(a).norm(), Catch::Matchers::WithinAbs(1.0, 1e-15));
        for (BellKind b : kinds)
            if (a != b)
                CHECK(std::abs(bell_state(a).dot(bell_state(b))) < 1e-15);
    }
}

TEST_CASE("werner state") {
    const Vec4c phi = bell_state(BellKind::PhiPlus);
    CHECK(mdiff4(werner_state(1.0).matrix(), phi * phi.adjoint()) < 1e-15);
    CHECK(mdiff4(werner_state(0.0).matrix(), 0.25 * Mat4c::Identity()) < 1e-15);
    CHECK_THROWS_AS(werner_state(-0.01), std::domain_error);
    CHECK_THROWS_AS(werner_state(1.01), std::domain_error);

    for (double lam : {0.1, 0.5, 0.9}) {
        const Mat4c rho = werner_state(lam).matrix();
        CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) < 1e-14);
        Eigen::SelfAdjointEigenSolver<Mat4c> es(rho, Eigen::EigenvaluesOnly);
        const auto ev = es.eigenvalues();
        // Spectrum {(1+3l)/4, (1-l)/4 x3}.
        CHECK_THAT(ev(3), Catch::Matchers::WithinAbs((1.0 + 3.0 * lam) / 4.0, 1e-12));
        for (int i = 0; i < 3; ++i)
            CHECK_THAT(ev(i), Catch::Matchers::WithinAbs((1.0 - lam) / 4.0, 1e-12));
    }
}

TEST_CASE("tensor product") {
    CHECK(mdiff4(tensor2(Mat2c::Identity(), Mat2c::Identity()), Mat4c::Identity()) < 1e-15);
    const Mat4c yy = tensor2(pauli_y(), pauli_y());
    CHECK(mdiff4(yy * yy, Mat4c::Identity()) < 1e-15);
    for (int k = 0; k < 100; ++k) {
        const Mat2c a = testhelp::random_su2();
        const Mat2c b = testhelp::random_su2();
        const Mat2c c = testhelp::random_su2();
        const Mat2c d = testhelp::random_su2();
        CHECK(mdiff4(tensor2(a, b) * tensor2(c, d), tensor2(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("conjugation") {
    const SpinState w = werner_state(0.7);
    CHECK(mdiff4(conjugate_by(w, Mat4c::Identity()).matrix(), w.matrix()) < 1e-15);

    const Mat4c u = tensor2(testhelp::random_su2(), testhelp::random_su2());
    Eigen::SelfAdjointEigenSolver<Mat4c> before(w.matrix(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Mat4c> after(conjugate_by(w, u).matrix(),
                                               Eigen::EigenvaluesOnly);
    CHECK((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);

    // Phi+ is a +-1 eigenstate of sigma_x x sigma_x.
    const SpinState phi = pure_state(bell_state(BellKind::PhiPlus));
    CHECK(mdiff4(conjugate_by(phi, tensor2(pauli_x(), pauli_x())).matrix(), phi.matrix()) <
          1e-14);

    Mat4c not_unitary = Mat4c::Identity();
    not_unitary(0, 0) = 2.0;
    CHECK_THROWS_AS(conjugate_by(w, not_unitary), std::domain_error);
}

TEST_CASE("spin state invariants") {
    Mat4c bad = 0.25 * Mat4c::Identity();
    bad(0, 1) = cplx(0.0, 0.5);  // not Hermitian
    CHECK_THROWS_AS(SpinState::from_matrix(bad), std::domain_error);

    CHECK_THROWS_AS(SpinState::from_matrix(0.5 * Mat4c::Identity()), std::domain_error);

    Mat4c indefinite = Mat4c::Zero();
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS(SpinState::from_matrix(indefinite), std::domain_error);

    Vec4c not_normalized;
    not_normalized << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(pure_state(not_normalized), std::domain_error);
}

TEST_CASE("su2 lift of a rotation matrix conjugates like the rotation") {
    // Either SU(2) preimage must reproduce the SO(3) action on the Bloch
    // vector: R_ij = tr(s_i U s_j U^dag)/2.
    for (int k = 0; k < 50; ++k) {
        const Vec3 axis = testhelp::random_unit_axis();
        std::uniform_real_distribution<double> ang(0.0, pi);
        const double a = ang(testhelp::rng());
        const Mat3 r = Eigen::AngleAxisd(a, axis).toRotationMatrix();
        const Mat2c u = su2_from_rotation_matrix(r).matrix;
        Mat3 back;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                back(i, j) = 0.5 * (pauli(i) * u * pauli(j) * u.adjoint()).trace().real();
        CHECK((back - r).cwiseAbs().maxCoeff() < 1e-10);
    }
}
