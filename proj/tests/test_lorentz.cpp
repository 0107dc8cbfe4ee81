#include "wignerlab/lorentz.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Geometry>

#include <cmath>
#include <random>

using namespace wignerlab;

TEST_CASE("gamma factor") {
    CHECK(gamma(0.0) == 1.0);
    CHECK_THAT(gamma(0.8), Catch::Matchers::WithinAbs(5.0 / 3.0, 1e-15));
    const double g = gamma(0.9999);
    CHECK(std::isfinite(g));
    CHECK(g > 70.0);
    CHECK_THROWS_AS(gamma(1.0), std::domain_error);
    CHECK_THROWS_AS(gamma(-0.1), std::domain_error);
}

TEST_CASE("D factor") {
    const double g = 5.0 / 3.0;
    CHECK_THAT(d_factor(g, g), Catch::Matchers::WithinAbs(4.0, 1e-14));
    for (double gg : {1.2, 2.0, 17.0})
        CHECK_THAT(d_factor(gg, gg), Catch::Matchers::WithinAbs((gg + 1.0) / (gg - 1.0), 1e-12));
    // Both speeds to 1: D -> 1.
    CHECK_THAT(d_factor(1e8, 1e8), Catch::Matchers::WithinAbs(1.0, 1e-7));
    CHECK_THROWS_AS(d_factor(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(d_factor(2.0, 0.5), std::domain_error);
}

TEST_CASE("TWR angle closed form") {
    CHECK(twr_angle(BoostConfig(0.5, 0.7, 0.0)) == 0.0);
    CHECK(twr_angle(BoostConfig(0.0, 0.7, 1.0)) == 0.0);
    CHECK(twr_angle(BoostConfig(0.5, 0.0, 1.0)) == 0.0);
    CHECK_THAT(twr_angle(BoostConfig(0.8, 0.8, pi / 2.0)),
               Catch::Matchers::WithinAbs(2.0 * std::atan(0.25), 1e-14));
    // Nearly opposite ultra-relativistic boosts approach a half turn.
    CHECK(twr_angle(BoostConfig(0.99999, 0.99999, pi - 0.02)) > 3.0);
    double peak = 0.0;
    for (int i = 0; i <= 400; ++i)
        for (double v : {0.3, 0.9, 0.999})
            peak = std::max(peak, twr_angle(BoostConfig(v, 0.999, pi * i / 400.0)));
    CHECK(peak < pi);
    CHECK_THROWS_AS(BoostConfig(1.0, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(BoostConfig(0.5, 0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(BoostConfig(0.5, 0.5, 4.0), std::domain_error);
}

TEST_CASE("TWR axis") {
    const Velocity3 vx(0.5, 0.0, 0.0);
    const Velocity3 vz(0.0, 0.0, 0.5);
    // n = v2 x v1: z x x = +y.
    CHECK((twr_axis(vx, vz) - Vec3::UnitY()).norm() < 1e-15);
    CHECK((twr_axis(vz, vx) + Vec3::UnitY()).norm() < 1e-15);
    CHECK_THROWS_AS(twr_axis(Velocity3(0.5, 0.0, 0.0), Velocity3(0.9, 0.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(twr_axis(Velocity3(0.0, 0.0, 0.0), Velocity3(0.9, 0.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("velocity and boost parameter invariants") {
    CHECK_THROWS_AS(Velocity3(0.8, 0.8, 0.0), std::domain_error);
    CHECK_THROWS_AS(BoostParam(0.5, Vec3(1.0, 1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(BoostParam(-0.1, Vec3::UnitZ()), std::domain_error);
    const BoostParam b = BoostParam::from_velocity(Velocity3(0.0, 0.6, 0.0));
    CHECK_THAT(b.xi, Catch::Matchers::WithinAbs(std::atanh(0.6), 1e-15));
    CHECK((b.e - Vec3::UnitY()).norm() < 1e-15);
}

TEST_CASE("standard boost") {
    CHECK(standard_boost(Vec3::Zero(), 1.0).matrix().isIdentity(1e-15));
    CHECK_THROWS_AS(standard_boost(Vec3(1, 0, 0), 0.0), std::domain_error);

    std::mt19937 gen(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        const Vec3 p(u(gen), u(gen), u(gen));
        const double m = 0.5 + std::abs(u(gen));
        const LorentzMatrix l = standard_boost(p, m);
        CHECK(is_lorentz(l.matrix(), 1e-10));

        Vec4 rest;
        rest << m, 0, 0, 0;
        const Vec4 img = l * rest;
        const double energy = std::sqrt(m * m + p.squaredNorm());
        CHECK((img - Vec4(energy, p(0), p(1), p(2))).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(std::abs(img(0) * img(0) - img.tail<3>().squaredNorm() - m * m) < 1e-10);
        CHECK((l.inverse() * l).matrix().isIdentity(1e-10));
    }
}

TEST_CASE("wigner rotation oracle basics") {
    const double m = 1.0;

    SECTION("collinear boosts give no rotation") {
        const Vec3 p(0.0, 0.0, 1.3);
        const LorentzMatrix lam = boost_matrix(BoostParam(0.7, Vec3::UnitZ()));
        CHECK(wigner_rotation_exact(lam, p, m).isIdentity(1e-12));
    }

    SECTION("a pure rotation is its own Wigner rotation") {
        const Mat3 r = Eigen::AngleAxisd(0.83, Vec3(1, 2, -1).normalized()).toRotationMatrix();
        const Vec3 p(0.4, -0.2, 0.9);
        CHECK((wigner_rotation_exact(rotation_matrix4(r), p, m) - r).cwiseAbs().maxCoeff() <
              1e-12);
    }

    SECTION("z-boost on x-momentum reproduces the closed form") {
        const double v1 = 0.6, v2 = 0.85;
        const Vec3 p = gamma(v1) * v1 * Vec3::UnitX();
        const LorentzMatrix lam = boost_matrix(BoostParam(rapidity(v2), Vec3::UnitZ()));
        const double exact = rotation_angle(wigner_rotation_exact(lam, p, m));
        CHECK_THAT(exact, Catch::Matchers::WithinAbs(twr_angle(BoostConfig(v1, v2, pi / 2.0)),
                                                     1e-11));
    }

    SECTION("rejects non-Lorentz input") {
        Mat4 bad = Mat4::Identity();
        bad(1, 2) = 0.3;
        CHECK_THROWS_AS(LorentzMatrix::from_matrix(bad), std::invalid_argument);
    }
}

TEST_CASE("rotation axis-angle extraction round trip") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double angle : {1e-13, 1e-8, 0.3, 1.7, pi - 1e-8, pi - 1e-13, pi}) {
        const Vec3 axis = Vec3(u(gen), u(gen), u(gen)).normalized();
        const Mat3 r = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
        const AxisAngle aa = rotation_axis_angle(r);
        const Mat3 back = Eigen::AngleAxisd(aa.angle, aa.axis).toRotationMatrix();
        CHECK((back - r).cwiseAbs().maxCoeff() < 1e-7);
        CHECK_THAT(rotation_angle(r), Catch::Matchers::WithinAbs(angle, 1e-7));
    }
}

TEST_CASE("TWR monotonicity on a sampled grid") {
    for (double other : {0.3, 0.8}) {
        for (double th : {0.5, 1.5, 2.7}) {
            double prev = -1.0;
            for (int i = 1; i <= 60; ++i) {
                const double v = 0.995 * i / 60.0;
                const double w = twr_angle(BoostConfig(v, other, th));
                CHECK(w >= prev - 1e-14);
                prev = w;
            }
        }
    }
}
