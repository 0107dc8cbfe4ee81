#include "wignerlab/momentum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace wignerlab;

TEST_CASE("eprb distribution") {
    const MomentumDistribution d = eprb();
    REQUIRE(d.outcomes().size() == 1);
    CHECK(d.outcomes()[0].weight == 1.0);
    CHECK(d.family() == MomentumFamily::EPRB);
}

TEST_CASE("sigma distribution") {
    const MomentumDistribution d = sigma();
    REQUIRE(d.outcomes().size() == 4);
    double total = 0.0;
    for (const auto& o : d.outcomes()) {
        CHECK(o.weight == 0.25);
        total += o.weight;
    }
    CHECK_THAT(total, Catch::Matchers::WithinAbs(1.0, 1e-15));
    const auto m = d.marginal(1);
    CHECK_THAT(m.at(MomentumTag::PlusP), Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THAT(m.at(MomentumTag::MinusP), Catch::Matchers::WithinAbs(0.5, 1e-15));
}

TEST_CASE("cross distribution") {
    const MomentumDistribution d = cross();
    REQUIRE(d.outcomes().size() == 16);
    for (const auto& o : d.outcomes())
        CHECK(o.weight == 1.0 / 16.0);
    for (int particle : {0, 1}) {
        const auto m = d.marginal(particle);
        REQUIRE(m.size() == 4);
        for (const auto& [tag, w] : m)
            CHECK_THAT(w, Catch::Matchers::WithinAbs(0.25, 1e-15));
    }
}

TEST_CASE("entangled distributions") {
    const auto phi = entangled(MomentumFamily::PhiPlus);
    REQUIRE(phi.outcomes().size() == 2);
    CHECK(phi.outcomes()[0].first.tag == MomentumTag::PlusP);
    CHECK(phi.outcomes()[0].second.tag == MomentumTag::PlusP);
    CHECK(phi.outcomes()[1].first.tag == MomentumTag::MinusP);
    CHECK(phi.outcomes()[1].second.tag == MomentumTag::MinusP);
    CHECK(phi.outcomes()[0].weight == 0.5);

    const auto psi = entangled(MomentumFamily::PsiPlus);
    CHECK(psi.outcomes()[0].second.tag == MomentumTag::MinusP);
    CHECK(psi.outcomes()[1].second.tag == MomentumTag::PlusP);

    const auto psiperp = entangled(MomentumFamily::PsiPlusPerp);
    CHECK(psiperp.outcomes()[0].first.tag == MomentumTag::PlusP);
    CHECK(psiperp.outcomes()[0].second.tag == MomentumTag::MinusPerp);
    CHECK(psiperp.outcomes()[1].second.tag == MomentumTag::PlusPerp);

    // Phi+ and Psi+ share single-particle marginals, uniform on +-p.
    for (int particle : {0, 1}) {
        const auto mp = phi.marginal(particle);
        const auto mq = psi.marginal(particle);
        CHECK_THAT(mp.at(MomentumTag::PlusP), Catch::Matchers::WithinAbs(0.5, 1e-15));
        CHECK_THAT(mq.at(MomentumTag::PlusP), Catch::Matchers::WithinAbs(0.5, 1e-15));
    }
    CHECK_THROWS_AS(entangled(MomentumFamily::Sigma), std::invalid_argument);
}

TEST_CASE("diagonal mixture") {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<MomentumAmplitude> plus = {{MomentumTag::PlusP, MomentumTag::PlusP, r},
                                                 {MomentumTag::MinusP, MomentumTag::MinusP, r}};
    const auto d = diagonal_mixture(plus, MomentumFamily::PhiPlus);
    CHECK_THAT(d.outcomes()[0].weight, Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THAT(d.outcomes()[1].weight, Catch::Matchers::WithinAbs(0.5, 1e-15));

    // The minus-phase Bell momentum induces the identical mixture.
    const std::vector<MomentumAmplitude> minus = {{MomentumTag::PlusP, MomentumTag::PlusP, r},
                                                  {MomentumTag::MinusP, MomentumTag::MinusP, -r}};
    const auto dm = diagonal_mixture(minus, MomentumFamily::PhiPlus);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(dm.outcomes()[i].weight == d.outcomes()[i].weight);

    const auto single =
        diagonal_mixture({{MomentumTag::PlusP, MomentumTag::Origin, 1.0}}, MomentumFamily::EPRB);
    CHECK(single.outcomes()[0].weight == 1.0);

    CHECK_THROWS_AS(diagonal_mixture({{MomentumTag::PlusP, MomentumTag::PlusP, 0.9}},
                                     MomentumFamily::EPRB),
                    std::domain_error);
}

TEST_CASE("gauge phases never change the mixture") {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<MomentumAmplitude> amps = {{MomentumTag::PlusP, MomentumTag::PlusP, r},
                                                 {MomentumTag::MinusP, MomentumTag::MinusP, r}};
    const auto zero_phase = apply_gauge_phase(amps, [](MomentumTag, MomentumTag) { return 0.0; });
    for (std::size_t i = 0; i < amps.size(); ++i)
        CHECK(zero_phase[i].amplitude == amps[i].amplitude);

    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979);
    const auto base = diagonal_mixture(amps, MomentumFamily::PhiPlus);
    for (int k = 0; k < 25; ++k) {
        const double pa = u(gen), pb = u(gen);
        const auto rotated = apply_gauge_phase(amps, [&](MomentumTag a, MomentumTag) {
            return a == MomentumTag::PlusP ? pa : pb;
        });
        const auto d = diagonal_mixture(rotated, MomentumFamily::PhiPlus);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(std::abs(d.outcomes()[i].weight - base.outcomes()[i].weight) <= 1e-15);
    }
}

TEST_CASE("distribution invariants") {
    CHECK_THROWS_AS(MomentumDistribution(MomentumFamily::Sigma,
                                         {{MomentumTag::PlusP, MomentumTag::PlusP, 0.5},
                                          {MomentumTag::PlusP, MomentumTag::PlusP, 0.5}}),
                    std::domain_error);
    CHECK_THROWS_AS(MomentumDistribution(MomentumFamily::Sigma,
                                         {{MomentumTag::PlusP, MomentumTag::PlusP, 1.5},
                                          {MomentumTag::MinusP, MomentumTag::MinusP, -0.5}}),
                    std::domain_error);
    CHECK_THROWS_AS(MomentumDistribution(MomentumFamily::Sigma,
                                         {{MomentumTag::PlusP, MomentumTag::PlusP, 0.7}}),
                    std::domain_error);
}

TEST_CASE("concrete vector realization") {
    const auto d = with_vectors(cross(), 0.9, -0.4);
    for (const auto& o : d.outcomes()) {
        REQUIRE(o.first.vector.has_value());
        REQUIRE(o.second.vector.has_value());
        for (const MomentumLabel& l : {o.first, o.second}) {
            const Vec3& v = *l.vector;
            switch (l.tag) {
                case MomentumTag::PlusP: CHECK(v == Vec3(0.9, 0.0, -0.4)); break;
                case MomentumTag::MinusP: CHECK(v == Vec3(-0.9, 0.0, -0.4)); break;
                case MomentumTag::PlusPerp: CHECK(v == Vec3(0.0, 0.9, -0.4)); break;
                case MomentumTag::MinusPerp: CHECK(v == Vec3(0.0, -0.9, -0.4)); break;
                default: CHECK(v == Vec3::Zero());
            }
            if (l.tag != MomentumTag::Origin)
                CHECK_THAT(v.norm(), Catch::Matchers::WithinAbs(std::hypot(0.9, 0.4), 1e-15));
        }
    }
    CHECK_THROWS_AS(with_vectors(sigma(), 0.0, 1.0), std::domain_error);
}
