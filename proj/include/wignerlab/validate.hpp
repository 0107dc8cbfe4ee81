#pragma once

// The full oracle-agreement and invariant suite behind `wignerlab
// validate`, shared with the test binaries. Every check is deterministic
// (fixed RNG seeds) and reports its worst observed error against the
// tolerance it is held to.

#include "wignerlab/boost_map.hpp"
#include "wignerlab/entanglement_geometry.hpp"
#include "wignerlab/io.hpp"
#include "wignerlab/lorentz.hpp"
#include "wignerlab/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace wignerlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
    std::vector<std::string> failing_names() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.passed)
                out.push_back(c.name);
        return out;
    }
};

struct ValidationOptions {
    /// Test fixture: offset added to every closed-form concurrence before
    /// comparison, to prove the oracle checks can actually fail.
    double closed_form_perturbation = 0.0;
    std::size_t grid_points = 361;
};

struct Scenario {
    MomentumFamily family;
    RotationType type;
};

/// Every (family, type, axes) combination backed by a closed form.
inline std::vector<Scenario> closed_form_scenarios() {
    using F = MomentumFamily;
    using K = RotationKind;
    std::vector<Scenario> s;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        s.push_back({F::Sigma, {K::Single, a}});
        s.push_back({F::Sigma, {K::SameAxis, a}});
        s.push_back({F::PhiPlus, {K::SameAxis, a}});
        s.push_back({F::PsiPlus, {K::SameAxis, a}});
    }
    const std::pair<Axis, Axis> pairs[] = {
        {Axis::X, Axis::Y}, {Axis::X, Axis::Z}, {Axis::Y, Axis::Z}};
    for (auto [a, b] : pairs) {
        s.push_back({F::Sigma, {K::MixedAxes, a, b}});
        s.push_back({F::Cross, {K::Single, a, b}});
        s.push_back({F::Cross, {K::MixedAxes, a, b}});
        s.push_back({F::PhiPlusPerp, {K::MixedAxes, a, b}});
        s.push_back({F::PsiPlusPerp, {K::MixedAxes, a, b}});
    }
    // Swapped-axis and alias spellings of cases already covered above.
    s.push_back({F::Sigma, {K::MixedAxes, Axis::Y, Axis::X}});
    s.push_back({F::PhiPlusPerp, {K::MixedAxes, Axis::Z, Axis::X}});
    s.push_back({F::Cross, {K::SameAxis, Axis::X, Axis::Y}});
    s.push_back({F::PhiPlus, {K::MixedAxes, Axis::X, Axis::Y}});
    s.push_back({F::PsiPlus, {K::MixedAxes, Axis::X, Axis::Z}});
    // Single rotations with entangled momenta reduce to the Sigma case.
    s.push_back({F::PhiPlus, {K::Single, Axis::X}});
    s.push_back({F::PsiPlus, {K::Single, Axis::Y}});
    s.push_back({F::PhiPlusPerp, {K::Single, Axis::Z}});
    s.push_back({F::PsiPlusPerp, {K::Single, Axis::X}});
    return s;
}

/// Closed-form scenarios plus the EPRB maps (concurrence-only oracle).
inline std::vector<Scenario> all_scenarios() {
    auto s = closed_form_scenarios();
    s.push_back({MomentumFamily::EPRB, {RotationKind::Single, Axis::X}});
    s.push_back({MomentumFamily::EPRB, {RotationKind::SameAxis, Axis::X}});
    s.push_back({MomentumFamily::EPRB, {RotationKind::MixedAxes, Axis::X, Axis::Z}});
    return s;
}

inline bool closed_form_t_supported(MomentumFamily family) {
    return family != MomentumFamily::EPRB;
}

namespace detail {

inline void add_check(ValidationReport& rep, const std::string& name, double max_error,
                      double tolerance, std::string detail = {}) {
    rep.checks.push_back({name, max_error <= tolerance, max_error, tolerance, std::move(detail)});
}

/// Hermiticity / trace / positivity margins of a density matrix.
struct StateMargins {
    double hermiticity = 0.0;
    double trace = 0.0;
    double negativity = 0.0;

    static StateMargins of(const Mat4c& rho) {
        StateMargins m;
        m.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
        m.trace = std::abs(rho.trace() - cplx(1.0, 0.0));
        Eigen::SelfAdjointEigenSolver<Mat4c> es(0.5 * (rho + rho.adjoint()),
                                                Eigen::EigenvaluesOnly);
        m.negativity = std::max(0.0, -es.eigenvalues().minCoeff());
        return m;
    }
};

inline double bell_diagonal_rule_concurrence(const SpinState& s) {
    const Mat4c& rho = s.matrix();
    double pmax = 0.0;
    for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
        const Vec4c b = bell_state(k);
        pmax = std::max(pmax, (b.adjoint() * rho * b)(0, 0).real());
    }
    return std::max(0.0, 2.0 * pmax - 1.0);
}

inline Mat3 rodrigues(const Vec3& axis, double angle) {
    const Vec3 u = axis.normalized();
    Mat3 k;
    k << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
    return Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

}  // namespace detail

/// TWR closed form against the 4x4 matrix oracle over a deterministic grid
/// of boost configurations, plus the analytic spot value at
/// v1 = v2 = 0.8, theta = pi/2.
inline void check_twr_oracle(ValidationReport& rep) {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> speed(0.05, 0.999);
    std::uniform_real_distribution<double> angle(1e-3, pi - 1e-3);

    double max_err = 0.0;
    double max_omega = 0.0;
    for (int k = 0; k < 1200; ++k) {
        const double v1 = speed(rng);
        const double v2 = speed(rng);
        const double th = angle(rng);
        const double formula = twr_angle(BoostConfig(v1, v2, th));
        const Vec3 p = gamma(v1) * v1 * Vec3(std::sin(th), 0.0, std::cos(th));
        const LorentzMatrix lam = boost_matrix(BoostParam(rapidity(v2), Vec3::UnitZ()));
        const double exact = rotation_angle(wigner_rotation_exact(lam, p, 1.0));
        max_err = std::max(max_err, std::abs(formula - exact));
        max_omega = std::max(max_omega, formula);
    }
    const double spot =
        std::abs(twr_angle(BoostConfig(0.8, 0.8, pi / 2.0)) - 2.0 * std::atan(0.25));
    max_err = std::max(max_err, spot);
    detail::add_check(rep, "twr/oracle-agreement", max_err, 1e-9,
                      "1200 sampled configs + analytic spot value");
    detail::add_check(rep, "twr/angle-bound", std::max(0.0, max_omega - pi), 0.0,
                      "omega < pi on the sampled grid");
}

/// Monotonicity of the TWR angle in either speed, and axis orthogonality.
inline void check_twr_properties(ValidationReport& rep) {
    double worst = 0.0;
    for (double other : {0.2, 0.6, 0.95}) {
        for (double th : {0.3, 1.0, 2.0, 3.0}) {
            double prev1 = -1.0, prev2 = -1.0;
            for (int i = 1; i <= 120; ++i) {
                const double v = 0.999 * i / 120.0;
                const double w1 = twr_angle(BoostConfig(v, other, th));
                const double w2 = twr_angle(BoostConfig(other, v, th));
                worst = std::max({worst, prev1 - w1, prev2 - w2});
                prev1 = w1;
                prev2 = w2;
            }
        }
    }
    detail::add_check(rep, "twr/monotonicity", std::max(0.0, worst), 0.0,
                      "nondecreasing in v1 and v2 at fixed other parameters");

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-0.57, 0.57);
    double ortho = 0.0;
    for (int k = 0; k < 300; ++k) {
        const Velocity3 a(u(rng), u(rng), u(rng));
        const Velocity3 b(u(rng), u(rng), u(rng));
        if (a.v.cross(b.v).norm() < 1e-6)
            continue;
        const Vec3 n = twr_axis(a, b);
        ortho = std::max({ortho, std::abs(n.dot(a.v)), std::abs(n.dot(b.v)),
                          std::abs(n.norm() - 1.0)});
    }
    detail::add_check(rep, "twr/axis-orthogonality", ortho, 1e-12);
}

/// One sweep over every scenario, Werner parameter and Wigner angle:
/// closed-form agreement (per scenario), channel structure, the
/// no-increase law, EPRB invariance, octahedron<->separability and the
/// Bell-diagonal concurrence rule.
inline void check_scenario_sweep(ValidationReport& rep, const ValidationOptions& opt) {
    const std::vector<double> lambdas = {0.0, 0.2, 1.0 / 3.0, 0.4, 0.6, 0.8, 1.0};
    const std::vector<double> grid = omega_grid(opt.grid_points);

    detail::StateMargins margins;
    double no_increase = 0.0;
    double eprb_drift = 0.0;
    double octa_mismatch = 0.0;
    double bell_rule = 0.0;
    bool channel_threw = false;
    std::string channel_error;

    for (const Scenario& sc : all_scenarios()) {
        const bool has_t = closed_form_t_supported(sc.family);
        const bool diag = scenario_bell_diagonal(sc.family, sc.type);
        double dc = 0.0, dt = 0.0;
        for (double lam : lambdas) {
            const SpinState rest = werner_state(lam);
            const double c_rest = concurrence(rest);
            for (double w : grid) {
                SpinState out = rest;
                try {
                    out = boosted_spin_state(rest, assignment_for(sc.family, sc.type, w, w));
                } catch (const std::exception& e) {
                    channel_threw = true;
                    channel_error = e.what();
                    continue;
                }
                const auto m = detail::StateMargins::of(out.matrix());
                margins.hermiticity = std::max(margins.hermiticity, m.hermiticity);
                margins.trace = std::max(margins.trace, m.trace);
                margins.negativity = std::max(margins.negativity, m.negativity);

                const double c_num = concurrence(out);
                const CorrelationTensor ct = correlation_tensor(out);

                no_increase = std::max(no_increase, c_num - c_rest);
                if (sc.family == MomentumFamily::EPRB)
                    eprb_drift = std::max(eprb_drift, std::abs(c_num - c_rest));

                dc = std::max(dc, std::abs(c_num -
                                           (closed_form_concurrence(sc.family, sc.type, w, lam) +
                                            opt.closed_form_perturbation)));
                if (has_t)
                    dt = std::max(dt, (ct.t - closed_form_t(sc.family, sc.type, w, lam))
                                          .cwiseAbs()
                                          .maxCoeff());

                if (diag) {
                    // C = 0 <=> ||t||_1 <= 1; near the face both quantities
                    // measure the same distance, |t|_1 - 1 = 2C.
                    const bool sep = c_num <= 1e-10;
                    const bool inside = ct.diagonal().one_norm() <= 1.0 + 2e-10;
                    if (sep != inside)
                        octa_mismatch += 1.0;
                    bell_rule = std::max(
                        bell_rule, std::abs(c_num - detail::bell_diagonal_rule_concurrence(out)));
                }
            }
        }
        if (sc.family == MomentumFamily::EPRB)
            detail::add_check(rep, "closed-form/" + scenario_label(sc.family, sc.type), dc, 1e-10,
                              "concurrence only (EPRB orbits have no tabulated t)");
        else
            detail::add_check(rep, "closed-form/" + scenario_label(sc.family, sc.type),
                              std::max(dc, dt), 1e-10,
                              "max |dC| = " + format_double(dc) + ", max |dt| = " + format_double(dt));
    }

    detail::add_check(rep, "channel/hermiticity", margins.hermiticity, 1e-10);
    detail::add_check(rep, "channel/unit-trace", margins.trace, 1e-10);
    detail::add_check(rep, "channel/positivity", margins.negativity, 1e-10);
    if (channel_threw)
        detail::add_check(rep, "channel/invariants", 1.0, 0.0, channel_error);
    detail::add_check(rep, "channel/no-increase", std::max(0.0, no_increase), 1e-10,
                      "max over scenarios of C(out) - C(rest)");
    detail::add_check(rep, "eprb/concurrence-invariant", eprb_drift, 1e-10);
    detail::add_check(rep, "geometry/octahedron-iff-separable", octa_mismatch, 0.0,
                      "mismatch count across Bell-diagonal grids");
    detail::add_check(rep, "geometry/bell-diagonal-rule", bell_rule, 1e-10,
                      "Wootters vs max{0, 2 p_max - 1} on Bell-diagonal outputs");
}

/// Amplitude-level construction against stored weights, and gauge-phase
/// invariance of the induced distribution.
inline void check_momentum_equivalence(ValidationReport& rep) {
    const double r = 1.0 / std::sqrt(2.0);
    const SpinState rest = werner_state(0.7);
    const RotationType type(RotationKind::SameAxis, Axis::X);
    const double w = 1.1;

    // Plus and minus relative phases must induce the identical channel.
    double max_err = 0.0;
    for (double phase : {1.0, -1.0}) {
        const auto amps = std::vector<MomentumAmplitude>{
            {MomentumTag::PlusP, MomentumTag::PlusP, r},
            {MomentumTag::MinusP, MomentumTag::MinusP, phase * r}};
        const MomentumDistribution from_amps = diagonal_mixture(amps, MomentumFamily::PhiPlus);
        const LabelRule rule{Axis::X, Axis::X, w};
        const SpinState a =
            boosted_spin_state(rest, assignment_from_distribution(from_amps, rule, rule));
        const SpinState b =
            boosted_spin_state(rest, assignment_for(MomentumFamily::PhiPlus, type, w, w));
        max_err = std::max(max_err, (a.matrix() - b.matrix()).cwiseAbs().maxCoeff());
    }
    // Four-term product amplitudes against the sigma constructor.
    {
        std::vector<MomentumAmplitude> amps;
        for (MomentumTag a : {MomentumTag::PlusP, MomentumTag::MinusP})
            for (MomentumTag b : {MomentumTag::PlusP, MomentumTag::MinusP})
                amps.push_back({a, b, cplx(0.5, 0.0)});
        const LabelRule rule{Axis::X, Axis::X, w};
        const SpinState a = boosted_spin_state(
            rest, assignment_from_distribution(diagonal_mixture(amps, MomentumFamily::Sigma),
                                               rule, rule));
        const SpinState b =
            boosted_spin_state(rest, assignment_for(MomentumFamily::Sigma, type, w, w));
        max_err = std::max(max_err, (a.matrix() - b.matrix()).cwiseAbs().maxCoeff());
    }
    detail::add_check(rep, "momentum/pure-vs-diagonal", max_err, 1e-14);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    double gauge = 0.0;
    for (int rep_i = 0; rep_i < 50; ++rep_i) {
        const std::vector<MomentumAmplitude> amps{
            {MomentumTag::PlusP, MomentumTag::PlusP, r},
            {MomentumTag::MinusP, MomentumTag::MinusP, r}};
        std::map<std::pair<MomentumTag, MomentumTag>, double> phi;
        for (const auto& a : amps)
            phi[{a.first, a.second}] = u(rng);
        const auto rotated = apply_gauge_phase(
            amps, [&](MomentumTag a, MomentumTag b) { return phi.at({a, b}); });
        const auto d0 = diagonal_mixture(amps, MomentumFamily::PhiPlus);
        const auto d1 = diagonal_mixture(rotated, MomentumFamily::PhiPlus);
        for (std::size_t i = 0; i < d0.outcomes().size(); ++i)
            gauge = std::max(gauge,
                             std::abs(d0.outcomes()[i].weight - d1.outcomes()[i].weight));
    }
    detail::add_check(rep, "momentum/gauge-invariance", gauge, 1e-15);
}

/// State-level endpoint identities of the orbits.
inline void check_orbit_endpoints(ValidationReport& rep) {
    double max_err = 0.0;
    const Vec4c psi = bell_state(BellKind::PsiPlus);
    for (double lam : {0.0, 0.4, 0.7, 1.0}) {
        const SpinState rest = werner_state(lam);
        const Mat4c psi_werner =
            lam * (psi * psi.adjoint()) + (1.0 - lam) * 0.25 * Mat4c::Identity();

        const SpinState single_pi = boosted_spin_state(
            rest, assignment_for(MomentumFamily::Sigma, {RotationKind::Single, Axis::X}, pi, pi));
        max_err = std::max(max_err, (single_pi.matrix() - psi_werner).cwiseAbs().maxCoeff());

        const SpinState same_pi = boosted_spin_state(
            rest, assignment_for(MomentumFamily::Sigma, {RotationKind::SameAxis, Axis::X}, pi, pi));
        max_err = std::max(max_err, (same_pi.matrix() - rest.matrix()).cwiseAbs().maxCoeff());

        const SpinState ent_half = boosted_spin_state(
            rest,
            assignment_for(MomentumFamily::PhiPlus, {RotationKind::SameAxis, Axis::X}, pi / 2.0,
                           pi / 2.0));
        max_err = std::max(max_err, (ent_half.matrix() - psi_werner).cwiseAbs().maxCoeff());

        const SpinState ent_pi = boosted_spin_state(
            rest, assignment_for(MomentumFamily::PhiPlus, {RotationKind::SameAxis, Axis::X}, pi, pi));
        max_err = std::max(max_err, (ent_pi.matrix() - rest.matrix()).cwiseAbs().maxCoeff());
    }
    detail::add_check(rep, "orbit/endpoints", max_err, 1e-10,
                      "Sigma/single pi -> Psi+ Werner; Sigma/same pi and Phi+/same pi -> rest; "
                      "Phi+/same pi/2 -> Psi+ Werner");
}

/// The abstract omega-parameterized channel against the end-to-end
/// Lorentz-matrix path on concrete momenta, for every family.
inline void check_exact_channel(ValidationReport& rep) {
    const double mass = 1.0;
    double max_err = 0.0;
    double eprb_drift = 0.0;

    const auto mixed_sigma = [] {
        std::vector<MomentumOutcome> out;
        for (MomentumTag a : {MomentumTag::PlusP, MomentumTag::MinusP})
            for (MomentumTag b : {MomentumTag::PlusPerp, MomentumTag::MinusPerp})
                out.push_back({a, b, 0.25});
        return MomentumDistribution(MomentumFamily::Sigma, std::move(out));
    }();

    for (const auto& [xi, pt, pz] : {std::tuple{0.8, 0.9, 0.4},
                                     std::tuple{1.4, 1.2, -0.8},
                                     std::tuple{2.2, 0.5, -1.5}}) {
        const BoostParam boost(xi, Vec3::UnitZ());
        const LorentzMatrix lam = boost_matrix(boost);
        const double omega = rotation_angle(wigner_rotation_exact(lam, Vec3(pt, 0.0, pz), mass));

        for (double lambda : {0.6, 1.0}) {
            const SpinState rest = werner_state(lambda);
            // In-plane momenta with a z-boost rotate spins about +-y (p
            // labels) and +-x (perp labels); each family's term set is
            // invariant under the global sign flip, so the abstract
            // assignment uses axes (Y, X).
            const auto compare = [&](const MomentumDistribution& d, MomentumFamily fam,
                                     RotationType type) {
                const SpinState exact =
                    boosted_spin_state_exact(rest, with_vectors(d, pt, pz), boost, mass);
                const SpinState abstract =
                    boosted_spin_state(rest, assignment_for(fam, type, omega, omega));
                max_err =
                    std::max(max_err, (exact.matrix() - abstract.matrix()).cwiseAbs().maxCoeff());
            };
            compare(scenario_distribution(MomentumFamily::Sigma, RotationKind::Single),
                    MomentumFamily::Sigma, {RotationKind::Single, Axis::Y});
            compare(sigma(), MomentumFamily::Sigma, {RotationKind::SameAxis, Axis::Y});
            compare(mixed_sigma, MomentumFamily::Sigma, {RotationKind::MixedAxes, Axis::Y, Axis::X});
            compare(cross(), MomentumFamily::Cross, {RotationKind::MixedAxes, Axis::Y, Axis::X});
            compare(entangled(MomentumFamily::PhiPlus), MomentumFamily::PhiPlus,
                    {RotationKind::SameAxis, Axis::Y});
            compare(entangled(MomentumFamily::PsiPlus), MomentumFamily::PsiPlus,
                    {RotationKind::SameAxis, Axis::Y});
            compare(entangled(MomentumFamily::PhiPlusPerp), MomentumFamily::PhiPlusPerp,
                    {RotationKind::MixedAxes, Axis::Y, Axis::X});
            compare(entangled(MomentumFamily::PsiPlusPerp), MomentumFamily::PsiPlusPerp,
                    {RotationKind::MixedAxes, Axis::Y, Axis::X});

            const SpinState eprb_exact =
                boosted_spin_state_exact(rest, with_vectors(eprb(), pt, pz), boost, mass);
            eprb_drift = std::max(eprb_drift,
                                  std::abs(concurrence(eprb_exact) - concurrence(rest)));
        }
    }

    // Zero rapidity leaves the state untouched.
    const SpinState rest = werner_state(0.8);
    const SpinState still = boosted_spin_state_exact(rest, with_vectors(sigma(), 1.0, 0.3),
                                                     BoostParam(0.0, Vec3::UnitZ()), mass);
    max_err = std::max(max_err, (still.matrix() - rest.matrix()).cwiseAbs().maxCoeff());

    detail::add_check(rep, "lorentz/exact-channel-consistency", max_err, 1e-10,
                      "Sigma, cross and entangled families at three boost geometries");
    detail::add_check(rep, "lorentz/exact-eprb-invariance", eprb_drift, 1e-10);
}

/// The three single-rotation closed-form curves map onto one another under
/// the order-3 rotation about the Werner axis (1,-1,1)/sqrt(3).
inline void check_axis_symmetry(ValidationReport& rep) {
    const Mat3 r = detail::rodrigues(Vec3(1.0, -1.0, 1.0), 2.0 * pi / 3.0);
    const double lam = 0.85;
    double max_err = 0.0;
    const std::pair<Axis, Axis> cycle[] = {
        {Axis::X, Axis::Z}, {Axis::Z, Axis::Y}, {Axis::Y, Axis::X}};
    for (double w : omega_grid(181)) {
        for (auto [from, to] : cycle) {
            const Vec3 t_from = closed_form_t(MomentumFamily::Sigma, {RotationKind::Single, from},
                                              w, lam)
                                    .diagonal();
            const Vec3 t_to =
                closed_form_t(MomentumFamily::Sigma, {RotationKind::Single, to}, w, lam).diagonal();
            max_err = std::max(max_err, (r * t_from - t_to).cwiseAbs().maxCoeff());
        }
    }
    detail::add_check(rep, "geometry/axis-symmetry", max_err, 1e-10,
                      "R(2pi/3) about (1,-1,1)/sqrt(3) cycles t_X -> t_Z -> t_Y -> t_X");
}

/// Structure of the non-Bell-diagonal entangled-mixed tensors: the Sigma
/// mixed diagonal plus exactly one +-sin^2(omega) off-diagonal entry.
inline void check_entangled_mixed_structure(ValidationReport& rep) {
    const double lam = 0.7;
    const SpinState rest = werner_state(lam);
    double max_err = 0.0;
    for (MomentumFamily fam : {MomentumFamily::PhiPlusPerp, MomentumFamily::PsiPlusPerp}) {
        for (auto [a, b] : {std::pair{Axis::X, Axis::Y}, std::pair{Axis::X, Axis::Z},
                            std::pair{Axis::Y, Axis::Z}}) {
            const RotationType type(RotationKind::MixedAxes, a, b);
            for (double w : omega_grid(91)) {
                const CorrelationTensor ct = correlation_tensor(
                    boosted_spin_state(rest, assignment_for(fam, type, w, w)));
                const Vec3 diag_sigma =
                    closed_form_t(MomentumFamily::Sigma, type, w, lam).diagonal();
                max_err = std::max(
                    max_err, (ct.diagonal().as_vec3() - diag_sigma).cwiseAbs().maxCoeff());
                max_err = std::max(max_err, ct.r.cwiseAbs().maxCoeff());
                max_err = std::max(max_err, ct.s.cwiseAbs().maxCoeff());
                const int bi = static_cast<int>(b);
                const int ai = static_cast<int>(a);
                const double expected = (fam == MomentumFamily::PhiPlusPerp ? -1.0 : 1.0) *
                                        detail::levi_civita(a, b) * lam * std::sin(w) * std::sin(w);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        if (i == j)
                            continue;
                        const double want = (i == bi && j == ai) ? expected : 0.0;
                        max_err = std::max(max_err, std::abs(ct.t(i, j) - want));
                    }
            }
        }
    }
    detail::add_check(rep, "geometry/entangled-mixed-structure", max_err, 1e-10,
                      "diagonal shared with Sigma/mixed, single +-sin^2 off-diagonal");
}

/// Analytic separability windows against channel-level bisection.
inline void check_windows(ValidationReport& rep) {
    const std::vector<Scenario> combos = {
        {MomentumFamily::Sigma, {RotationKind::Single, Axis::X}},
        {MomentumFamily::Sigma, {RotationKind::SameAxis, Axis::X}},
        {MomentumFamily::Sigma, {RotationKind::MixedAxes, Axis::X, Axis::Z}},
        {MomentumFamily::Cross, {RotationKind::Single, Axis::X, Axis::Y}},
        {MomentumFamily::Cross, {RotationKind::MixedAxes, Axis::X, Axis::Y}},
        {MomentumFamily::PhiPlusPerp, {RotationKind::MixedAxes, Axis::X, Axis::Y}},
    };
    double max_err = 0.0;
    for (const Scenario& sc : combos) {
        for (double lam : {0.4, 0.6, 0.8, 1.0}) {
            const SeparabilityWindow a = separability_window(sc.family, sc.type, lam);
            const SeparabilityWindow n =
                separability_window_numeric(sc.family, sc.type, lam, 1e-9);
            if (a.empty != n.empty) {
                max_err = std::max(max_err, 1.0);
                continue;
            }
            if (!a.empty)
                max_err = std::max({max_err, std::abs(a.lo - n.lo), std::abs(a.hi - n.hi)});
        }
    }
    // Scenarios with no window at all.
    for (const Scenario& sc :
         {Scenario{MomentumFamily::EPRB, {RotationKind::SameAxis, Axis::X}},
          Scenario{MomentumFamily::PhiPlus, {RotationKind::SameAxis, Axis::Y}}}) {
        const SeparabilityWindow a = separability_window(sc.family, sc.type, 0.9);
        const SeparabilityWindow n = separability_window_numeric(sc.family, sc.type, 0.9);
        if (!a.empty || !n.empty)
            max_err = std::max(max_err, 1.0);
    }
    detail::add_check(rep, "windows/analytic-vs-numeric", max_err, 1e-6,
                      "all windowed combinations, lambda in {2/5, 3/5, 4/5, 1}");
}

/// Bell vertices, the Werner line and the two lambda thresholds.
inline void check_geometry_thresholds(ValidationReport& rep) {
    double vertex_err = 0.0;
    const std::pair<BellKind, Vec3> vertices[] = {
        {BellKind::PhiPlus, Vec3(1, -1, 1)},
        {BellKind::PhiMinus, Vec3(-1, 1, 1)},
        {BellKind::PsiPlus, Vec3(1, 1, -1)},
        {BellKind::PsiMinus, Vec3(-1, -1, -1)}};
    for (const auto& [kind, want] : vertices)
        vertex_err = std::max(
            vertex_err,
            (t_vector(pure_state(bell_state(kind))).as_vec3() - want).cwiseAbs().maxCoeff());
    for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0})
        vertex_err = std::max(vertex_err, (t_vector(werner_state(lam)).as_vec3() -
                                           lam * Vec3(1, -1, 1))
                                              .cwiseAbs()
                                              .maxCoeff());
    detail::add_check(rep, "geometry/bell-vertices-werner-line", vertex_err, 1e-12);

    const double eps = 1e-9;
    bool ok = true;
    auto werner_t = [](double lam) { return TVector{lam, -lam, lam}; };
    ok = ok && in_octahedron(werner_t(1.0 / 3.0 - eps));
    ok = ok && !in_octahedron(werner_t(1.0 / 3.0 + eps));
    ok = ok && !bell_violation_possible(werner_t(1.0 / std::sqrt(2.0) - eps));
    ok = ok && !bell_violation_possible(werner_t(1.0 / std::sqrt(2.0)));
    ok = ok && bell_violation_possible(werner_t(1.0 / std::sqrt(2.0) + eps));
    detail::add_check(rep, "geometry/thresholds", ok ? 0.0 : 1.0, 0.0,
                      "lambda_sep = 1/3 and Bell violation at 1/sqrt(2), boundaries within 1e-9");

    double rest_err = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double lam = i / 20.0;
        rest_err = std::max(rest_err, std::abs(concurrence(werner_state(lam)) -
                                               werner_rest_concurrence(lam)));
    }
    detail::add_check(rep, "werner/rest-concurrence", rest_err, 1e-12);
}

/// Runs the whole suite.
inline ValidationReport run_validation(const ValidationOptions& opt = {}) {
    ValidationReport rep;
    check_twr_oracle(rep);
    check_twr_properties(rep);
    check_scenario_sweep(rep, opt);
    check_momentum_equivalence(rep);
    check_orbit_endpoints(rep);
    check_exact_channel(rep);
    check_axis_symmetry(rep);
    check_entangled_mixed_structure(rep);
    check_windows(rep);
    check_geometry_thresholds(rep);
    return rep;
}

inline std::string report_to_json(const ValidationReport& rep) {
    std::string out = "{\n";
    out += "  \"schema\": \"wignerlab-validate-v1\",\n";
    out += std::string("  \"passed\": ") + (rep.all_passed() ? "true" : "false") + ",\n";
    out += "  \"checks\": [\n";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const CheckResult& c = rep.checks[i];
        out += "    {\"name\": \"" + json_escape(c.name) + "\", \"passed\": " +
               (c.passed ? "true" : "false") + ", \"max_error\": " + format_double(c.max_error) +
               ", \"tolerance\": " + format_double(c.tolerance) + ", \"detail\": \"" +
               json_escape(c.detail) + "\"}";
        out += i + 1 < rep.checks.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace wignerlab
