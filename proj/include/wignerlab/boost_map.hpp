#pragma once

// Momentum-conditioned spin channels. A boost scenario (momentum family x
// rotation type x geometry) fixes a finite list of weighted two-spin
// rotations; tracing out momenta applies them as a mixed-unitary channel
// rho -> sum_k w_k U_k rho U_k^dag.

#include "wignerlab/lorentz.hpp"
#include "wignerlab/momentum.hpp"
#include "wignerlab/spin_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wignerlab {

enum class RotationKind { Single, SameAxis, MixedAxes };

inline std::string to_string(RotationKind k) {
    switch (k) {
        case RotationKind::Single: return "single";
        case RotationKind::SameAxis: return "same";
        default: return "mixed";
    }
}

inline std::string to_string(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

/// Which rotations act on the two spins: R_i x 1, R_i x R_i, or
/// R_i x R_j with i != j. Single ignores axis2.
struct RotationType {
    RotationKind kind;
    Axis axis1 = Axis::X;
    Axis axis2 = Axis::Y;

    RotationType(RotationKind k, Axis a1, Axis a2) : kind(k), axis1(a1), axis2(a2) {
        if (kind == RotationKind::MixedAxes && axis1 == axis2)
            throw std::invalid_argument("RotationType: mixed axes require axis1 != axis2");
    }
    RotationType(RotationKind k, Axis a1) : RotationType(k, a1, a1 == Axis::X ? Axis::Y : Axis::X) {
        if (k == RotationKind::MixedAxes)
            throw std::invalid_argument("RotationType: mixed axes require an explicit axis2");
    }
};

struct RotationTerm {
    double weight;
    SU2Rotation r1;
    SU2Rotation r2;
};

/// The per-outcome rotations of a scenario, with the angles they were
/// built from (omega on particle 1, chi on particle 2).
struct RotationAssignment {
    std::vector<RotationTerm> terms;
    double omega = 0.0;
    double chi = 0.0;
};

/// How a symbolic momentum label translates into a spin rotation: p-labels
/// rotate about p_axis, perp-labels about perp_axis, signed by the label,
/// and the origin label contributes the identity.
struct LabelRule {
    Axis p_axis;
    Axis perp_axis;
    double angle;
};

inline SU2Rotation rotation_for_label(MomentumTag tag, const LabelRule& rule) {
    switch (tag) {
        case MomentumTag::PlusP: return su2_rotation(rule.p_axis, rule.angle);
        case MomentumTag::MinusP: return su2_rotation(rule.p_axis, -rule.angle);
        case MomentumTag::PlusPerp: return su2_rotation(rule.perp_axis, rule.angle);
        case MomentumTag::MinusPerp: return su2_rotation(rule.perp_axis, -rule.angle);
        default: return su2_identity();
    }
}

/// Translates a momentum distribution into rotation terms, one per outcome.
inline RotationAssignment assignment_from_distribution(const MomentumDistribution& dist,
                                                       const LabelRule& rule1,
                                                       const LabelRule& rule2) {
    RotationAssignment a;
    a.omega = rule1.angle;
    a.chi = rule2.angle;
    a.terms.reserve(dist.outcomes().size());
    for (const auto& o : dist.outcomes())
        a.terms.push_back({o.weight, rotation_for_label(o.first.tag, rule1),
                           rotation_for_label(o.second.tag, rule2)});
    return a;
}

/// The distribution whose outcomes carry a scenario's rotations. Single
/// pins the second particle to the origin label; entangled families reuse
/// the Sigma placement there (same channel, see the family docs).
inline MomentumDistribution scenario_distribution(MomentumFamily family, RotationKind kind) {
    if (kind == RotationKind::Single) {
        switch (family) {
            case MomentumFamily::EPRB:
                return MomentumDistribution(family, {{MomentumTag::PlusP, MomentumTag::Origin, 1.0}});
            case MomentumFamily::Cross:
                return MomentumDistribution(family,
                                            {{MomentumTag::PlusP, MomentumTag::Origin, 0.25},
                                             {MomentumTag::MinusP, MomentumTag::Origin, 0.25},
                                             {MomentumTag::PlusPerp, MomentumTag::Origin, 0.25},
                                             {MomentumTag::MinusPerp, MomentumTag::Origin, 0.25}});
            default:
                return MomentumDistribution(family, {{MomentumTag::PlusP, MomentumTag::Origin, 0.5},
                                                     {MomentumTag::MinusP, MomentumTag::Origin, 0.5}});
        }
    }
    switch (family) {
        case MomentumFamily::EPRB: return eprb();
        case MomentumFamily::Sigma: return sigma();
        case MomentumFamily::Cross: return cross();
        default: return entangled(family);
    }
}

/// Builds the weighted rotation list for a scenario. omega drives particle
/// 1 and chi particle 2 (the paper's equal-rapidity setting is chi = omega).
inline RotationAssignment assignment_for(MomentumFamily family, const RotationType& type,
                                         double omega, double chi) {
    if (!(omega >= 0.0) || omega > pi || !(chi >= 0.0) || chi > pi)
        throw std::domain_error("assignment_for: angles must lie in [0, pi]");

    const bool perp_family =
        family == MomentumFamily::PhiPlusPerp || family == MomentumFamily::PsiPlusPerp;
    if (perp_family && type.kind == RotationKind::SameAxis)
        throw std::invalid_argument(
            "assignment_for: the perpendicular entangled families realize mixed axes only");
    if (family == MomentumFamily::Cross && type.axis1 == type.axis2)
        throw std::invalid_argument("assignment_for: the cross family needs two distinct axes");

    const LabelRule rule1{type.axis1, type.axis2, omega};
    LabelRule rule2{type.axis1, type.axis1, chi};
    if (type.kind == RotationKind::MixedAxes)
        rule2 = {type.axis2, type.axis2, chi};
    if (family == MomentumFamily::Cross)
        rule2 = {type.axis1, type.axis2, chi};

    return assignment_from_distribution(scenario_distribution(family, type.kind), rule1, rule2);
}

/// Applies the mixed-unitary channel sum_k w_k (U_k rho U_k^dag) with
/// U_k = r1_k x r2_k. The result is validated as a SpinState.
inline SpinState boosted_spin_state(const SpinState& rho, const RotationAssignment& assignment) {
    Mat4c out = Mat4c::Zero();
    for (const auto& term : assignment.terms) {
        const Mat4c u = tensor2(term.r1.matrix, term.r2.matrix);
        out += term.weight * (u * rho.matrix() * u.adjoint());
    }
    return SpinState::from_matrix(out);
}

/// Same contract, but every rotation is derived from the physical boost:
/// per outcome, the Wigner rotation of each particle's concrete momentum
/// under the given boost, lifted to SU(2). Serves as the end-to-end oracle
/// for the omega-parameterized channel.
inline SpinState boosted_spin_state_exact(const SpinState& rho, const MomentumDistribution& dist,
                                          const BoostParam& boost, double mass) {
    const LorentzMatrix lambda = boost_matrix(boost);
    Mat4c out = Mat4c::Zero();
    for (const auto& o : dist.outcomes()) {
        if (!o.first.vector || !o.second.vector)
            throw std::invalid_argument(
                "boosted_spin_state_exact: outcome labels need concrete momentum vectors");
        const SU2Rotation r1 =
            su2_from_rotation_matrix(wigner_rotation_exact(lambda, *o.first.vector, mass));
        const SU2Rotation r2 =
            su2_from_rotation_matrix(wigner_rotation_exact(lambda, *o.second.vector, mass));
        const Mat4c u = tensor2(r1.matrix, r2.matrix);
        out += o.weight * (u * rho.matrix() * u.adjoint());
    }
    return SpinState::from_matrix(out);
}

/// A full scenario: momentum family, rotation type, Werner parameter, and
/// the chi policy (chi = chi_over_omega * omega; default 1).
struct ScenarioConfig {
    MomentumFamily family;
    RotationType type;
    double lambda;
    double chi_over_omega = 1.0;

    ScenarioConfig(MomentumFamily f, RotationType t, double lam, double chi_ratio = 1.0)
        : family(f), type(t), lambda(lam), chi_over_omega(chi_ratio) {
        if (!(lambda >= 0.0) || lambda > 1.0)
            throw std::domain_error("ScenarioConfig: lambda must lie in [0, 1]");
    }
};

inline std::string scenario_label(MomentumFamily family, const RotationType& type) {
    std::string s = to_string(family) + "/" + to_string(type.kind) + "(" + to_string(type.axis1);
    if (type.kind == RotationKind::MixedAxes || family == MomentumFamily::Cross)
        s += "," + to_string(type.axis2);
    s += ")";
    return s;
}

}  // namespace wignerlab
