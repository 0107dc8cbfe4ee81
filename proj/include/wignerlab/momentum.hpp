#pragma once

// Discrete two-particle momentum distributions. Labels are symbolic: what
// matters downstream is the rotation each label induces once a boost
// geometry is fixed. Concrete 3-vectors are optional and only feed the
// exact Lorentz-matrix path.

#include "wignerlab/lorentz.hpp"
#include "wignerlab/spin_algebra.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wignerlab {

/// Symbolic momentum kets: +-p in the primary boost plane, +-p_perp in the
/// perpendicular plane, and the origin ket that picks up no rotation.
enum class MomentumTag { PlusP, MinusP, PlusPerp, MinusPerp, Origin };

inline std::string to_string(MomentumTag t) {
    switch (t) {
        case MomentumTag::PlusP: return "+p";
        case MomentumTag::MinusP: return "-p";
        case MomentumTag::PlusPerp: return "+p_perp";
        case MomentumTag::MinusPerp: return "-p_perp";
        default: return "p_0";
    }
}

struct MomentumLabel {
    MomentumTag tag;
    std::optional<Vec3> vector;  // concrete realization, exact path only

    MomentumLabel(MomentumTag t) : tag(t) {}
    MomentumLabel(MomentumTag t, const Vec3& v) : tag(t), vector(v) {}
};

enum class MomentumFamily { EPRB, Sigma, Cross, PhiPlus, PsiPlus, PhiPlusPerp, PsiPlusPerp };

inline std::string to_string(MomentumFamily f) {
    switch (f) {
        case MomentumFamily::EPRB: return "eprb";
        case MomentumFamily::Sigma: return "sigma";
        case MomentumFamily::Cross: return "cross";
        case MomentumFamily::PhiPlus: return "phi+";
        case MomentumFamily::PsiPlus: return "psi+";
        case MomentumFamily::PhiPlusPerp: return "phi+perp";
        default: return "psi+perp";
    }
}

struct MomentumOutcome {
    MomentumLabel first;
    MomentumLabel second;
    double weight;
};

/// Normalized list of joint momentum outcomes with distinct label pairs.
class MomentumDistribution {
public:
    MomentumDistribution(MomentumFamily family, std::vector<MomentumOutcome> outcomes)
        : family_(family), outcomes_(std::move(outcomes)) {
        double total = 0.0;
        std::set<std::pair<int, int>> seen;
        for (const auto& o : outcomes_) {
            if (o.weight < 0.0)
                throw std::domain_error("MomentumDistribution: negative weight");
            total += o.weight;
            if (!seen.insert({static_cast<int>(o.first.tag), static_cast<int>(o.second.tag)}).second)
                throw std::domain_error("MomentumDistribution: duplicate outcome labels");
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::domain_error("MomentumDistribution: weights must sum to 1");
    }

    MomentumFamily family() const { return family_; }
    const std::vector<MomentumOutcome>& outcomes() const { return outcomes_; }

    /// Marginal weights of one particle (0 or 1).
    std::map<MomentumTag, double> marginal(int particle) const {
        std::map<MomentumTag, double> m;
        for (const auto& o : outcomes_)
            m[(particle == 0 ? o.first : o.second).tag] += o.weight;
        return m;
    }

private:
    MomentumFamily family_;
    std::vector<MomentumOutcome> outcomes_;
};

/// Single product outcome (p, q): the EPR-Bohm setup.
inline MomentumDistribution eprb() {
    return MomentumDistribution(MomentumFamily::EPRB,
                                {{MomentumTag::PlusP, MomentumTag::PlusP, 1.0}});
}

/// Symmetric product momenta: (+-p, +-q), weight 1/4 each.
inline MomentumDistribution sigma() {
    std::vector<MomentumOutcome> out;
    for (MomentumTag a : {MomentumTag::PlusP, MomentumTag::MinusP})
        for (MomentumTag b : {MomentumTag::PlusP, MomentumTag::MinusP})
            out.push_back({a, b, 0.25});
    return MomentumDistribution(MomentumFamily::Sigma, std::move(out));
}

/// Two-plane product momenta: both particles over {+-p, +-p_perp},
/// sixteen outcomes of weight 1/16.
inline MomentumDistribution cross() {
    const MomentumTag tags[] = {MomentumTag::PlusP, MomentumTag::MinusP,
                                MomentumTag::PlusPerp, MomentumTag::MinusPerp};
    std::vector<MomentumOutcome> out;
    for (MomentumTag a : tags)
        for (MomentumTag b : tags)
            out.push_back({a, b, 1.0 / 16.0});
    return MomentumDistribution(MomentumFamily::Cross, std::move(out));
}

/// Diagonal mixture of a maximally entangled momentum ket: two outcomes of
/// weight 1/2 whose sign pattern is correlated (Phi-like) or anticorrelated
/// (Psi-like); the bracketed kinds put the second particle in the
/// perpendicular plane.
inline MomentumDistribution entangled(MomentumFamily kind) {
    switch (kind) {
        case MomentumFamily::PhiPlus:
            return MomentumDistribution(kind, {{MomentumTag::PlusP, MomentumTag::PlusP, 0.5},
                                               {MomentumTag::MinusP, MomentumTag::MinusP, 0.5}});
        case MomentumFamily::PsiPlus:
            return MomentumDistribution(kind, {{MomentumTag::PlusP, MomentumTag::MinusP, 0.5},
                                               {MomentumTag::MinusP, MomentumTag::PlusP, 0.5}});
        case MomentumFamily::PhiPlusPerp:
            return MomentumDistribution(kind, {{MomentumTag::PlusP, MomentumTag::PlusPerp, 0.5},
                                               {MomentumTag::MinusP, MomentumTag::MinusPerp, 0.5}});
        case MomentumFamily::PsiPlusPerp:
            return MomentumDistribution(kind, {{MomentumTag::PlusP, MomentumTag::MinusPerp, 0.5},
                                               {MomentumTag::MinusP, MomentumTag::PlusPerp, 0.5}});
        default:
            throw std::invalid_argument("entangled: kind must be one of the four entangled families");
    }
}

/// Pure momentum amplitude psi_M(p, q) on a joint label.
struct MomentumAmplitude {
    MomentumTag first;
    MomentumTag second;
    cplx amplitude;
};

/// Keeps only the diagonal of the projector on a pure momentum ket:
/// weights |psi_M(p, q)|^2. Each amplitude list must be normalized.
inline MomentumDistribution diagonal_mixture(const std::vector<MomentumAmplitude>& amps,
                                             MomentumFamily family) {
    double total = 0.0;
    for (const auto& a : amps)
        total += std::norm(a.amplitude);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::domain_error("diagonal_mixture: amplitudes are not normalized");
    std::vector<MomentumOutcome> out;
    out.reserve(amps.size());
    for (const auto& a : amps)
        out.push_back({a.first, a.second, std::norm(a.amplitude)});
    return MomentumDistribution(family, std::move(out));
}

/// Local gauge transformation psi -> e^{i phi(p, q)} psi. The induced
/// diagonal mixture is unchanged.
inline std::vector<MomentumAmplitude>
apply_gauge_phase(std::vector<MomentumAmplitude> amps,
                  const std::function<double(MomentumTag, MomentumTag)>& phase) {
    for (auto& a : amps)
        a.amplitude *= std::polar(1.0, phase(a.first, a.second));
    return amps;
}

/// Assigns concrete 3-vectors for a boost along +z: in-plane labels get a
/// transverse component +-pt (x for p, y for p_perp) and a shared
/// longitudinal component pz; the origin label is the zero vector. All
/// in-plane momenta have equal magnitude.
inline MomentumDistribution with_vectors(const MomentumDistribution& d, double pt, double pz) {
    if (!(pt > 0.0))
        throw std::domain_error("with_vectors: transverse component must be positive");
    auto realize = [&](MomentumTag t) -> Vec3 {
        switch (t) {
            case MomentumTag::PlusP: return Vec3(pt, 0.0, pz);
            case MomentumTag::MinusP: return Vec3(-pt, 0.0, pz);
            case MomentumTag::PlusPerp: return Vec3(0.0, pt, pz);
            case MomentumTag::MinusPerp: return Vec3(0.0, -pt, pz);
            default: return Vec3::Zero();
        }
    };
    std::vector<MomentumOutcome> out;
    out.reserve(d.outcomes().size());
    for (const auto& o : d.outcomes())
        out.push_back({MomentumLabel(o.first.tag, realize(o.first.tag)),
                       MomentumLabel(o.second.tag, realize(o.second.tag)), o.weight});
    return MomentumDistribution(d.family(), std::move(out));
}

}  // namespace wignerlab
