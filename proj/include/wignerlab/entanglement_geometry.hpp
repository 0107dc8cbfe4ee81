#pragma once

// Concurrence, correlation-tensor extraction, Bell-diagonal geometry
// (tetrahedron / separable octahedron), orbits over the Wigner angle, and
// the library of closed-form t-vectors / concurrences / separability
// windows used as reference oracles for the numeric channel.

#include "wignerlab/boost_map.hpp"
#include "wignerlab/spin_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wignerlab {

/// Scenario not covered by the closed-form tables.
struct unsupported_scenario : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Diagonal correlations (t_xx, t_yy, t_zz) of a two-qubit state.
struct TVector {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;

    Vec3 as_vec3() const { return Vec3(xx, yy, zz); }
    double one_norm() const { return std::abs(xx) + std::abs(yy) + std::abs(zz); }
    double norm() const { return as_vec3().norm(); }
};

/// Full Hilbert-Schmidt decomposition coefficients: local Bloch vectors r,
/// s and the 3x3 correlation matrix t.
struct CorrelationTensor {
    Vec3 r = Vec3::Zero();
    Vec3 s = Vec3::Zero();
    Mat3 t = Mat3::Zero();

    TVector diagonal() const { return {t(0, 0), t(1, 1), t(2, 2)}; }
    double max_off_diagonal() const {
        double m = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j)
                    m = std::max(m, std::abs(t(i, j)));
        return m;
    }
};

/// Wootters concurrence: C = max{0, l1 - l2 - l3 - l4} with l_i the
/// descending square roots of the eigenvalues of rho (sy x sy) rho^*
/// (sy x sy). Eigenvalues of that product are real and nonnegative up to
/// rounding; imaginary parts beyond 1e-10 flag an invalid input.
inline double concurrence(const SpinState& state) {
    const Mat4c& rho = state.matrix();
    const Mat4c yy = tensor2(pauli_y(), pauli_y());
    const Mat4c flipped = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat4c> es(rho * flipped, false);

    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        const cplx ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > 1e-10)
            throw std::domain_error("concurrence: spin-flip spectrum is not real");
        roots[i] = std::sqrt(std::max(0.0, ev.real()));
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    const double c = roots[0] - roots[1] - roots[2] - roots[3];
    return std::clamp(c, 0.0, 1.0);
}

/// r_i = Tr[rho (s_i x 1)], s_i = Tr[rho (1 x s_i)], t_ij = Tr[rho (s_i x s_j)].
inline CorrelationTensor correlation_tensor(const SpinState& state) {
    const Mat4c& rho = state.matrix();
    const Mat2c id = Mat2c::Identity();
    CorrelationTensor out;
    for (int i = 0; i < 3; ++i) {
        out.r(i) = (rho * tensor2(pauli(i), id)).trace().real();
        out.s(i) = (rho * tensor2(id, pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j)
            out.t(i, j) = (rho * tensor2(pauli(i), pauli(j))).trace().real();
    }
    return out;
}

inline TVector t_vector(const SpinState& state) {
    return correlation_tensor(state).diagonal();
}

/// Separable-region membership for Bell-diagonal states: the octahedron
/// T cap -T is exactly the 1-norm unit ball of the t-vector.
inline bool in_octahedron(const TVector& t) {
    return t.one_norm() <= 1.0 + 1e-12;
}

/// On the Werner line, a Bell inequality can be violated iff |t| exceeds
/// sqrt(3)/sqrt(2) (lambda > 1/sqrt(2)); the boundary itself cannot.
inline bool bell_violation_possible(const TVector& t) {
    return t.norm() > std::sqrt(3.0) / std::sqrt(2.0);
}

inline std::vector<double> omega_grid(std::size_t n) {
    if (n < 2)
        throw std::domain_error("omega_grid: need at least two points");
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k)
        grid[k] = pi * static_cast<double>(k) / static_cast<double>(n - 1);
    return grid;
}

struct OrbitPoint {
    double omega;
    CorrelationTensor tensor;
    double concurrence;
};

/// The curve traced by the boosted spin state as omega sweeps [0, pi].
struct Orbit {
    ScenarioConfig config;
    std::vector<OrbitPoint> points;
    bool bell_diagonal = true;
};

/// Channels that keep the Werner input Bell diagonal: everything except
/// the single-unitary EPRB map and mixed-axis rotations on entangled
/// momenta (those produce one off-diagonal correlation).
inline bool scenario_bell_diagonal(MomentumFamily family, const RotationType& type) {
    if (type.kind == RotationKind::Single)
        return family != MomentumFamily::EPRB;
    if (family == MomentumFamily::EPRB)
        return false;
    const bool entangled_family =
        family == MomentumFamily::PhiPlus || family == MomentumFamily::PsiPlus ||
        family == MomentumFamily::PhiPlusPerp || family == MomentumFamily::PsiPlusPerp;
    return !(entangled_family && type.kind == RotationKind::MixedAxes);
}

inline Orbit orbit(const ScenarioConfig& config, const std::vector<double>& omegas) {
    Orbit out{config, {}, scenario_bell_diagonal(config.family, config.type)};
    out.points.reserve(omegas.size());
    double last = -1.0;
    const SpinState rest = werner_state(config.lambda);
    for (double w : omegas) {
        if (!(w >= 0.0) || w > pi || w <= last)
            throw std::domain_error("orbit: grid must be strictly increasing within [0, pi]");
        last = w;
        const SpinState mapped = boosted_spin_state(
            rest, assignment_for(config.family, config.type, w, config.chi_over_omega * w));
        out.points.push_back({w, correlation_tensor(mapped), concurrence(mapped)});
    }
    return out;
}

namespace detail {

inline int axis_index(Axis a) { return static_cast<int>(a); }

/// t-vector diag(lambda * sign_i * m_i) with the Bell mask (+,-,+).
inline Mat3 masked_diag(double lambda, double mx, double my, double mz) {
    Mat3 t = Mat3::Zero();
    t(0, 0) = lambda * mx;
    t(1, 1) = -lambda * my;
    t(2, 2) = lambda * mz;
    return t;
}

/// Diagonal built from a per-axis magnitude rule: axes in {a} (and {a,b})
/// keep m_sel, the rest m_other.
inline Mat3 axis_rule_diag(double lambda, std::initializer_list<Axis> selected, double m_sel,
                           double m_other) {
    double m[3] = {m_other, m_other, m_other};
    for (Axis a : selected)
        m[axis_index(a)] = m_sel;
    return masked_diag(lambda, m[0], m[1], m[2]);
}

inline bool is_entangled_family(MomentumFamily f) {
    return f == MomentumFamily::PhiPlus || f == MomentumFamily::PsiPlus ||
           f == MomentumFamily::PhiPlusPerp || f == MomentumFamily::PsiPlusPerp;
}

/// Sign structure of the entangled families: correlated (Phi-like) pairs
/// rotate both spins in the same direction, anticorrelated (Psi-like) in
/// opposite directions.
inline bool correlated_signs(MomentumFamily f) {
    return f == MomentumFamily::PhiPlus || f == MomentumFamily::PhiPlusPerp;
}

inline int levi_civita(Axis a, Axis b) {
    const int i = axis_index(a);
    const int j = axis_index(b);
    if (i == j)
        return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace detail

/// Closed-form correlation tensor of the boosted Werner state (diagonal
/// cases returned as diagonal matrices). Throws unsupported_scenario for
/// combinations without a tabulated form (e.g. EPRB).
inline Mat3 closed_form_t(MomentumFamily family, const RotationType& type, double omega,
                          double lambda) {
    using namespace detail;
    const double c = std::cos(omega);
    const double c2 = std::cos(2.0 * omega);
    const double half2 = std::pow(std::cos(0.5 * omega), 2);
    const double s = std::sin(omega);
    const Axis a = type.axis1;
    const Axis b = type.axis2;

    if (family == MomentumFamily::EPRB)
        throw unsupported_scenario("closed_form_t: EPRB orbits are not Bell diagonal");

    if (type.kind == RotationKind::Single) {
        if (family == MomentumFamily::Cross)
            return axis_rule_diag(lambda, {a, b}, half2, c);
        // Sigma; the entangled families reduce to it for single rotations.
        return axis_rule_diag(lambda, {a}, 1.0, c);
    }

    switch (family) {
        case MomentumFamily::Sigma:
            if (type.kind == RotationKind::SameAxis)
                return axis_rule_diag(lambda, {a}, 1.0, c * c);
            return axis_rule_diag(lambda, {a, b}, c, c * c);
        case MomentumFamily::Cross:
            return axis_rule_diag(lambda, {a, b}, half2 * half2, c * c);
        default:
            break;
    }

    // Entangled families.
    if (type.kind == RotationKind::SameAxis) {
        const bool trivial = detail::correlated_signs(family) ? (a == Axis::Y) : (a != Axis::Y);
        if (trivial)
            return masked_diag(lambda, 1.0, 1.0, 1.0);
        return axis_rule_diag(lambda, {a}, 1.0, c2);
    }

    // Mixed axes: the Sigma/mixed diagonal plus a single +-sin^2 entry at
    // (b, a), sign -eps(a,b) for correlated families and +eps(a,b) for
    // anticorrelated ones.
    Mat3 t = axis_rule_diag(lambda, {a, b}, c, c * c);
    const double sign = detail::correlated_signs(family) ? -1.0 : 1.0;
    t(axis_index(b), axis_index(a)) = sign * levi_civita(a, b) * lambda * s * s;
    return t;
}

/// Rest-frame Werner concurrence max{0, (3 lambda - 1)/2}.
inline double werner_rest_concurrence(double lambda) {
    return std::max(0.0, 0.5 * (3.0 * lambda - 1.0));
}

/// Closed-form concurrence of the boosted Werner state.
inline double closed_form_concurrence(MomentumFamily family, const RotationType& type,
                                      double omega, double lambda) {
    const double c = std::cos(omega);
    const double c2 = std::cos(2.0 * omega);

    if (family == MomentumFamily::EPRB)
        return werner_rest_concurrence(lambda);

    if (type.kind == RotationKind::Single) {
        if (family == MomentumFamily::Cross)
            return std::max(0.0, 0.5 * (-1.0 + lambda + 2.0 * lambda * c));
        return std::max(0.0, 0.5 * (-1.0 + lambda + 2.0 * lambda * std::abs(c)));
    }

    switch (family) {
        case MomentumFamily::Sigma:
            if (type.kind == RotationKind::SameAxis)
                return std::max(0.0, -0.5 + lambda + 0.5 * lambda * c2);
            else {
                const double p = 2.0 + lambda + 4.0 * lambda * c + lambda * c2;
                const double q = 2.0 + lambda - 4.0 * lambda * c + lambda * c2;
                return std::max(0.0, 0.125 * (std::abs(std::abs(p) - std::abs(q)) +
                                              2.0 * (-2.0 + lambda + lambda * c2)));
            }
        case MomentumFamily::Cross:
            return std::max(0.0, (1.0 / 16.0) *
                                     (-std::abs(4.0 * lambda * c - lambda * c2 + lambda - 4.0) +
                                      4.0 * lambda * c + 7.0 * lambda * c2 + 9.0 * lambda - 4.0));
        default:
            break;
    }

    if (type.kind == RotationKind::SameAxis) {
        const bool trivial =
            detail::correlated_signs(family) ? (type.axis1 == Axis::Y) : (type.axis1 != Axis::Y);
        if (trivial)
            return werner_rest_concurrence(lambda);
        return std::max(0.0, 0.5 * (-1.0 + lambda + 2.0 * lambda * std::abs(c2)));
    }
    return std::max(0.0, -0.5 + lambda + 0.5 * lambda * c2);
}

/// The omega interval on which the boosted state is separable. Closed
/// intervals; empty when the concurrence never vanishes.
struct SeparabilityWindow {
    bool empty = true;
    double lo = 0.0;
    double hi = 0.0;

    static SeparabilityWindow none() { return {}; }
    static SeparabilityWindow interval(double lo, double hi) {
        if (!(0.0 <= lo) || !(lo <= hi) || !(hi <= pi))
            throw std::domain_error("SeparabilityWindow: need 0 <= lo <= hi <= pi");
        return {false, lo, hi};
    }
    static SeparabilityWindow full() { return interval(0.0, pi); }
};

/// Analytic separability window where the closed forms give arccos roots;
/// the cross family's two-rotation case is refined by bisection on its
/// closed-form concurrence (tolerance 1e-9). Scenarios whose concurrence
/// vanishes on two disjoint intervals (nontrivial same-axis entangled
/// orbits) are not representable and raise unsupported_scenario.
inline SeparabilityWindow separability_window(MomentumFamily family, const RotationType& type,
                                              double lambda) {
    if (!(lambda >= 0.0) || lambda > 1.0)
        throw std::domain_error("separability_window: lambda must lie in [0, 1]");
    if (lambda <= 1.0 / 3.0 + 1e-15)
        return SeparabilityWindow::full();

    if (family == MomentumFamily::EPRB)
        return SeparabilityWindow::none();

    if (type.kind == RotationKind::Single) {
        const double k = (1.0 - lambda) / (2.0 * lambda);  // < 1 since lambda > 1/3
        const double root = std::acos(k);
        if (family == MomentumFamily::Cross)
            return SeparabilityWindow::interval(root, pi);
        return SeparabilityWindow::interval(root, pi - root);
    }

    switch (family) {
        case MomentumFamily::Sigma: {
            if (type.kind == RotationKind::SameAxis) {
                const double half = 0.5 * std::acos((1.0 - 2.0 * lambda) / lambda);
                return SeparabilityWindow::interval(half, pi - half);
            }
            const double alpha =
                std::acos((lambda - std::sqrt(lambda + lambda * lambda)) / lambda);
            return SeparabilityWindow::interval(pi - alpha, alpha);
        }
        case MomentumFamily::Cross: {
            // C is positive at 0 and nonpositive from the first root to pi;
            // bisect the closed form for the edge.
            auto f = [&](double w) { return closed_form_concurrence(family, type, w, lambda); };
            double lo = 0.0, hi = pi;
            for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) > 0.0 ? lo : hi) = mid;
            }
            return SeparabilityWindow::interval(0.5 * (lo + hi), pi);
        }
        default:
            break;
    }

    if (type.kind == RotationKind::SameAxis) {
        const bool trivial =
            detail::correlated_signs(family) ? (type.axis1 == Axis::Y) : (type.axis1 != Axis::Y);
        if (trivial)
            return SeparabilityWindow::none();
        throw unsupported_scenario(
            "separability_window: nontrivial same-axis entangled orbits vanish on two "
            "disjoint intervals");
    }
    // Entangled mixed axes share the Sigma same-axis concurrence.
    const double half = 0.5 * std::acos((1.0 - 2.0 * lambda) / lambda);
    return SeparabilityWindow::interval(half, pi - half);
}

/// Window edges recovered from the numeric channel itself: scan a fine
/// grid for the separable plateau (C <= eps) and bisect the edges.
inline SeparabilityWindow separability_window_numeric(MomentumFamily family,
                                                      const RotationType& type, double lambda,
                                                      double tol = 1e-9) {
    const SpinState rest = werner_state(lambda);
    auto conc = [&](double w) {
        return concurrence(boosted_spin_state(rest, assignment_for(family, type, w, w)));
    };
    const double eps = 1e-12;
    const std::size_t n = 1441;
    const std::vector<double> grid = omega_grid(n);
    std::vector<bool> separable(n);
    std::size_t first = n, last = n;
    for (std::size_t i = 0; i < n; ++i) {
        separable[i] = conc(grid[i]) <= eps;
        if (separable[i]) {
            if (first == n)
                first = i;
            last = i;
        }
    }
    if (first == n)
        return SeparabilityWindow::none();
    for (std::size_t i = first; i <= last; ++i)
        if (!separable[i])
            throw unsupported_scenario(
                "separability_window_numeric: separable region is not a single interval");

    auto bisect = [&](double inside, double outside) {
        for (int iter = 0; iter < 200 && std::abs(inside - outside) > tol * 0.5; ++iter) {
            const double mid = 0.5 * (inside + outside);
            (conc(mid) <= eps ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    };

    double lo = grid[first];
    double hi = grid[last];
    if (first > 0)
        lo = bisect(grid[first], grid[first - 1]);
    if (last + 1 < n)
        hi = bisect(grid[last], grid[last + 1]);
    return SeparabilityWindow::interval(std::max(0.0, lo), std::min(pi, hi));
}

}  // namespace wignerlab
