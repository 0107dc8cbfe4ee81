#pragma once

// Special-relativistic kinematics for composing boosts: Lorentz factors,
// rapidities, the Thomas-Wigner rotation angle/axis in closed form, and an
// independent 4x4 matrix construction W = L(Lp)^-1 L L(p) used as the
// numerical oracle for the closed form. Natural units, c = 1, metric
// signature (+,-,-,-).

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wignerlab {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

inline const double pi = 3.14159265358979323846;

/// Dimensionless velocity (fraction of c), |v| < 1.
struct Velocity3 {
    Vec3 v;

    explicit Velocity3(const Vec3& vec) : v(vec) {
        if (!v.allFinite())
            throw std::domain_error("Velocity3: components must be finite");
        if (v.norm() >= 1.0)
            throw std::domain_error("Velocity3: speed must be < 1");
    }
    Velocity3(double vx, double vy, double vz) : Velocity3(Vec3(vx, vy, vz)) {}

    double speed() const { return v.norm(); }
};

/// Lorentz factor (1 - v^2)^(-1/2) for a speed v in [0, 1).
inline double gamma(double v) {
    if (!(v >= 0.0) || v >= 1.0)
        throw std::domain_error("gamma: speed must lie in [0, 1)");
    return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

/// Additive boost parameter xi = arctanh(v).
inline double rapidity(double v) {
    if (!(v >= 0.0) || v >= 1.0)
        throw std::domain_error("rapidity: speed must lie in [0, 1)");
    return std::atanh(v);
}

/// D = sqrt(((g1+1)/(g1-1)) ((g2+1)/(g2-1))). Diverges as either speed
/// goes to zero, approaches 1 as both go to the speed of light.
inline double d_factor(double gamma1, double gamma2) {
    if (!(gamma1 > 1.0) || !(gamma2 > 1.0))
        throw std::domain_error("d_factor: requires gamma > 1 (nonzero speeds)");
    return std::sqrt(((gamma1 + 1.0) / (gamma1 - 1.0)) *
                     ((gamma2 + 1.0) / (gamma2 - 1.0)));
}

/// A two-boost scenario: speeds of both boosts and the angle between them,
/// with the derived Lorentz factors and D-factor. D is stored as +infinity
/// when either speed vanishes (the rotation angle is zero there).
struct BoostConfig {
    double v1;
    double v2;
    double theta;
    double gamma1;
    double gamma2;
    double d;

    BoostConfig(double speed1, double speed2, double angle)
        : v1(speed1), v2(speed2), theta(angle) {
        if (!(v1 >= 0.0) || v1 >= 1.0 || !(v2 >= 0.0) || v2 >= 1.0)
            throw std::domain_error("BoostConfig: speeds must lie in [0, 1)");
        if (!(theta >= 0.0) || theta > pi)
            throw std::domain_error("BoostConfig: theta must lie in [0, pi]");
        gamma1 = gamma(v1);
        gamma2 = gamma(v2);
        d = (v1 > 0.0 && v2 > 0.0) ? d_factor(gamma1, gamma2)
                                   : std::numeric_limits<double>::infinity();
    }
};

/// Thomas-Wigner rotation angle, omega = 2 atan(sin(theta)/(cos(theta)+D)).
/// Returns a value in [0, pi); zero for collinear or zero-speed boosts.
inline double twr_angle(const BoostConfig& cfg) {
    if (cfg.v1 == 0.0 || cfg.v2 == 0.0)
        return 0.0;
    // cos(theta) + D > 0 always (D > 1), so the principal branch is continuous
    // and nonnegative on theta in [0, pi].
    return 2.0 * std::atan2(std::sin(cfg.theta), std::cos(cfg.theta) + cfg.d);
}

/// Rotation axis n = v2 x v1 / |v2 x v1|, orthogonal to the boost plane.
inline Vec3 twr_axis(const Velocity3& v1, const Velocity3& v2) {
    const Vec3 cross = v2.v.cross(v1.v);
    const double n = cross.norm();
    if (n < 1e-12)
        throw std::domain_error("twr_axis: parallel or zero velocities have no rotation plane");
    return cross / n;
}

/// Rapidity and unit direction of a single boost.
struct BoostParam {
    double xi;
    Vec3 e;

    BoostParam(double rap, const Vec3& dir) : xi(rap), e(dir) {
        if (!(xi >= 0.0))
            throw std::domain_error("BoostParam: rapidity must be nonnegative");
        if (std::abs(e.norm() - 1.0) > 1e-12)
            throw std::domain_error("BoostParam: direction must be a unit vector");
    }

    static BoostParam from_velocity(const Velocity3& v) {
        const double s = v.speed();
        if (s == 0.0)
            return BoostParam(0.0, Vec3::UnitZ());
        return BoostParam(rapidity(s), v.v / s);
    }
};

inline Mat4 minkowski_metric() {
    Mat4 eta = Mat4::Identity();
    eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
    return eta;
}

/// True iff m preserves the metric, has det +1 and is orthochronous.
inline bool is_lorentz(const Mat4& m, double tol = 1e-10) {
    const Mat4 eta = minkowski_metric();
    if (((m.transpose() * eta * m) - eta).cwiseAbs().maxCoeff() > tol)
        return false;
    if (std::abs(m.determinant() - 1.0) > 10.0 * tol)
        return false;
    return m(0, 0) >= 1.0 - tol;
}

/// Proper orthochronous Lorentz transformation. Factory validates; group
/// operations stay inside the group so they skip revalidation.
class LorentzMatrix {
public:
    static LorentzMatrix from_matrix(const Mat4& m, double tol = 1e-10) {
        if (!is_lorentz(m, tol))
            throw std::invalid_argument("LorentzMatrix: matrix violates the Lorentz-group invariants");
        return LorentzMatrix(m);
    }

    const Mat4& matrix() const { return m_; }

    /// Exact group inverse, eta M^T eta.
    LorentzMatrix inverse() const {
        const Mat4 eta = minkowski_metric();
        return LorentzMatrix(eta * m_.transpose() * eta);
    }

    LorentzMatrix operator*(const LorentzMatrix& rhs) const {
        return LorentzMatrix(m_ * rhs.m_);
    }
    Vec4 operator*(const Vec4& x) const { return m_ * x; }

private:
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}
    Mat4 m_;

    friend LorentzMatrix standard_boost(const Vec3&, double);
    friend LorentzMatrix boost_matrix(const BoostParam&);
    friend LorentzMatrix rotation_matrix4(const Mat3&);
};

/// Canonical (symmetric) boost L(p) taking the rest four-momentum (m, 0)
/// to (E(p), p), with E = sqrt(m^2 + |p|^2).
inline LorentzMatrix standard_boost(const Vec3& p, double mass) {
    if (!(mass > 0.0))
        throw std::domain_error("standard_boost: mass must be positive");
    Mat4 m = Mat4::Identity();
    const double pn = p.norm();
    if (pn > 0.0) {
        const double energy = std::sqrt(mass * mass + pn * pn);
        const double g = energy / mass;
        const Vec3 n = p / pn;
        const Vec3 gb = p / mass;  // gamma * beta
        m(0, 0) = g;
        for (int i = 0; i < 3; ++i) {
            m(0, i + 1) = m(i + 1, 0) = gb(i);
            for (int j = 0; j < 3; ++j)
                m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (g - 1.0) * n(i) * n(j);
        }
    }
    return LorentzMatrix(m);
}

/// Pure boost exp(xi K_e) along the unit direction e.
inline LorentzMatrix boost_matrix(const BoostParam& b) {
    Mat4 m = Mat4::Identity();
    const double ch = std::cosh(b.xi);
    const double sh = std::sinh(b.xi);
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = m(i + 1, 0) = sh * b.e(i);
        for (int j = 0; j < 3; ++j)
            m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * b.e(i) * b.e(j);
    }
    return LorentzMatrix(m);
}

/// Embeds a spatial rotation as a Lorentz transformation.
inline LorentzMatrix rotation_matrix4(const Mat3& r) {
    Mat4 m = Mat4::Identity();
    m.block<3, 3>(1, 1) = r;
    return LorentzMatrix::from_matrix(m);
}

/// Wigner rotation W(L, p) = L(Lp)^-1 L L(p) for a massive particle.
/// The result stabilizes the rest frame, so it is returned as the SO(3)
/// block; throws if L is not a proper orthochronous Lorentz matrix or the
/// residue fails to be a rotation within 1e-10.
inline Mat3 wigner_rotation_exact(const LorentzMatrix& lambda, const Vec3& p, double mass) {
    if (!is_lorentz(lambda.matrix(), 1e-10))
        throw std::invalid_argument("wigner_rotation_exact: invalid Lorentz matrix");
    if (!(mass > 0.0))
        throw std::domain_error("wigner_rotation_exact: mass must be positive");

    const double energy = std::sqrt(mass * mass + p.squaredNorm());
    Vec4 fourp;
    fourp << energy, p(0), p(1), p(2);
    const Vec4 boosted = lambda * fourp;
    const Vec3 pprime = boosted.tail<3>();

    const Mat4 w =
        (standard_boost(pprime, mass).inverse() * lambda * standard_boost(p, mass)).matrix();

    if (std::abs(w(0, 0) - 1.0) > 1e-10 || w.row(0).tail<3>().cwiseAbs().maxCoeff() > 1e-10 ||
        w.col(0).tail<3>().cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("wigner_rotation_exact: residue is not a pure rotation");

    Mat3 r = w.block<3, 3>(1, 1);
    if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-10 ||
        std::abs(r.determinant() - 1.0) > 1e-10)
        throw std::invalid_argument("wigner_rotation_exact: spatial block is not in SO(3)");
    return r;
}

/// Rotation angle of an SO(3) matrix from the trace, cos w = (tr R - 1)/2,
/// clamped against rounding at w ~ 0, pi.
inline double rotation_angle(const Mat3& r) {
    const double c = 0.5 * (r.trace() - 1.0);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

struct AxisAngle {
    Vec3 axis;
    double angle;
};

/// Axis-angle decomposition of an SO(3) matrix. The axis is arbitrary at
/// angle 0 and sign-ambiguous at angle pi (both conventions rotate alike).
inline AxisAngle rotation_axis_angle(const Mat3& r) {
    const double ang = rotation_angle(r);
    if (ang < 1e-12)
        return {Vec3::UnitZ(), 0.0};

    const Vec3 skew(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    const double s = std::sin(ang);
    if (std::abs(s) > 1e-6)
        return {(skew / (2.0 * s)).normalized(), ang};

    // Angle near pi: R + I ~ 2 n n^T, take the dominant column.
    const Mat3 b = 0.5 * (r + Mat3::Identity());
    int k = 0;
    b.diagonal().maxCoeff(&k);
    Vec3 axis = b.col(k) / std::sqrt(b(k, k));
    if (skew.dot(axis) < 0.0)
        axis = -axis;
    return {axis.normalized(), ang};
}

}  // namespace wignerlab
