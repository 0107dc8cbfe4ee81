#pragma once

// Dense 2x2 / 4x4 complex algebra for two spin-1/2 particles: Pauli
// operators, axis-angle SU(2) rotations, Kronecker products, Bell vectors
// and Werner states. Computational basis is |00>,|01>,|10>,|11> with
// |0> = spin-up along z; the first tensor factor is particle 1.

#include "wignerlab/lorentz.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace wignerlab {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

inline const cplx iu{0.0, 1.0};

enum class Axis { X, Y, Z };

inline Vec3 axis_unit(Axis a) {
    switch (a) {
        case Axis::X: return Vec3::UnitX();
        case Axis::Y: return Vec3::UnitY();
        default: return Vec3::UnitZ();
    }
}

inline Mat2c pauli_x() {
    Mat2c m;
    m << 0, 1, 1, 0;
    return m;
}

inline Mat2c pauli_y() {
    Mat2c m;
    m << 0, -iu, iu, 0;
    return m;
}

inline Mat2c pauli_z() {
    Mat2c m;
    m << 1, 0, 0, -1;
    return m;
}

inline Mat2c pauli(Axis a) {
    switch (a) {
        case Axis::X: return pauli_x();
        case Axis::Y: return pauli_y();
        default: return pauli_z();
    }
}

inline Mat2c pauli(int i) { return pauli(static_cast<Axis>(i)); }

/// n . sigma for a real 3-vector n.
inline Mat2c pauli_dot(const Vec3& n) {
    return n(0) * pauli_x() + n(1) * pauli_y() + n(2) * pauli_z();
}

/// Kronecker product with the first factor acting on particle 1.
inline Mat4c tensor2(const Mat2c& a, const Mat2c& b) {
    Mat4c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

/// Spin-1/2 rotation exp(-i w/2 n.sigma) about the unit axis n.
struct SU2Rotation {
    Vec3 axis;
    double angle;
    Mat2c matrix;
};

inline SU2Rotation su2_rotation(const Vec3& n, double omega) {
    if (std::abs(n.norm() - 1.0) > 1e-9)
        throw std::domain_error("su2_rotation: axis must be a unit vector");
    const double c = std::cos(0.5 * omega);
    const double s = std::sin(0.5 * omega);
    return {n, omega, c * Mat2c::Identity() - iu * s * pauli_dot(n)};
}

inline SU2Rotation su2_rotation(Axis a, double omega) {
    return su2_rotation(axis_unit(a), omega);
}

inline SU2Rotation su2_identity() {
    return {Vec3::UnitZ(), 0.0, Mat2c::Identity()};
}

/// SU(2) lift of an SO(3) matrix (either preimage works for conjugation).
inline SU2Rotation su2_from_rotation_matrix(const Mat3& r) {
    const AxisAngle aa = rotation_axis_angle(r);
    return su2_rotation(aa.axis, aa.angle);
}

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline Vec4c bell_state(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    Vec4c v = Vec4c::Zero();
    switch (kind) {
        case BellKind::PhiPlus:  v(0) = r;  v(3) = r;  break;
        case BellKind::PhiMinus: v(0) = r;  v(3) = -r; break;
        case BellKind::PsiPlus:  v(1) = r;  v(2) = r;  break;
        case BellKind::PsiMinus: v(1) = r;  v(2) = -r; break;
    }
    return v;
}

/// Two-qubit density matrix: Hermitian within 1e-10, unit trace within
/// 1e-10, eigenvalues >= -1e-10. Construction validates, so every
/// SpinState in circulation satisfies the invariants.
class SpinState {
public:
    static SpinState from_matrix(const Mat4c& rho) {
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::domain_error("SpinState: matrix is not Hermitian");
        if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-10)
            throw std::domain_error("SpinState: trace must equal 1");
        Eigen::SelfAdjointEigenSolver<Mat4c> es(0.5 * (rho + rho.adjoint()),
                                                Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw std::domain_error("SpinState: matrix is not positive semidefinite");
        return SpinState(rho);
    }

    const Mat4c& matrix() const { return rho_; }

private:
    explicit SpinState(const Mat4c& rho) : rho_(rho) {}
    Mat4c rho_;
};

/// Projector |psi><psi| for a unit vector psi.
inline SpinState pure_state(const Vec4c& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::domain_error("pure_state: amplitudes must have unit norm");
    return SpinState::from_matrix(psi * psi.adjoint());
}

/// Werner state lambda |Phi+><Phi+| + (1-lambda) I/4.
inline SpinState werner_state(double lambda) {
    if (!(lambda >= 0.0) || lambda > 1.0)
        throw std::domain_error("werner_state: lambda must lie in [0, 1]");
    const Vec4c phi = bell_state(BellKind::PhiPlus);
    const Mat4c rho =
        lambda * (phi * phi.adjoint()) + (1.0 - lambda) * 0.25 * Mat4c::Identity();
    return SpinState::from_matrix(rho);
}

/// U rho U^dag for a unitary U; preserves trace, Hermiticity and spectrum.
inline SpinState conjugate_by(const SpinState& rho, const Mat4c& u) {
    if ((u * u.adjoint() - Mat4c::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("conjugate_by: operator is not unitary");
    return SpinState::from_matrix(u * rho.matrix() * u.adjoint());
}

}  // namespace wignerlab
