#include "qslbath/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qslbath {

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    }
    const double asym = max_asymmetry(rho_);
    if (asym > tol::hermitian) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian, max |rho - rho^dag| = " << asym;
        throw std::invalid_argument(msg.str());
    }
    const double trace = rho_.trace().real();
    if (std::abs(trace - 1.0) > tol::trace_unit) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << trace << " deviates from 1 beyond " << tol::trace_unit;
        throw std::invalid_argument(msg.str());
    }
    EigenDecomposition eig = herm_eig(rho_);
    if (eig.eigenvalues(0) < -tol::psd_clamp) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << eig.eigenvalues(0);
        throw std::invalid_argument(msg.str());
    }
    eigenvalues_ = std::move(eig.eigenvalues);
    eigenvectors_ = std::move(eig.eigenvectors);
    RealVector roots(eigenvalues_.size());
    for (Index i = 0; i < roots.size(); ++i) {
        // Clamp sub-tolerance eigenvalues to zero: noise-level weights would
        // otherwise surface as sqrt(eps)-sized square-root errors.
        if (eigenvalues_(i) <= tol::psd_clamp) eigenvalues_(i) = 0.0;
        roots(i) = std::sqrt(eigenvalues_(i));
    }
    sqrt_ = eigenvectors_ * roots.asDiagonal() * eigenvectors_.adjoint();
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    const double norm = psi.norm();
    if (norm <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
    Vector normalized = psi / norm;
    return DensityMatrix(normalized * normalized.adjoint());
}

Matrix DensityMatrix::log() const {
    if (eigenvalues_(0) <= tol::psd_clamp) {
        std::ostringstream msg;
        msg << "DensityMatrix::log: state is singular (eigenvalue " << eigenvalues_(0) << ")";
        throw std::domain_error(msg.str());
    }
    RealVector logs(eigenvalues_.size());
    for (Index i = 0; i < logs.size(); ++i) logs(i) = std::log(eigenvalues_(i));
    return eigenvectors_ * logs.asDiagonal() * eigenvectors_.adjoint();
}

BlochState::BlochState(double p_in, std::array<double, 3> axis_in) : p(p_in), axis(axis_in) {
    if (!(p >= 0.0) || p > 1.0) {
        throw std::invalid_argument("BlochState: polarization must lie in [0, 1], got " +
                                    std::to_string(p));
    }
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-12) {
        if (norm <= 0.0) throw std::invalid_argument("BlochState: zero axis");
        for (double& c : axis) c /= norm;
    }
}

DensityMatrix thermal_state(const Matrix& h_bath, double beta) {
    if (beta < 0.0) {
        throw std::invalid_argument("thermal_state: beta must be nonnegative, got " +
                                    std::to_string(beta));
    }
    EigenDecomposition eig = herm_eig(h_bath);
    const double ground = eig.eigenvalues(0);
    RealVector weights(eig.eigenvalues.size());
    double z = 0.0;
    for (Index i = 0; i < weights.size(); ++i) {
        weights(i) = std::exp(-beta * (eig.eigenvalues(i) - ground));
        z += weights(i);
    }
    weights /= z;
    return DensityMatrix(eig.eigenvectors * weights.asDiagonal() * eig.eigenvectors.adjoint());
}

double log_partition_function(const Matrix& h_bath, double beta) {
    if (beta < 0.0) throw std::invalid_argument("log_partition_function: beta must be >= 0");
    EigenDecomposition eig = herm_eig(h_bath);
    const double ground = eig.eigenvalues(0);
    double z = 0.0;
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
        z += std::exp(-beta * (eig.eigenvalues(i) - ground));
    }
    return std::log(z) - beta * ground;
}

DensityMatrix bloch_state(const BlochState& state) {
    Matrix rho(2, 2);
    const double px = state.p * state.axis[0];
    const double py = state.p * state.axis[1];
    const double pz = state.p * state.axis[2];
    rho(0, 0) = 0.5 * (1.0 + pz);
    rho(1, 1) = 0.5 * (1.0 - pz);
    rho(0, 1) = 0.5 * Complex(px, -py);
    rho(1, 0) = 0.5 * Complex(px, py);
    return DensityMatrix(rho);
}

BlochCoefficients bloch_function(const std::function<double(double)>& f,
                                 const BlochState& state) {
    const double upper = 0.5 * (1.0 + state.p);
    const double lower = 0.5 * (1.0 - state.p);
    const double f_upper = f(upper);
    const double f_lower = f(lower);
    if (!std::isfinite(f_upper) || !std::isfinite(f_lower)) {
        std::ostringstream msg;
        msg << "bloch_function: f undefined at eigenvalue "
            << (std::isfinite(f_upper) ? lower : upper);
        throw std::domain_error(msg.str());
    }
    return {0.5 * (f_upper + f_lower), 0.5 * (f_upper - f_lower)};
}

double hellinger_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw std::invalid_argument("hellinger_distance: dimension mismatch");
    }
    return 1.0 - (rho1.sqrt() * rho2.sqrt()).trace().real();
}

double skew_information(const DensityMatrix& rho, const Matrix& drive) {
    if (drive.rows() != rho.dim() || drive.cols() != rho.dim()) {
        throw std::invalid_argument("skew_information: drive dimension mismatch");
    }
    const Matrix c = drive * rho.sqrt() - rho.sqrt() * drive;
    return 0.5 * c.squaredNorm();
}

double skew_information(const DensityMatrix& system, const DensityMatrix& bath,
                        const Matrix& drive) {
    if (drive.rows() != system.dim() * bath.dim()) {
        throw std::invalid_argument(
            "skew_information: drive dimension does not match the composite space");
    }
    const Matrix root = kron(system.sqrt(), bath.sqrt());
    const Matrix c = drive * root - root * drive;
    return 0.5 * c.squaredNorm();
}

}  // namespace qslbath
