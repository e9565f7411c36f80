#include "qslbath/evolve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qslbath {

namespace {

Matrix propagator_from_eig(const EigenDecomposition& eig, double t) {
    Vector phases(eig.eigenvalues.size());
    for (Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -eig.eigenvalues(i) * t));
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

std::vector<DensityMatrix> evolve_constant(const Matrix& h, const DensityMatrix& rho0,
                                           std::span<const double> times) {
    if (h.rows() != rho0.dim()) {
        throw std::invalid_argument("evolve_constant: Hamiltonian dimension mismatch");
    }
    const EigenDecomposition eig = herm_eig(h);
    std::vector<DensityMatrix> trajectory;
    trajectory.reserve(times.size());
    for (double t : times) {
        const Matrix u = propagator_from_eig(eig, t);
        trajectory.emplace_back(u * rho0.matrix() * u.adjoint());
    }
    return trajectory;
}

std::vector<DensityMatrix> evolve_stepped(const std::function<Matrix(double)>& h,
                                          const DensityMatrix& rho0,
                                          std::span<const double> times) {
    std::vector<DensityMatrix> trajectory;
    trajectory.reserve(times.size());
    Matrix state = rho0.matrix();
    double now = 0.0;
    for (double t : times) {
        if (t < now) throw std::invalid_argument("evolve_stepped: times must be ascending from 0");
        if (t > now) {
            const Matrix mid = h(0.5 * (now + t));
            if (mid.rows() != rho0.dim()) {
                throw std::invalid_argument("evolve_stepped: Hamiltonian dimension mismatch");
            }
            const Matrix u = propagator_from_eig(herm_eig(mid), t - now);
            state = u * state * u.adjoint();
            now = t;
        }
        trajectory.emplace_back(state);
    }
    return trajectory;
}

namespace {

// sqrt of a 2x2 PSD matrix: (rho + sqrt(det) 1) / sqrt(tr + 2 sqrt(det)).
Eigen::Matrix2cd sqrt_2x2_psd(const Eigen::Matrix2cd& rho) {
    const double trace = rho.trace().real();
    double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    det = std::max(det, 0.0);
    const double root_det = std::sqrt(det);
    const double denom = std::sqrt(std::max(trace + 2.0 * root_det, 1e-300));
    Eigen::Matrix2cd out = rho;
    out(0, 0) += root_det;
    out(1, 1) += root_det;
    return out / denom;
}

double hellinger_2x2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return 1.0 - (sqrt_2x2_psd(a) * sqrt_2x2_psd(b)).trace().real();
}

}  // namespace

TrajectoryRecord tightness_trajectory(const CentralSpinInstance& instance,
                                      std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("tightness_trajectory: empty time grid");

    const int n_spins = instance.bath_spins;
    const Index bath_dim = Index(1) << n_spins;
    const Index dim = 2 * bath_dim;

    const CentralSpinModel model = instance.build();
    const Matrix h = kron(model.h_system, Matrix::Identity(bath_dim, bath_dim)) +
                     kron(Matrix::Identity(2, 2), model.h_bath) + model.h_interaction;

    // Thermal bath weights: H_B is diagonal in the computational basis, so
    // the per-configuration weight is a product over spins.
    RealVector bath_weights(bath_dim);
    for (Index idx = 0; idx < bath_dim; ++idx) {
        double log_weight = 0.0;
        for (int j = 0; j < n_spins; ++j) {
            // bit 0 of the j-th position (counting from the leftmost site)
            const int bit = static_cast<int>((idx >> (n_spins - 1 - j)) & 1);
            const double sign = bit == 0 ? 1.0 : -1.0;  // sigma^z eigenvalue
            const double x = 0.5 * instance.beta * instance.omega[j];
            log_weight += -sign * x - std::log(2.0 * std::cosh(x));
        }
        bath_weights(idx) = std::exp(log_weight);
    }
    bath_weights /= bath_weights.sum();

    const DensityMatrix system = bloch_state(instance.polarization);
    const Eigen::Matrix2cd rho_s = system.matrix();
    const Eigen::Matrix2cd sqrt_s = system.sqrt();

    const EigenDecomposition eig = herm_eig(h);
    const Matrix& v = eig.eigenvectors;

    // X = (A (x) diag(d)) V for a 2x2 block A and diagonal bath factor d.
    const auto blocked_product = [&](const Eigen::Matrix2cd& block, const RealVector& diag) {
        Matrix out(dim, dim);
        out.topRows(bath_dim) = block(0, 0) * v.topRows(bath_dim) +
                                block(0, 1) * v.bottomRows(bath_dim);
        out.bottomRows(bath_dim) = block(1, 0) * v.topRows(bath_dim) +
                                   block(1, 1) * v.bottomRows(bath_dim);
        out.topRows(bath_dim).array().colwise() *= diag.array();
        out.bottomRows(bath_dim).array().colwise() *= diag.array();
        return out;
    };

    RealVector sqrt_weights = bath_weights.cwiseSqrt();
    const Matrix root_in_eigbasis = v.adjoint() * blocked_product(sqrt_s, sqrt_weights);
    const Matrix rho0_in_eigbasis = v.adjoint() * blocked_product(rho_s, bath_weights);

    // Projector blocks V^dag (|b><a| (x) 1) V needed for the reduced state.
    const auto system_block = [&](int a, int b) {
        Matrix x = Matrix::Zero(dim, dim);
        x.middleRows(b * bath_dim, bath_dim) = v.middleRows(a * bath_dim, bath_dim);
        return Matrix(v.adjoint() * x);
    };

    const Eigen::ArrayXXd hellinger_weights =
        root_in_eigbasis.array().abs2();  // |A_ij|^2, sums against phase differences
    const Matrix reduced_00 = rho0_in_eigbasis.cwiseProduct(system_block(0, 0).transpose());
    const Matrix reduced_01 = rho0_in_eigbasis.cwiseProduct(system_block(0, 1).transpose());
    const Matrix reduced_11 = rho0_in_eigbasis.cwiseProduct(system_block(1, 1).transpose());

    const std::size_t count = times.size();
    Matrix phases(dim, count);
    for (std::size_t k = 0; k < count; ++k) {
        for (Index i = 0; i < dim; ++i) {
            phases(i, k) = std::exp(Complex(0.0, -eig.eigenvalues(i) * times[k]));
        }
    }

    const Matrix hellinger_part = hellinger_weights.matrix().cast<Complex>() * phases;
    const Matrix conj_phases = phases.conjugate();
    const Matrix part_00 = reduced_00 * conj_phases;
    const Matrix part_01 = reduced_01 * conj_phases;
    const Matrix part_11 = reduced_11 * conj_phases;

    TrajectoryRecord record;
    record.seed = instance.seed;
    record.times.assign(times.begin(), times.end());
    record.information = instance.information();
    record.hellinger.resize(count);
    record.reduced_hellinger.resize(count);
    record.phase.resize(count);
    record.bound.resize(count);

    const double speed = std::sqrt(2.0 * std::max(record.information, 0.0));
    if (record.information > 0.0) {
        record.t_max = std::numbers::pi / std::sqrt(8.0 * record.information);
    }

    for (std::size_t k = 0; k < count; ++k) {
        Complex overlap = 0.0;
        Complex r00 = 0.0, r01 = 0.0, r11 = 0.0;
        for (Index i = 0; i < dim; ++i) {
            const Complex z = phases(i, k);
            overlap += std::conj(z) * hellinger_part(i, k);
            r00 += z * part_00(i, k);
            r01 += z * part_01(i, k);
            r11 += z * part_11(i, k);
        }
        record.hellinger[k] = 1.0 - overlap.real();

        Eigen::Matrix2cd reduced;
        reduced(0, 0) = r00.real();
        reduced(1, 1) = r11.real();
        reduced(0, 1) = r01;
        reduced(1, 0) = std::conj(r01);
        record.reduced_hellinger[k] = hellinger_2x2(rho_s, reduced);

        const double angle = speed * record.times[k];
        record.phase[k] = angle;
        record.bound[k] = 1.0 - std::cos(std::min(angle, std::numbers::pi));
    }
    return record;
}

std::vector<double> default_time_grid(const CentralSpinInstance& instance, int points,
                                      double span_factor) {
    if (points < 2) throw std::invalid_argument("default_time_grid: need at least 2 points");
    const double information = instance.information();
    const double t_end = information > 0.0
                             ? span_factor * std::numbers::pi / std::sqrt(8.0 * information)
                             : 1.0;
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = t_end * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return grid;
}

}  // namespace qslbath
