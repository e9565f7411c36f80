#include "qslbath/models.hpp"

#include "qslbath/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qslbath {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix boson_annihilation(Index cutoff) {
    if (cutoff < 1) throw std::invalid_argument("boson_annihilation: cutoff must be >= 1");
    Matrix b = Matrix::Zero(cutoff, cutoff);
    for (Index n = 1; n < cutoff; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
    return b;
}

Matrix boson_number(Index cutoff) {
    if (cutoff < 1) throw std::invalid_argument("boson_number: cutoff must be >= 1");
    Matrix n = Matrix::Zero(cutoff, cutoff);
    for (Index k = 0; k < cutoff; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

CentralSpinModel build_central_spin(double delta, double gamma, std::span<const double> omega,
                                    std::span<const double> g) {
    if (omega.size() != g.size() || omega.empty()) {
        throw std::invalid_argument("build_central_spin: omega and g must have equal size");
    }
    const std::size_t n = omega.size();
    std::vector<Index> bath_dims(n, 2);
    const Index bath_dim = Index(1) << n;

    Matrix h_bath = Matrix::Zero(bath_dim, bath_dim);
    Matrix coupling_sum = Matrix::Zero(bath_dim, bath_dim);
    for (std::size_t j = 0; j < n; ++j) {
        h_bath += 0.5 * omega[j] * embed(pauli_z(), bath_dims, j);
        coupling_sum += g[j] * embed(pauli_x(), bath_dims, j);
    }
    CentralSpinModel model;
    model.h_system = 0.5 * delta * pauli_z();
    model.h_bath = h_bath;
    model.h_interaction =
        gamma / std::sqrt(static_cast<double>(n)) * kron(pauli_x(), coupling_sum);
    return model;
}

SpinBosonModel build_spin_boson_truncated(double delta, double gamma,
                                          std::span<const double> omega, std::span<const double> g,
                                          Index cutoff) {
    if (omega.size() != g.size() || omega.empty()) {
        throw std::invalid_argument("build_spin_boson_truncated: omega and g must have equal size");
    }
    if (cutoff < 2) throw std::invalid_argument("build_spin_boson_truncated: cutoff must be >= 2");
    const std::size_t n = omega.size();
    std::vector<Index> bath_dims(n, cutoff);
    Index bath_dim = 1;
    for (std::size_t k = 0; k < n; ++k) bath_dim *= cutoff;
    if (2 * bath_dim > kCompositeDimCap) {
        throw std::invalid_argument("build_spin_boson_truncated: composite dimension exceeds cap");
    }

    const Matrix b = boson_annihilation(cutoff);
    const Matrix x = b + b.adjoint();
    const Matrix number = boson_number(cutoff);
    Matrix h_bath = Matrix::Zero(bath_dim, bath_dim);
    Matrix coupling_sum = Matrix::Zero(bath_dim, bath_dim);
    for (std::size_t k = 0; k < n; ++k) {
        h_bath += omega[k] * embed(number, bath_dims, k);
        coupling_sum += g[k] * embed(x, bath_dims, k);
    }
    SpinBosonModel model;
    model.h_system = 0.5 * delta * pauli_z();
    model.h_bath = h_bath;
    model.h_interaction =
        gamma / std::sqrt(static_cast<double>(n)) * kron(pauli_x(), coupling_sum);
    model.bath_dim = bath_dim;
    return model;
}

CentralSpinInstance CentralSpinInstance::sample(int bath_spins, double delta, double gamma,
                                                double beta, const BlochState& polarization,
                                                std::uint64_t seed) {
    if (bath_spins < 1 || bath_spins > 11) {
        throw std::invalid_argument("CentralSpinInstance: bath_spins must lie in [1, 11]");
    }
    CentralSpinInstance instance{bath_spins, delta,         gamma, beta,
                                 polarization, {},          {},    seed};
    Rng rng(seed);
    instance.g.resize(bath_spins);
    instance.omega.resize(bath_spins);
    for (int j = 0; j < bath_spins; ++j) {
        instance.g[j] = rng.uniform(0.5, 1.5);
        instance.omega[j] = rng.uniform(0.0, 2.0);
    }
    return instance;
}

CentralSpinModel CentralSpinInstance::build() const {
    return build_central_spin(delta, gamma, omega, g);
}

SpinBathSpec CentralSpinInstance::spin_bath_spec() const {
    SpinBathSpec spec;
    spec.omega = omega;
    spec.g = g;
    spec.coupling.assign(omega.size(), pauli_x());
    spec.gamma = gamma;
    return spec;
}

double CentralSpinInstance::information() const {
    const SpinBathSpec spec = spin_bath_spec();
    return wy_spin_bath(spec, 0.5 * delta * pauli_z(), bloch_state(polarization), beta);
}

}  // namespace qslbath
