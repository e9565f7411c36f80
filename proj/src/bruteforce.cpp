#include "qslbath/bruteforce.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qslbath {

double wy_spin_boson_bruteforce(double delta, double gamma, std::span<const double> omega,
                                std::span<const double> g, double beta,
                                const BlochState& polarization, Index cutoff) {
    if (omega.size() != g.size() || omega.empty()) {
        throw std::invalid_argument("wy_spin_boson_bruteforce: omega and g must have equal size");
    }
    if (cutoff < 2) throw std::invalid_argument("wy_spin_boson_bruteforce: cutoff must be >= 2");
    if (!(beta > 0.0)) throw std::invalid_argument("wy_spin_boson_bruteforce: beta must be > 0");

    const int n_modes = static_cast<int>(omega.size());
    const double scale = gamma / std::sqrt(static_cast<double>(n_modes));

    // Work in the eigenbasis of rho_S; the bath thermal factors are already
    // diagonal, so sqrt(rho_0) is diagonal there and only the Hamiltonian
    // off-diagonals contribute.
    const DensityMatrix system = bloch_state(polarization);
    const Eigen::Matrix2cd q = system.eigenvectors();
    const double w0 = std::max(system.eigenvalues()(0), 0.0);
    const double w1 = std::max(system.eigenvalues()(1), 0.0);

    const Eigen::Matrix2cd h_system_rot =
        q.adjoint() * (0.5 * delta * pauli_z()) * q;
    const Eigen::Matrix2cd sigma_x_rot = q.adjoint() * pauli_x() * q;

    // Per-mode truncated thermal amplitudes sqrt(P_n).
    std::vector<std::vector<double>> amplitudes(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double x = std::exp(-beta * omega[k]);
        double z = 0.0;
        double power = 1.0;
        amplitudes[k].resize(cutoff);
        for (Index n = 0; n < cutoff; ++n) {
            amplitudes[k][n] = power;
            z += power;
            power *= x;
        }
        for (Index n = 0; n < cutoff; ++n) amplitudes[k][n] = std::sqrt(amplitudes[k][n] / z);
    }

    const double sqrt_w[2] = {std::sqrt(w0), std::sqrt(w1)};

    std::vector<Index> occupation(n_modes, 0);
    double information = 0.0;
    bool done = false;
    while (!done) {
        double bath_amplitude = 1.0;
        for (int k = 0; k < n_modes; ++k) bath_amplitude *= amplitudes[k][occupation[k]];

        for (int a = 0; a < 2; ++a) {
            const double d_r = sqrt_w[a] * bath_amplitude;

            // System flip at fixed bath configuration, counted once (a = 0).
            if (a == 0) {
                const double d_s = sqrt_w[1] * bath_amplitude;
                const double gap = d_r - d_s;
                information += std::norm(h_system_rot(0, 1)) * gap * gap;
            }

            // Raise mode k by one quantum; both system indices of the target.
            for (int k = 0; k < n_modes; ++k) {
                const Index n_k = occupation[k];
                if (n_k + 1 >= cutoff) continue;
                const double ladder = std::sqrt(static_cast<double>(n_k + 1));
                const double raised_amplitude =
                    amplitudes[k][n_k] > 0.0
                        ? bath_amplitude / amplitudes[k][n_k] * amplitudes[k][n_k + 1]
                        : 0.0;
                for (int b = 0; b < 2; ++b) {
                    const Complex element = scale * g[k] * sigma_x_rot(a, b) * ladder;
                    const double d_s = sqrt_w[b] * raised_amplitude;
                    const double gap = d_r - d_s;
                    information += std::norm(element) * gap * gap;
                }
            }
        }

        done = true;
        for (int k = n_modes - 1; k >= 0; --k) {
            if (++occupation[k] < cutoff) {
                done = false;
                break;
            }
            occupation[k] = 0;
        }
    }
    return information;
}

double wy_central_spin_bruteforce(const CentralSpinInstance& instance) {
    const CentralSpinModel model = instance.build();
    const Index bath_dim = model.h_bath.rows();
    const Matrix drive = kron(model.h_system, Matrix::Identity(bath_dim, bath_dim)) +
                         model.h_interaction;
    const DensityMatrix system = bloch_state(instance.polarization);
    const DensityMatrix bath = thermal_state(model.h_bath, instance.beta);
    return skew_information(system, bath, drive);
}

}  // namespace qslbath
