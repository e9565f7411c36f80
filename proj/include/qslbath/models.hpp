// models.hpp — elementary operators and the two concrete qubit-bath models
// used throughout: a spin coupled to truncated bosonic modes and a central
// spin coupled to a bath of spins 1/2.

#pragma once

#include "qslbath/closed_forms.hpp"
#include "qslbath/states.hpp"

#include <cstdint>
#include <vector>

namespace qslbath {

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

Matrix boson_annihilation(Index cutoff);
Matrix boson_number(Index cutoff);

// H_S = delta/2 sigma^z, H_B = sum_j omega_j/2 sigma^z_j,
// H_int = gamma/sqrt(N) sigma^x sum_j g_j sigma^x_j.
struct CentralSpinModel {
    Matrix h_system;       // 2 x 2
    Matrix h_bath;         // 2^N x 2^N, diagonal
    Matrix h_interaction;  // composite 2^(N+1)
};

CentralSpinModel build_central_spin(double delta, double gamma, std::span<const double> omega,
                                    std::span<const double> g);

// H_S = delta/2 sigma^z, H_B = sum_k omega_k n_k on a truncated Fock space,
// H_int = gamma/sqrt(N) sigma^x sum_k g_k (b_k + b_k^dag).
struct SpinBosonModel {
    Matrix h_system;
    Matrix h_bath;
    Matrix h_interaction;
    Index bath_dim;
};

SpinBosonModel build_spin_boson_truncated(double delta, double gamma, std::span<const double> omega,
                                          std::span<const double> g, Index cutoff);

// One random draw of the central spin model. Couplings are sampled
// uniformly from [0.5, 1.5] and splittings from [0, 2], in index order
// (g_0, omega_0, g_1, omega_1, ...), from a mt19937_64 stream.
struct CentralSpinInstance {
    int bath_spins;
    double delta;
    double gamma;
    double beta;
    BlochState polarization;
    std::vector<double> g;
    std::vector<double> omega;
    std::uint64_t seed;

    static CentralSpinInstance sample(int bath_spins, double delta, double gamma, double beta,
                                      const BlochState& polarization, std::uint64_t seed);

    CentralSpinModel build() const;
    SpinBathSpec spin_bath_spec() const;
    double information() const;  // exact Wigner-Yanase value of the instance
};

}  // namespace qslbath
