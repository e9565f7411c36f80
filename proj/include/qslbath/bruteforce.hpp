// bruteforce.hpp — reference evaluations of the Wigner-Yanase information
// on explicit composite spaces, independent of the closed-form route. The
// bosonic variant walks the sparse Hamiltonian structure directly, so Fock
// cutoffs beyond the dense-matrix cap stay cheap.

#pragma once

#include "qslbath/models.hpp"
#include "qslbath/states.hpp"

#include <span>

namespace qslbath {

// Skew information of the truncated spin-boson model, computed in the
// eigenbasis of rho_S x thermal bath where the composite square root is
// diagonal: I = sum_{r<s} |H_rs|^2 (sqrt(w_r) - sqrt(w_s))^2.
double wy_spin_boson_bruteforce(double delta, double gamma, std::span<const double> omega,
                                std::span<const double> g, double beta,
                                const BlochState& polarization, Index cutoff);

// Dense-path skew information of the central spin model (composite
// dimension 2^(N+1)).
double wy_central_spin_bruteforce(const CentralSpinInstance& instance);

}  // namespace qslbath
