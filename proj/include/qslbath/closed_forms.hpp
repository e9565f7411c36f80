// closed_forms.hpp — Wigner-Yanase information in closed form for
// noninteracting bosonic and spin baths, the thermal integrals K, M, L and
// the four qubit-bath bound formulas they feed.

#pragma once

#include "qslbath/specfun.hpp"
#include "qslbath/states.hpp"

#include <optional>
#include <vector>

namespace qslbath {

// Bosonic bath of N modes with couplings g_k S_k^dag b_k + h.c., scaled by
// gamma / sqrt(N).
struct BosonicBathSpec {
    std::vector<double> omega;          // mode energies, > 0
    std::vector<Complex> g;             // coupling strengths
    std::vector<Matrix> coupling;       // system operators S_k
    double gamma = 1.0;

    std::size_t modes() const { return omega.size(); }
    void validate() const;
};

// Bath of N spins 1/2 with splittings omega_j and couplings g_j S_j sigma^x_j.
struct SpinBathSpec {
    std::vector<double> omega;          // level splittings, may be zero
    std::vector<double> g;              // real couplings
    std::vector<Matrix> coupling;       // self-adjoint system operators S_j
    double gamma = 1.0;

    std::size_t spins() const { return omega.size(); }
    void validate() const;
};

// J(omega) = omega * exp(-alpha * omega).
struct OhmicSpectralDensity {
    double alpha;

    explicit OhmicSpectralDensity(double alpha);
    double operator()(double omega) const;
};

// Thermal integrals entering the bound formulas. All three are positive
// for positive alpha and beta.
struct BoundCoefficients {
    double k = 0.0;
    double m = 0.0;
    double l = 0.0;
};

// Exact Wigner-Yanase information for a bosonic bath; beta must be positive
// because the Bose weights diverge at beta = 0.
double wy_bosonic(const BosonicBathSpec& spec, const Matrix& h_system, const DensityMatrix& system,
                  double beta);

// Exact Wigner-Yanase information for a spin bath, valid for all beta >= 0.
double wy_spin_bath(const SpinBathSpec& spec, const Matrix& h_system, const DensityMatrix& system,
                    double beta);

// Max deviation of exp(-beta H/2) b exp(beta H/2) from exp(beta omega / 2) b
// on a truncated Fock space; the identity is exact there.
double bch_conjugation_check(double omega, double beta, Index cutoff);

// Polygamma closed forms of the bosonic thermal integrals.
BoundCoefficients ohmic_coefficients(const OhmicSpectralDensity& j, double beta);

// The same integrals by adaptive quadrature; rejects non-convergence with
// the achieved error estimate in the message.
BoundCoefficients ohmic_coefficients_quadrature(const OhmicSpectralDensity& j, double beta,
                                                double tolerance = 1e-10);

// Discrete-bath analogs (1/N sums with Bose weights).
BoundCoefficients discrete_bosonic_coefficients(std::span<const double> omega,
                                                std::span<const Complex> g, double beta);

// Spin-bath coefficients for finite N and their continuum limits.
BoundCoefficients spin_bath_coefficients(std::span<const double> omega, std::span<const double> g,
                                         double beta);
BoundCoefficients spin_bath_coefficients_continuum(double alpha, double beta);
BoundCoefficients spin_bath_coefficients_continuum_quadrature(double alpha, double beta,
                                                              double tolerance = 1e-10);

// Midpoint-rule discretization of the Ohmic density: g_j^2 = N J(omega_j) domega,
// matching the defining continuum limit of 1/N sums.
struct DiscreteBath {
    std::vector<double> omega;
    std::vector<double> g;
};
DiscreteBath discretize_ohmic(const OhmicSpectralDensity& j, std::size_t modes, double omega_max);

// B_p^2 = (1 - sqrt(1 - p^2)) / 4, in [0, 1/4].
double polarization_coefficient_sq(double p);

// ln sqrt((1+p)/(1-p)); finite only for p < 1.
double log_polarization_coefficient(double p);

// The four bound values for a qubit with level splitting delta, coupled
// through sigma^x with overall strength gamma, given thermal coefficients.
// The log-variant value is absent for pure states.
struct QubitBathBounds {
    double relaxed = 0.0;
    double thermal = 0.0;
    std::optional<double> thermal_log;
    double exact = 0.0;
};

QubitBathBounds qubit_bath_bounds(double delta, double gamma, double beta,
                                  const BlochState& polarization,
                                  const BoundCoefficients& coefficients);

}  // namespace qslbath
