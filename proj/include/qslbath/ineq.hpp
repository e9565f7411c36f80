// ineq.hpp — numerical verification of the lemma and proof-chain
// inequalities behind the temperature-explicit bounds, on random instances.

#pragma once

#include "qslbath/states.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

namespace qslbath {

// (e^-x - e^-y)^2 <= (e^-2x + e^-2y)/2 (x - y)^2; returns rhs - lhs.
double check_lemma(double x, double y);

// Hermite-Hadamard: integral of a convex f over [a, b] is at most the
// endpoint average times the width. Integral by adaptive quadrature.
double check_hermite_hadamard(const std::function<double(double)>& f, double a, double b);

// tr(-[A, sqrt(rho)]^2) <= 2 tr((A - c)^2 rho) for real c; returns the slack.
double check_commutator_relaxation(const Matrix& a, const DensityMatrix& rho, double c);

// tr(A^dag B + A B^dag) <= tr A^dag A + tr B^dag B; the slack is |A - B|_F^2.
double check_trace_pairing(const Matrix& a, const Matrix& b);

// Every link of the chains leading to the two temperature-explicit bounds,
// evaluated on one instance. Identity links report absolute deviations,
// inequality links report slacks.
struct ProofChainSlacks {
    double split;                    // product-rule split of the commutator
    double eigenbasis_identity;      // relative |direct - eigenbasis sum|, ~0
    double lemma_step;               // thermal factors bounded through the lemma
    double thermal_end_to_end;       // full bound minus the skew information
    bool log_chain_evaluated;        // false when the system state is singular
    double log_identity;             // relative |2I - eigenbasis sum|
    double log_lemma_step;
    double log_end_to_end;
    double scale;                    // magnitude of the chained quantities, >= 1

    // Most negative slack, measured relative to the chain's magnitude so
    // the tolerance tracks accumulated round-off.
    double worst_relative() const;
};

ProofChainSlacks check_proof_chain(const Matrix& h_system, const Matrix& h_interaction,
                                   const DensityMatrix& system, const Matrix& h_bath, double beta);

struct InequalityReport {
    std::string name;
    long trials = 0;
    double max_violation = 0.0;
    double threshold = 0.0;
    nlohmann::json worst_case;

    bool passed() const { return max_violation <= threshold; }
};

InequalityReport run_lemma_suite(long trials, std::uint64_t seed);
InequalityReport run_hermite_hadamard_suite(long trials, std::uint64_t seed);
InequalityReport run_commutator_suite(long trials, std::uint64_t seed);
InequalityReport run_trace_pairing_suite(long trials, std::uint64_t seed);
InequalityReport run_proof_chain_suite(long instances, std::uint64_t seed);

// Recompute the slack recorded in a report's worst case; replays are exact
// because inputs round-trip through the serialization losslessly.
double replay_worst_case(const nlohmann::json& worst_case);

}  // namespace qslbath
