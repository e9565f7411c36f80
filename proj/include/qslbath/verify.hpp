// verify.hpp — the full verification run: the inequality suites plus
// cross-module oracle checks, with machine-readable reports and worst-case
// replay.

#pragma once

#include "qslbath/ineq.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qslbath {

struct VerifyOptions {
    std::uint64_t seed = 71;
    std::string inject;          // suite name whose inequality is deliberately flipped
    bool quick = false;          // reduced trial counts for smoke runs
    long lemma_trials = 100000;
    long hermite_hadamard_trials = 2000;
    long commutator_trials = 10000;
    long trace_pairing_trials = 10000;
    long proof_chain_instances = 1000;
    long dominance_instances = 200;
};

struct VerifyOutcome {
    std::vector<InequalityReport> reports;
    bool passed = false;
};

VerifyOutcome run_verification(const VerifyOptions& options);

// Serialize one report per suite plus a summary under out_dir; returns the
// summary path.
std::filesystem::path write_verification_reports(const VerifyOutcome& outcome,
                                                 const VerifyOptions& options,
                                                 const std::filesystem::path& out_dir);

struct ReplayResult {
    std::string name;
    double stored_slack = 0.0;
    double recomputed_slack = 0.0;
    bool matches = false;
};

// Recompute the worst case stored in a report file; the inputs round-trip
// losslessly, so the slack must come back identical.
ReplayResult replay_report(const std::filesystem::path& report_file);

}  // namespace qslbath
