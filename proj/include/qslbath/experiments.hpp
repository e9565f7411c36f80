// experiments.hpp — the scan and trajectory runs behind the command-line
// tool, kept in the library so tests drive them in-process.

#pragma once

#include "qslbath/config.hpp"
#include "qslbath/evolve.hpp"
#include "qslbath/table.hpp"

#include <vector>

namespace qslbath {

// One table per polarization panel: the four information-level curves over
// the beta grid. Pure-state panels omit the thermal_log column entirely.
std::vector<ResultTable> bounds_tables(const RunConfig& config);

// One table per polarization panel: exact Hellinger distance, reduced-state
// distance and the accumulated bound over the default time grid. Throws if
// the recorded trajectory violates the bound anywhere below the horizon.
std::vector<ResultTable> trajectory_tables(const RunConfig& config);

// out/<prefix>_panel<k>.csv (and .svg); returns the paths written.
std::vector<std::filesystem::path> write_tables(const RunConfig& config,
                                                const std::vector<ResultTable>& tables,
                                                const std::string& prefix);

}  // namespace qslbath
