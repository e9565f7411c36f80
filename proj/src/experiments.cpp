#include "qslbath/experiments.hpp"

#include "qslbath/bounds.hpp"
#include "qslbath/bruteforce.hpp"
#include "qslbath/rng.hpp"
#include "qslbath/svg.hpp"
#include "qslbath/version.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qslbath {

namespace {

std::string bloch_label(const BlochState& state) {
    std::ostringstream out;
    out << "p=" << state.p << " n=(" << state.axis[0] << "," << state.axis[1] << ","
        << state.axis[2] << ")";
    return out.str();
}

void base_metadata(ResultTable& table, const RunConfig& config, const BlochState& panel) {
    table.metadata.emplace_back("config", config.to_json().dump());
    table.metadata.emplace_back("model", to_string(config.model));
    table.metadata.emplace_back("panel", bloch_label(panel));
    table.metadata.emplace_back("seed", std::to_string(config.seed));
    table.metadata.emplace_back("version", std::string(kVersion));
    table.metadata.emplace_back("timestamp", config.timestamp);
}

// Finite central-spin scans share one bath draw per run seed.
DiscreteBath sample_finite_bath(const RunConfig& config) {
    Rng rng(config.seed);
    DiscreteBath bath;
    bath.g.resize(config.bath_spins);
    bath.omega.resize(config.bath_spins);
    for (int j = 0; j < config.bath_spins; ++j) {
        bath.g[j] = rng.uniform(0.5, 1.5);
        bath.omega[j] = rng.uniform(0.0, 2.0);
    }
    return bath;
}

ResultTable coefficient_panel(const RunConfig& config, const BlochState& panel) {
    const std::vector<double> betas = config.beta_grid.values();
    ResultTable table;
    base_metadata(table, config, panel);
    const bool with_log = !panel.pure();
    table.columns = {"beta", "relaxed", "thermal"};
    if (with_log) table.columns.push_back("thermal_log");
    table.columns.push_back("exact");

    std::optional<DiscreteBath> finite;
    if (config.model == ModelKind::CentralSpin && config.finite_bath) {
        finite = sample_finite_bath(config);
    }
    for (double beta : betas) {
        BoundCoefficients coefficients;
        if (config.model == ModelKind::SpinBoson) {
            coefficients = ohmic_coefficients(OhmicSpectralDensity(config.alpha), beta);
        } else if (finite) {
            coefficients = spin_bath_coefficients(finite->omega, finite->g, beta);
        } else {
            coefficients = spin_bath_coefficients_continuum(config.alpha, beta);
        }
        const QubitBathBounds bounds =
            qubit_bath_bounds(config.delta, config.gamma, beta, panel, coefficients);
        std::vector<double> row{beta, bounds.relaxed, bounds.thermal};
        if (with_log) row.push_back(bounds.thermal_log.value());
        row.push_back(bounds.exact);
        table.rows.push_back(std::move(row));
    }
    return table;
}

ResultTable custom_matrices_panel(const RunConfig& config) {
    const CustomMatrices& m = config.matrices.value();
    const DensityMatrix system{m.rho_system};
    const DriveSpec drive(m.h_system, m.h_interaction, {0.0});
    const bool with_log = system.eigenvalues()(0) > tol::psd_clamp;

    ResultTable table;
    const BlochState placeholder(0.0, {0.0, 0.0, 1.0});
    base_metadata(table, config, placeholder);
    table.metadata.emplace_back("note", "custom matrices; panel label not applicable");
    table.columns = {"beta", "relaxed", "thermal"};
    if (with_log) table.columns.push_back("thermal_log");
    table.columns.push_back("exact");

    for (double beta : config.beta_grid.values()) {
        const DensityMatrix bath = thermal_state(m.h_bath, beta);
        const double exact = skew_information(system, bath, drive.total_at(0.0));
        std::vector<double> row{beta, relaxed_bound(drive, system, bath),
                                thermal_bound(drive, system, bath, m.h_bath, beta)};
        if (with_log) {
            row.push_back(thermal_log_bound(drive, system, bath, m.h_bath, beta));
        }
        row.push_back(exact);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

std::vector<ResultTable> bounds_tables(const RunConfig& config) {
    std::vector<ResultTable> tables;
    if (config.model == ModelKind::CustomMatrices) {
        tables.push_back(custom_matrices_panel(config));
        return tables;
    }
    tables.reserve(config.panels.size());
    for (const BlochState& panel : config.panels) {
        tables.push_back(coefficient_panel(config, panel));
    }
    return tables;
}

std::vector<ResultTable> trajectory_tables(const RunConfig& config) {
    if (config.model != ModelKind::CentralSpin) {
        throw ConfigError("model: the trajectory experiment requires the central-spin model");
    }
    std::vector<ResultTable> tables;
    tables.reserve(config.panels.size());
    for (const BlochState& panel : config.panels) {
        const CentralSpinInstance instance = CentralSpinInstance::sample(
            config.bath_spins, config.delta, config.gamma, config.beta, panel, config.seed);
        const std::vector<double> grid =
            default_time_grid(instance, config.time_grid.points, config.time_grid.span_factor);
        const TrajectoryRecord record = tightness_trajectory(instance, grid);

        for (std::size_t k = 0; k < record.times.size(); ++k) {
            const bool below_horizon = !record.t_max || record.times[k] <= *record.t_max;
            if (below_horizon && record.hellinger[k] > record.bound[k] + 1e-9) {
                std::ostringstream msg;
                msg << "trajectory_tables: bound violated at t = " << record.times[k]
                    << " (distance " << record.hellinger[k] << " > bound " << record.bound[k]
                    << ")";
                throw std::runtime_error(msg.str());
            }
            if (record.reduced_hellinger[k] > record.hellinger[k] + 1e-10) {
                std::ostringstream msg;
                msg << "trajectory_tables: contractivity violated at t = " << record.times[k];
                throw std::runtime_error(msg.str());
            }
        }

        ResultTable table;
        base_metadata(table, config, panel);
        table.metadata.emplace_back(
            "t_max", record.t_max ? format_full_precision(*record.t_max) : "beyond grid");
        table.metadata.emplace_back("information", format_full_precision(record.information));
        table.columns = {"t", "hellinger", "reduced_hellinger", "phase", "bound"};
        for (std::size_t k = 0; k < record.times.size(); ++k) {
            table.rows.push_back({record.times[k], record.hellinger[k],
                                  record.reduced_hellinger[k], record.phase[k], record.bound[k]});
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<std::filesystem::path> write_tables(const RunConfig& config,
                                                const std::vector<ResultTable>& tables,
                                                const std::string& prefix) {
    namespace fs = std::filesystem;
    const fs::path dir(config.out_dir);
    fs::create_directories(dir);
    std::vector<fs::path> written;
    for (std::size_t k = 0; k < tables.size(); ++k) {
        const std::string stem = prefix + "_panel" + std::to_string(k);
        if (config.write_csv) {
            const fs::path path = dir / (stem + ".csv");
            write_csv(tables[k], path);
            written.push_back(path);
        }
        if (config.write_svg) {
            const ResultTable& table = tables[k];
            std::vector<std::string> y_columns(table.columns.begin() + 1, table.columns.end());
            PlotOptions options;
            options.title = prefix + " " + to_string(config.model);
            options.x_label = table.columns.front();
            options.y_label = prefix == "bounds" ? "information" : "distance";
            options.log_x = prefix == "bounds";
            const fs::path path = dir / (stem + ".svg");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("write_tables: cannot open '" + path.string() + "'");
            out << svg_line_plot(table, table.columns.front(), y_columns, options);
            written.push_back(path);
        }
    }
    return written;
}

}  // namespace qslbath
