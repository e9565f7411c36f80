#include "qslbath/config.hpp"

#include <cmath>
#include <fstream>

namespace qslbath {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::SpinBoson: return "spin-boson";
        case ModelKind::CentralSpin: return "central-spin";
        case ModelKind::CustomMatrices: return "custom-matrices";
    }
    return "unknown";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "spin-boson") return ModelKind::SpinBoson;
    if (name == "central-spin") return ModelKind::CentralSpin;
    if (name == "custom-matrices") return ModelKind::CustomMatrices;
    throw ConfigError("model: expected spin-boson, central-spin or custom-matrices, got '" +
                      name + "'");
}

std::vector<double> BetaGrid::values() const {
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = min;
        return out;
    }
    for (int k = 0; k < points; ++k) {
        const double fraction = static_cast<double>(k) / static_cast<double>(points - 1);
        out[k] = log_spacing ? min * std::pow(max / min, fraction)
                             : min + (max - min) * fraction;
    }
    return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ConfigError(field + ": expected a nonempty matrix");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.at(0).size());
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        if (static_cast<Index>(j.at(r).size()) != cols) {
            throw ConfigError(field + ": ragged matrix rows");
        }
        for (Index c = 0; c < cols; ++c) {
            const auto& cell = j.at(r).at(c);
            if (!cell.is_array() || cell.size() != 2) {
                throw ConfigError(field + ": entries must be [re, im] pairs");
            }
            m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return m;
}

namespace {

template <typename T>
T field_or(const nlohmann::json& j, const std::string& name, T fallback) {
    if (!j.contains(name)) return fallback;
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(name + ": has the wrong type");
    }
}

BlochState bloch_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.contains("p") || !j.contains("n")) {
        throw ConfigError(field + ": polarization needs fields p and n");
    }
    const auto& axis = j.at("n");
    if (!axis.is_array() || axis.size() != 3) {
        throw ConfigError(field + ".n: expected a 3-vector");
    }
    try {
        return BlochState(j.at("p").get<double>(),
                          {axis.at(0).get<double>(), axis.at(1).get<double>(),
                           axis.at(2).get<double>()});
    } catch (const std::invalid_argument& error) {
        throw ConfigError(field + ": " + error.what());
    }
}

nlohmann::json bloch_to_json(const BlochState& state) {
    return {{"p", state.p}, {"n", {state.axis[0], state.axis[1], state.axis[2]}}};
}

}  // namespace

std::vector<BlochState> RunConfig::default_panels() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {
        BlochState(1.0, {1.0, 0.0, 0.0}),
        BlochState(1.0, {0.0, 0.0, 1.0}),
        BlochState(1.0, {inv_sqrt2, 0.0, inv_sqrt2}),
        BlochState(0.6, {1.0, 0.0, 0.0}),
        BlochState(0.6, {0.0, 0.0, 1.0}),
        BlochState(0.6, {inv_sqrt2, 0.0, inv_sqrt2}),
    };
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig config;
    if (j.contains("model")) {
        config.model = model_kind_from_string(field_or<std::string>(j, "model", "spin-boson"));
    }
    const nlohmann::json parameters = j.value("parameters", nlohmann::json::object());
    config.delta = field_or(parameters, "delta", config.delta);
    config.gamma = field_or(parameters, "gamma", config.gamma);
    config.alpha = field_or(parameters, "alpha", config.alpha);
    config.beta = field_or(parameters, "beta", config.beta);
    config.bath_spins = field_or(parameters, "bath_spins", config.bath_spins);
    config.finite_bath = field_or(parameters, "finite_bath", config.finite_bath);
    config.seed = field_or<std::uint64_t>(parameters, "seed", config.seed);
    if (!(config.alpha > 0.0)) throw ConfigError("parameters.alpha: must be positive");
    if (!(config.beta >= 0.0)) throw ConfigError("parameters.beta: must be nonnegative");
    if (config.bath_spins < 1 || config.bath_spins > 11) {
        throw ConfigError("parameters.bath_spins: must lie in [1, 11]");
    }
    if (parameters.contains("panels")) {
        const auto& panels = parameters.at("panels");
        if (!panels.is_array() || panels.empty()) {
            throw ConfigError("parameters.panels: expected a nonempty array");
        }
        for (std::size_t k = 0; k < panels.size(); ++k) {
            config.panels.push_back(
                bloch_from_json(panels.at(k), "parameters.panels[" + std::to_string(k) + "]"));
        }
    } else if (parameters.contains("polarization")) {
        config.panels.push_back(
            bloch_from_json(parameters.at("polarization"), "parameters.polarization"));
    } else {
        config.panels = default_panels();
    }

    const nlohmann::json grids = j.value("grids", nlohmann::json::object());
    if (grids.contains("beta")) {
        const auto& grid = grids.at("beta");
        config.beta_grid.min = field_or(grid, "min", config.beta_grid.min);
        config.beta_grid.max = field_or(grid, "max", config.beta_grid.max);
        config.beta_grid.points = field_or(grid, "points", config.beta_grid.points);
        const std::string spacing = field_or<std::string>(grid, "spacing", "log");
        if (spacing != "log" && spacing != "linear") {
            throw ConfigError("grids.beta.spacing: expected log or linear");
        }
        config.beta_grid.log_spacing = spacing == "log";
    }
    if (!(config.beta_grid.min > 0.0) || !(config.beta_grid.max > config.beta_grid.min) ||
        config.beta_grid.points < 1) {
        throw ConfigError("grids.beta: need 0 < min < max and points >= 1");
    }
    if (grids.contains("time")) {
        const auto& grid = grids.at("time");
        config.time_grid.points = field_or(grid, "points", config.time_grid.points);
        config.time_grid.span_factor = field_or(grid, "span_factor", config.time_grid.span_factor);
    }
    if (config.time_grid.points < 2 || !(config.time_grid.span_factor > 0.0)) {
        throw ConfigError("grids.time: need points >= 2 and span_factor > 0");
    }

    const nlohmann::json outputs = j.value("outputs", nlohmann::json::object());
    config.out_dir = field_or<std::string>(outputs, "directory", config.out_dir);
    if (outputs.contains("formats")) {
        config.write_csv = false;
        config.write_svg = false;
        for (const auto& format : outputs.at("formats")) {
            const std::string name = format.get<std::string>();
            if (name == "csv") {
                config.write_csv = true;
            } else if (name == "svg") {
                config.write_svg = true;
            } else {
                throw ConfigError("outputs.formats: unknown format '" + name + "'");
            }
        }
    }
    config.timestamp = field_or<std::string>(j, "timestamp", config.timestamp);

    if (j.contains("matrices")) {
        const auto& m = j.at("matrices");
        CustomMatrices custom;
        custom.h_system = matrix_from_json(m.value("h_system", nlohmann::json()), "matrices.h_system");
        custom.h_bath = matrix_from_json(m.value("h_bath", nlohmann::json()), "matrices.h_bath");
        custom.h_interaction =
            matrix_from_json(m.value("h_interaction", nlohmann::json()), "matrices.h_interaction");
        custom.rho_system =
            matrix_from_json(m.value("rho_system", nlohmann::json()), "matrices.rho_system");
        if (custom.h_interaction.rows() != custom.h_system.rows() * custom.h_bath.rows()) {
            throw ConfigError("matrices.h_interaction: dimension must be dim(system) * dim(bath)");
        }
        config.matrices = std::move(custom);
    }
    if (config.model == ModelKind::CustomMatrices && !config.matrices) {
        throw ConfigError("matrices: required for the custom-matrices model");
    }
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file '" + path + "' is not readable");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& error) {
        throw ConfigError("config file '" + path + "': " + error.what());
    }
    return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json parameters{{"delta", delta},   {"gamma", gamma},
                              {"alpha", alpha},   {"beta", beta},
                              {"bath_spins", bath_spins}, {"finite_bath", finite_bath},
                              {"seed", seed}};
    nlohmann::json panel_list = nlohmann::json::array();
    for (const BlochState& panel : panels) panel_list.push_back(bloch_to_json(panel));
    parameters["panels"] = panel_list;

    nlohmann::json j{
        {"model", to_string(model)},
        {"parameters", parameters},
        {"grids",
         {{"beta",
           {{"min", beta_grid.min},
            {"max", beta_grid.max},
            {"points", beta_grid.points},
            {"spacing", beta_grid.log_spacing ? "log" : "linear"}}},
          {"time",
           {{"points", time_grid.points}, {"span_factor", time_grid.span_factor}}}}},
        {"outputs", {{"directory", out_dir}, {"formats", nlohmann::json::array()}}},
        {"timestamp", timestamp},
    };
    if (write_csv) j["outputs"]["formats"].push_back("csv");
    if (write_svg) j["outputs"]["formats"].push_back("svg");
    if (matrices) {
        j["matrices"] = {{"h_system", matrix_to_json(matrices->h_system)},
                         {"h_bath", matrix_to_json(matrices->h_bath)},
                         {"h_interaction", matrix_to_json(matrices->h_interaction)},
                         {"rho_system", matrix_to_json(matrices->rho_system)}};
    }
    return j;
}

}  // namespace qslbath
