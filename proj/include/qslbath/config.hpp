// config.hpp — run configuration: one JSON document, overridable by flags,
// echoed verbatim into every output so runs can be reproduced from their
// own artifacts.

#pragma once

#include "qslbath/states.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qslbath {

// Raised for malformed or inconsistent configuration; the message names
// the offending field. Mapped to exit code 1 by the command-line tool.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { SpinBoson, CentralSpin, CustomMatrices };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct BetaGrid {
    double min = 0.05;
    double max = 20.0;
    int points = 60;
    bool log_spacing = true;

    std::vector<double> values() const;
};

struct TimeGrid {
    int points = 400;
    double span_factor = 1.25;
};

struct CustomMatrices {
    Matrix h_system;
    Matrix h_bath;
    Matrix h_interaction;
    Matrix rho_system;
};

struct RunConfig {
    ModelKind model = ModelKind::SpinBoson;
    double delta = 1.0;
    double gamma = 1.0;
    double alpha = 1.0;
    double beta = 1.0;                    // single-beta runs (fig3)
    std::vector<BlochState> panels;       // polarization per panel
    int bath_spins = 10;
    bool finite_bath = false;             // central-spin scans: finite-N coefficients
    std::uint64_t seed = 1;
    BetaGrid beta_grid;
    TimeGrid time_grid;
    std::string out_dir = "out";
    bool write_csv = true;
    bool write_svg = false;
    std::string timestamp = "unset";      // opt-in wall-clock stamp
    std::optional<CustomMatrices> matrices;

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig from_file(const std::string& path);
    nlohmann::json to_json() const;

    // Default panel set used when the config lists none: pure and mixed
    // polarizations along x, z and the x-z diagonal.
    static std::vector<BlochState> default_panels();
};

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);

}  // namespace qslbath
