// qslbath command-line tool: `bounds` scans the four information-level
// curves over inverse temperature, `fig3` runs the central-spin tightness
// experiment, `verify` runs the inequality and oracle suites.
//
// Exit codes: 0 success, 1 configuration error, 2 verification failure,
// 3 internal numerical inconsistency.

#include "qslbath/config.hpp"
#include "qslbath/experiments.hpp"
#include "qslbath/verify.hpp"
#include "qslbath/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string format;
    std::string model;
    std::optional<double> beta_min;
    std::optional<double> beta_max;
    std::optional<int> beta_points;
};

void add_common_flags(CLI::App* command, CommonFlags& flags) {
    command->add_option("--config", flags.config_path, "JSON configuration file");
    command->add_option("--out", flags.out_dir, "output directory");
    command->add_option("--seed", flags.seed, "random seed override");
    command->add_option("--format", flags.format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    command->add_option("--model", flags.model,
                        "spin-boson, central-spin or custom-matrices");
    command->add_option("--beta-min", flags.beta_min, "beta grid lower edge");
    command->add_option("--beta-max", flags.beta_max, "beta grid upper edge");
    command->add_option("--beta-points", flags.beta_points, "beta grid size");
}

qslbath::RunConfig load_config(const CommonFlags& flags) {
    qslbath::RunConfig config = flags.config_path.empty()
                                    ? qslbath::RunConfig::from_json(nlohmann::json::object())
                                    : qslbath::RunConfig::from_file(flags.config_path);
    if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
    if (flags.seed) config.seed = *flags.seed;
    if (!flags.format.empty()) {
        config.write_csv = flags.format == "csv" || flags.format == "both";
        config.write_svg = flags.format == "svg" || flags.format == "both";
    }
    if (!flags.model.empty()) config.model = qslbath::model_kind_from_string(flags.model);
    if (flags.beta_min) config.beta_grid.min = *flags.beta_min;
    if (flags.beta_max) config.beta_grid.max = *flags.beta_max;
    if (flags.beta_points) config.beta_grid.points = *flags.beta_points;
    if (!(config.beta_grid.min > 0.0) || !(config.beta_grid.max > config.beta_grid.min) ||
        config.beta_grid.points < 1) {
        throw qslbath::ConfigError("grids.beta: need 0 < min < max and points >= 1");
    }
    return config;
}

int run_tables(const CommonFlags& flags, const std::string& prefix) {
    const qslbath::RunConfig config = load_config(flags);
    const auto tables = prefix == "bounds" ? qslbath::bounds_tables(config)
                                           : qslbath::trajectory_tables(config);
    const auto written = qslbath::write_tables(config, tables, prefix);
    for (const auto& path : written) std::cout << path.string() << "\n";
    return 0;
}

int run_verify(const CommonFlags& flags, const qslbath::VerifyOptions& base,
               const std::string& replay_path) {
    if (!replay_path.empty()) {
        const qslbath::ReplayResult replay = qslbath::replay_report(replay_path);
        std::cout << "replay " << replay.name << ": stored slack " << replay.stored_slack
                  << ", recomputed " << replay.recomputed_slack
                  << (replay.matches ? " (identical)" : " (MISMATCH)") << "\n";
        return replay.matches ? 0 : 2;
    }
    qslbath::VerifyOptions options = base;
    const qslbath::RunConfig config = load_config(flags);
    options.seed = config.seed;
    const qslbath::VerifyOutcome outcome = qslbath::run_verification(options);
    const auto summary = qslbath::write_verification_reports(outcome, options, config.out_dir);
    for (const auto& report : outcome.reports) {
        std::printf("%-28s %8ld trials  max violation %.3e  threshold %.1e  %s\n",
                    report.name.c_str(), report.trials, report.max_violation, report.threshold,
                    report.passed() ? "pass" : "FAIL");
    }
    std::cout << "summary: " << summary.string() << "\n";
    return outcome.passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Speed-limit bounds for open quantum systems coupled to thermal baths"};
    app.set_version_flag("--version", std::string(qslbath::kVersion));
    app.require_subcommand(1);

    CommonFlags bounds_flags, fig3_flags, verify_flags;
    CLI::App* bounds =
        app.add_subcommand("bounds", "four information-level curves over the beta grid");
    add_common_flags(bounds, bounds_flags);
    CLI::App* fig3 =
        app.add_subcommand("fig3", "central-spin tightness experiment: distance vs bound");
    add_common_flags(fig3, fig3_flags);
    CLI::App* verify = app.add_subcommand("verify", "inequality and cross-module oracle suites");
    add_common_flags(verify, verify_flags);

    qslbath::VerifyOptions verify_options;
    std::string replay_path;
    verify->add_flag("--quick", verify_options.quick, "reduced trial counts");
    verify->add_option("--inject-violation", verify_options.inject,
                       "testing hook: flip the named inequality to prove failures are caught");
    verify->add_option("--replay", replay_path, "recompute the worst case stored in a report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        return app.exit(error) == 0 ? 0 : 1;
    }

    try {
        if (bounds->parsed()) return run_tables(bounds_flags, "bounds");
        if (fig3->parsed()) {
            // fig3 defaults to the central-spin model unless overridden.
            if (fig3_flags.model.empty() && fig3_flags.config_path.empty()) {
                fig3_flags.model = "central-spin";
            }
            return run_tables(fig3_flags, "fig3");
        }
        return run_verify(verify_flags, verify_options, replay_path);
    } catch (const qslbath::ConfigError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 3;
    }
}
