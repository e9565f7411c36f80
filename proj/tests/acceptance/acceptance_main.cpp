// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The command-line binary under test is argv[1].

#include "qslbath/bounds.hpp"
#include "qslbath/bruteforce.hpp"
#include "qslbath/closed_forms.hpp"
#include "qslbath/evolve.hpp"
#include "qslbath/experiments.hpp"
#include "qslbath/models.hpp"
#include "qslbath/rng.hpp"
#include "qslbath/specfun.hpp"
#include "qslbath/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qslbath;
namespace fs = std::filesystem;

std::string g_cli;
int g_failures = 0;

void report(int criterion, const char* label, bool passed, const std::string& detail) {
    std::printf("[%s] criterion %d: %-34s %s\n", passed ? "PASS" : "FAIL", criterion, label,
                detail.c_str());
    if (!passed) ++g_failures;
}

int run_cli(const std::string& args) {
    const std::string command = g_cli + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(command.c_str()));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TrajectoryRun {
    CentralSpinInstance instance;
    TrajectoryRecord record;
};

std::vector<TrajectoryRun> g_runs;  // shared between criteria 1 and 8

// --- 1. theorem check: exact distance below the bound up to the horizon ---
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const BlochState polarizations[] = {
        BlochState(1.0, {0.0, 0.0, 1.0}), BlochState(1.0, {1.0, 0.0, 0.0}),
        BlochState(1.0, {0.0, 1.0, 0.0}), BlochState(0.6, {0.0, 0.0, 1.0}),
        BlochState(0.6, {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)})};
    const int spins_per_instance[] = {2, 2, 2, 2, 2, 2, 2, 4, 4, 4,
                                      4, 4, 4, 8, 8, 8, 8, 10, 10, 10};
    double worst_slack = 1e300;
    int instances = 0;
    for (int index = 0; index < 20; ++index) {
        const CentralSpinInstance instance = CentralSpinInstance::sample(
            spins_per_instance[index], 1.0, 1.0, 1.0, polarizations[index % 5],
            9000 + static_cast<std::uint64_t>(index));
        const std::vector<double> grid = default_time_grid(instance, 150);
        TrajectoryRecord record = tightness_trajectory(instance, grid);
        ++instances;
        for (std::size_t k = 0; k < record.times.size(); ++k) {
            if (record.t_max && record.times[k] > *record.t_max) break;
            worst_slack = std::min(worst_slack, record.bound[k] - record.hellinger[k]);
        }
        g_runs.push_back({instance, std::move(record)});
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << instances << " instances, min(bound - distance) = " << worst_slack << ", "
           << seconds << " s";
    report(1, "distance below the bound", worst_slack >= -1e-9 && seconds < 300.0, detail.str());
}

// --- 2. closed forms against composite-space brute force ---
void criterion_2() {
    double worst_spin = 0.0;
    Rng rng(901);
    for (int bath_spins : {2, 6, 10}) {
        const BlochState polarization(rng.uniform(0.0, 1.0),
                                      {rng.gaussian(), rng.gaussian(), rng.gaussian()});
        const CentralSpinInstance instance = CentralSpinInstance::sample(
            bath_spins, 1.0, 1.0, 1.0, polarization, 500 + bath_spins);
        worst_spin = std::max(
            worst_spin, std::abs(instance.information() - wy_central_spin_bruteforce(instance)));
    }

    double worst_bosonic = 0.0;
    for (int modes : {1, 2, 3}) {
        std::vector<double> omega(modes), g(modes);
        for (int k = 0; k < modes; ++k) {
            omega[k] = rng.uniform(0.8, 1.8);
            g[k] = rng.uniform(0.6, 1.4);
        }
        const BlochState polarization(rng.uniform(0.0, 1.0),
                                      {rng.gaussian(), rng.gaussian(), rng.gaussian()});
        const double delta = 1.0, gamma = 0.8, beta = 1.2;
        BosonicBathSpec spec;
        spec.omega = omega;
        spec.g.assign(g.begin(), g.end());
        spec.coupling.assign(modes, pauli_x());
        spec.gamma = gamma;
        const double closed =
            wy_bosonic(spec, 0.5 * delta * pauli_z(), bloch_state(polarization), beta);
        const double coarse =
            wy_spin_boson_bruteforce(delta, gamma, omega, g, beta, polarization, 20);
        const double fine =
            wy_spin_boson_bruteforce(delta, gamma, omega, g, beta, polarization, 40);
        worst_bosonic = std::max(worst_bosonic,
                                 std::max(std::abs(fine - coarse), std::abs(closed - fine)));
    }
    std::ostringstream detail;
    detail << "spin-bath dev " << worst_spin << ", bosonic dev " << worst_bosonic;
    report(2, "closed form equals brute force", worst_spin <= 1e-8 && worst_bosonic < 1e-6,
           detail.str());
}

// --- 3. polygamma closed forms against adaptive quadrature ---
void criterion_3() {
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) {
            const double alpha = 0.1 * std::pow(100.0, i / 5.0);
            const double beta = 0.1 * std::pow(100.0, k / 5.0);
            const OhmicSpectralDensity j(alpha);
            const BoundCoefficients closed = ohmic_coefficients(j, beta);
            const BoundCoefficients quad = ohmic_coefficients_quadrature(j, beta, 1e-10);
            worst = std::max({worst, std::abs(closed.k - quad.k) / std::abs(quad.k),
                              std::abs(closed.m - quad.m) / std::abs(quad.m),
                              std::abs(closed.l - quad.l) / std::abs(quad.l)});
        }
    }
    // quadrature-derived reference for psi^(1)(1) = pi^2/6
    const QuadratureResult reference = quad_semiinf(
        [](double t) {
            return t / (-std::expm1(-t)) * std::exp(-t);
        },
        1e-13);
    const double target = std::numbers::pi * std::numbers::pi / 6.0;
    const double psi_dev =
        std::max(std::abs(reference.value - target), std::abs(polygamma(1, 1.0) - target));
    std::ostringstream detail;
    detail << "grid rel dev " << worst << ", psi1(1) dev " << psi_dev;
    report(3, "thermal integrals in closed form", worst <= 1e-8 && psi_dev <= 1e-10,
           detail.str());
}

// --- 4. bound dominance: relaxations above the exact information ---
void criterion_4() {
    Rng rng(904);
    double worst_matrix = 1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const Index bath_dims[] = {2, 4, 8, 16, 32};
        const Index db = bath_dims[rng.raw() % 5];
        const Matrix h_bath = rng.hermitian(db);
        const double beta = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
        const DensityMatrix system(rng.density(2));
        const DensityMatrix bath = thermal_state(h_bath, beta);
        const DriveSpec drive(rng.hermitian(2), rng.hermitian(2 * db), {0.0});
        const double information = skew_information(system, bath, drive.total_at(0.0));
        worst_matrix = std::min(
            {worst_matrix, relaxed_bound(drive, system, bath) - information,
             thermal_bound(drive, system, bath, h_bath, beta) - information,
             thermal_log_bound(drive, system, bath, h_bath, beta) - information});
    }

    BetaGrid grid;  // default Fig. 1/2 grid: 60 log points in [0.05, 20]
    double worst_panel = 1e300;
    const BlochState panels[] = {
        BlochState(1.0, {1.0, 0.0, 0.0}), BlochState(1.0, {0.0, 0.0, 1.0}),
        BlochState(0.6, {1.0, 0.0, 0.0}), BlochState(0.6, {0.0, 0.0, 1.0}),
        BlochState(0.9, {0.5, 0.5, 1.0 / std::sqrt(2.0)})};
    for (double beta : grid.values()) {
        for (const BlochState& state : panels) {
            for (bool bosonic : {true, false}) {
                const BoundCoefficients c =
                    bosonic ? ohmic_coefficients(OhmicSpectralDensity(1.0), beta)
                            : spin_bath_coefficients_continuum(1.0, beta);
                const QubitBathBounds bounds = qubit_bath_bounds(1.0, 1.0, beta, state, c);
                worst_panel = std::min(worst_panel, bounds.relaxed - bounds.exact);
                worst_panel = std::min(worst_panel, bounds.thermal - bounds.exact);
                if (bounds.thermal_log) {
                    worst_panel = std::min(worst_panel, *bounds.thermal_log - bounds.exact);
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "matrix min slack " << worst_matrix << ", panel min slack " << worst_panel;
    report(4, "bound dominance", worst_matrix >= -1e-9 && worst_panel >= -1e-12, detail.str());
}

// --- 5. pure-state coincidence of relaxed and exact for n_x = 0 ---
void criterion_5() {
    BetaGrid grid;
    double worst = 0.0;
    for (double beta : grid.values()) {
        for (const auto& axis : {std::array<double, 3>{0.0, 0.0, 1.0},
                                 std::array<double, 3>{0.0, 1.0, 0.0},
                                 std::array<double, 3>{0.0, 0.6, 0.8}}) {
            for (bool bosonic : {true, false}) {
                const BoundCoefficients c =
                    bosonic ? ohmic_coefficients(OhmicSpectralDensity(1.0), beta)
                            : spin_bath_coefficients_continuum(1.0, beta);
                const QubitBathBounds bounds =
                    qubit_bath_bounds(1.0, 1.0, beta, BlochState(1.0, axis), c);
                worst = std::max(worst, std::abs(bounds.relaxed - bounds.exact) /
                                            std::abs(bounds.exact));
            }
        }
    }
    std::ostringstream detail;
    detail << "max rel deviation " << worst;
    report(5, "pure-state coincidence", worst <= 1e-12, detail.str());
}

// --- 6. trivial limit: maximally mixed state at high temperature ---
void criterion_6() {
    const double gamma = 0.5, alpha = 2.0;
    const BlochState mixed(0.0, {0.0, 0.0, 1.0});
    bool passed = true;
    double largest_at_first = 0.0;
    for (bool bosonic : {true, false}) {
        double previous = 1e300;
        for (double beta : {0.01, 0.005, 0.0025}) {
            const BoundCoefficients c =
                bosonic ? ohmic_coefficients(OhmicSpectralDensity(alpha), beta)
                        : spin_bath_coefficients_continuum(alpha, beta);
            const QubitBathBounds bounds = qubit_bath_bounds(1.0, gamma, beta, mixed, c);
            const double largest =
                std::max({bounds.thermal, bounds.thermal_log.value(), bounds.exact});
            if (beta == 0.01) {
                largest_at_first = std::max(largest_at_first, largest);
                passed = passed && largest < 1e-3;
            }
            passed = passed && largest < previous;
            previous = largest;
        }
    }

    // matrix-level bounds vanish identically at beta = 0
    Rng rng(906);
    const DensityMatrix system(0.5 * Matrix::Identity(2, 2));
    const Matrix h_bath = rng.hermitian(4);
    const DensityMatrix bath = thermal_state(h_bath, 0.0);
    const DriveSpec drive(rng.hermitian(2), rng.hermitian(8), {0.0});
    const double thermal_zero = thermal_bound(drive, system, bath, h_bath, 0.0);
    const double log_zero = thermal_log_bound(drive, system, bath, h_bath, 0.0);
    passed = passed && thermal_zero == 0.0 && log_zero == 0.0;

    std::ostringstream detail;
    detail << "largest value at beta = 0.01: " << largest_at_first << ", beta=0 bounds "
           << thermal_zero << ", " << log_zero;
    report(6, "trivial limit", passed, detail.str());
}

// --- 7. inequality suites at their full trial counts ---
void criterion_7() {
    VerifyOptions options;
    options.seed = 71;
    const VerifyOutcome outcome = run_verification(options);
    double worst = 0.0;
    for (const InequalityReport& suite : outcome.reports) {
        worst = std::max(worst, suite.max_violation);
    }
    const int exit_code = run_cli("verify --out " +
                                  (fs::temp_directory_path() / "qslbath_acc_verify").string());
    std::ostringstream detail;
    detail << "max violation " << worst << ", verify exit " << exit_code;
    report(7, "appendix inequality suites", outcome.passed && worst <= 1e-9 && exit_code == 0,
           detail.str());
}

// --- 8. contractivity along the criterion-1 trajectories ---
void criterion_8() {
    double worst = 1e300;
    std::size_t points = 0;
    for (const TrajectoryRun& run : g_runs) {
        for (std::size_t k = 0; k < run.record.times.size(); ++k) {
            worst = std::min(worst, run.record.hellinger[k] - run.record.reduced_hellinger[k]);
            ++points;
        }
    }
    std::ostringstream detail;
    detail << points << " trajectory points, min(full - reduced) = " << worst;
    report(8, "contractivity of the reduced state", worst >= -1e-10, detail.str());
}

// --- 9. byte-identical outputs for identical config and seed ---
void criterion_9() {
    const fs::path first = fs::temp_directory_path() / "qslbath_acc_d1";
    const fs::path second = fs::temp_directory_path() / "qslbath_acc_d2";
    fs::remove_all(first);
    fs::remove_all(second);
    bool passed = true;
    const std::string bounds_flags = " --seed 11 --beta-points 15";
    passed &= run_cli("bounds --out " + first.string() + bounds_flags) == 0;
    passed &= run_cli("bounds --out " + second.string() + bounds_flags) == 0;
    for (int panel = 0; panel < 6 && passed; ++panel) {
        const std::string name = "bounds_panel" + std::to_string(panel) + ".csv";
        passed &= slurp(first / name) == slurp(second / name);
    }
    nlohmann::json config{{"model", "central-spin"},
                          {"parameters", {{"bath_spins", 5}, {"seed", 13}}},
                          {"grids", {{"time", {{"points", 50}}}}}};
    const fs::path config_path = first / "fig3.json";
    std::ofstream(config_path) << config.dump();
    const std::string fig3_flags = " --config " + config_path.string();
    passed &= run_cli("fig3 --out " + first.string() + fig3_flags) == 0;
    passed &= run_cli("fig3 --out " + second.string() + fig3_flags) == 0;
    for (int panel = 0; panel < 6 && passed; ++panel) {
        const std::string name = "fig3_panel" + std::to_string(panel) + ".csv";
        passed &= slurp(first / name) == slurp(second / name);
    }
    report(9, "deterministic outputs", passed, passed ? "byte-identical" : "files differ");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-qslbath-cli>\n");
        return 2;
    }
    g_cli = argv[1];
    const auto start = std::chrono::steady_clock::now();

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("suite finished in %.1f s, %d failure(s)\n", seconds, g_failures);
    if (seconds >= 300.0) {
        std::printf("[FAIL] timing: suite exceeded 300 s\n");
        ++g_failures;
    }
    return g_failures == 0 ? 0 : 1;
}
