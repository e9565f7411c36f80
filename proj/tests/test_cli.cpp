// End-to-end checks of the installed command-line surface: byte-level
// determinism, exit codes, the negative verification control and worst-case
// replay. The binary path arrives through the QSLBATH_CLI environment
// variable set by ctest.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* path = std::getenv("QSLBATH_CLI");
    REQUIRE_MESSAGE(path != nullptr, "QSLBATH_CLI must point at the built binary");
    return path;
}

int run_cli(const std::string& args) {
    const std::string command = cli_path() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("bounds runs are byte-identical for identical config and seed") {
    const fs::path first = fresh_dir("qslbath_cli_b1");
    const fs::path second = fresh_dir("qslbath_cli_b2");
    const std::string flags = " --seed 42 --beta-points 9 --beta-min 0.1 --beta-max 10";
    REQUIRE(run_cli("bounds --out " + first.string() + flags) == 0);
    REQUIRE(run_cli("bounds --out " + second.string() + flags) == 0);
    for (int panel = 0; panel < 6; ++panel) {
        const std::string name = "bounds_panel" + std::to_string(panel) + ".csv";
        CHECK(slurp(first / name) == slurp(second / name));
    }
}

TEST_CASE("fig3 runs are byte-identical and structurally sound") {
    const fs::path first = fresh_dir("qslbath_cli_f1");
    const fs::path second = fresh_dir("qslbath_cli_f2");
    nlohmann::json config{
        {"model", "central-spin"},
        {"parameters",
         {{"bath_spins", 5},
          {"seed", 7},
          {"panels",
           {{{"p", 1.0}, {"n", {0.0, 0.0, 1.0}}}, {{"p", 0.6}, {"n", {1.0, 0.0, 0.0}}}}}}},
        {"grids", {{"time", {{"points", 60}}}}},
    };
    const fs::path config_path = first / "config.json";
    std::ofstream(config_path) << config.dump(2);
    const std::string flags = " --config " + config_path.string();
    REQUIRE(run_cli("fig3 --out " + first.string() + flags) == 0);
    REQUIRE(run_cli("fig3 --out " + second.string() + flags) == 0);
    for (int panel = 0; panel < 2; ++panel) {
        const std::string name = "fig3_panel" + std::to_string(panel) + ".csv";
        const std::string bytes = slurp(first / name);
        CHECK(bytes == slurp(second / name));
        // first data row starts at t = 0 with zero distance
        std::istringstream lines(bytes);
        std::string line;
        std::string first_row;
        bool header_seen = false;
        while (std::getline(lines, line)) {
            if (line.empty() || line.front() == '#') continue;
            if (!header_seen) {
                header_seen = true;
                continue;
            }
            first_row = line;
            break;
        }
        CHECK(first_row.substr(0, 2) == "0,");
    }
}

TEST_CASE("invalid configuration exits with code 1 and leaves no files") {
    const fs::path dir = fresh_dir("qslbath_cli_bad");
    const fs::path config_path = dir / "bad.json";
    std::ofstream(config_path) << R"({"parameters": {"bath_spins": 64}})";
    const fs::path out = dir / "out";
    CHECK(run_cli("bounds --config " + config_path.string() + " --out " + out.string()) == 1);
    CHECK(!fs::exists(out));
}

TEST_CASE("verify quick run passes and writes reports") {
    const fs::path dir = fresh_dir("qslbath_cli_verify");
    REQUIRE(run_cli("verify --quick --out " + dir.string()) == 0);
    const nlohmann::json summary = nlohmann::json::parse(slurp(dir / "verify_summary.json"));
    CHECK(summary.at("passed").get<bool>());
    CHECK(summary.at("reports").size() >= 9);
}

TEST_CASE("injected violation fails with the named inequality") {
    const fs::path dir = fresh_dir("qslbath_cli_inject");
    CHECK(run_cli("verify --quick --inject-violation lemma --out " + dir.string()) == 2);
    const nlohmann::json summary = nlohmann::json::parse(slurp(dir / "verify_summary.json"));
    CHECK(!summary.at("passed").get<bool>());
    bool lemma_failed = false;
    for (const auto& report : summary.at("reports")) {
        if (report.at("name") == "lemma") lemma_failed = !report.at("passed").get<bool>();
    }
    CHECK(lemma_failed);
}

TEST_CASE("replay reproduces the stored worst-case slack") {
    const fs::path dir = fresh_dir("qslbath_cli_replay");
    REQUIRE(run_cli("verify --quick --out " + dir.string()) == 0);
    for (const char* name : {"verify_lemma.json", "verify_proof_chain.json",
                             "verify_bound_dominance.json"}) {
        CHECK(run_cli("verify --replay " + (dir / name).string()) == 0);
    }
}

TEST_SUITE_END();
