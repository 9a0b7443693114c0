#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "blockage/cli.hpp"

namespace fs = std::filesystem;
using namespace blockage;
using namespace blockage::cli;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("blockage_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BLOCKAGE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kBaseline = R"({
  "lambda": 3.22e-4, "r": 100, "d": 2000, "h_bs": 25, "h_user": 1.5,
  "l_min": 10, "l_max": 30, "h_min": 10, "h_max": 30,
  "n_trials": 20, "seed": 11
})";

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(Format, RoundTripPrecision) {
    for (double x : {0.1, 1.0 / 3.0, 69.155730314601, 1e-300, -2.5}) {
        EXPECT_EQ(std::stod(format_number(x)), x);
    }
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Config, ParsesScenarioAndGrids) {
    const Config c = parse_config(R"({"lambda":1e-4,"r":50,"d":10,"h_bs":20,"h_user":1,"l_min":5,"l_max":6,
        "h_min":2,"h_max":3,"r_values":{"start":10,"stop":30,"count":3},"z_grid":[0,1,2],"threads":2})");
    EXPECT_EQ(c.params.lambda, 1e-4);
    EXPECT_EQ(c.params.h_max, 3.0);
    EXPECT_EQ(c.r_values, (std::vector<double>{10, 20, 30}));
    EXPECT_EQ(c.z_grid, (std::vector<double>{0, 1, 2}));
    EXPECT_EQ(c.threads, 2u);
    EXPECT_EQ(c.n_trials, 100u);
}

TEST(Config, RejectsBadDocuments) {
    EXPECT_THROW(parse_config(R"({"lamda":1})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"lambda":"x"})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"n_trials":0})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"z_grid":[2,1]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"z_grid":[]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"layout":{"path":"x.json"}})"), ConfigError);
    EXPECT_THROW(parse_config("{"), ConfigError);
}

TEST(Config, RelativePathsResolveAgainstConfigDir) {
    const Config c = parse_config(R"({"out":"results","layout":{"path":"maps/a.json","queries":[
        {"bs_u":0,"bs_v":0,"u_lo":0,"u_hi":10}]}})",
                                  "/data/run");
    EXPECT_EQ(c.out_dir, fs::path("/data/run/results"));
    EXPECT_EQ(c.layout->path, fs::path("/data/run/maps/a.json"));
    EXPECT_EQ(c.layout->queries.size(), 1u);
}

TEST(Config, OverridesReplaceKeys) {
    Config c = parse_config(kBaseline);
    Overrides o;
    o.seed = 99;
    o.trials = 3;
    o.r_values = std::vector<double>{5, 6};
    o.include_censored = true;
    apply(c, o);
    EXPECT_EQ(c.seed, 99u);
    EXPECT_EQ(c.n_trials, 3u);
    EXPECT_EQ(c.r_values, (std::vector<double>{5, 6}));
    EXPECT_TRUE(c.include_censored);
}

TEST(Commands, AnalyticSummary) {
    const fs::path dir = scratch("analytic");
    Config c = parse_config(kBaseline);
    c.out_dir = dir;
    c.z_grid = {0, 10, 50, 100, 500};
    c.r_values = {50, 100, 200};
    const auto files = cmd_analytic(c);
    EXPECT_EQ(files.size(), 3u);
    const auto doc = nlohmann::json::parse(slurp(dir / "analytic_summary.json"));
    EXPECT_NEAR(doc["eta_x"].get<double>(), 0.760638, 1e-6);
    for (const char* key : {"eta_x", "eta_tilde", "p_los", "p_nlos", "mean_Z", "mean_S", "density", "r_max_density",
                            "r_equal"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    const auto rows = read_csv(dir / "analytic_z.csv");
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"z", "p_segment_los", "cdf_bound", "pdf_approx"}));
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GE(std::stod(rows[i][2]), std::stod(rows[i - 1][2]));
}

TEST(Commands, SweepTheoryColumnsMatchAnalytic) {
    const fs::path dir = scratch("sweep");
    Config c = parse_config(kBaseline);
    c.out_dir = dir;
    c.n_trials = 3;
    c.r_values = {80, 160};
    cmd_sweep(c);
    const auto rows = read_csv(dir / "sweep.csv");
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0][0], "r");
    EXPECT_EQ(rows[0][7], "density_theory");
    c.out_dir = scratch("sweep_analytic");
    cmd_analytic(c);
    const auto theory = read_csv(c.out_dir / "analytic_r.csv");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][5], theory[i][5]);  // mean_Z
        EXPECT_EQ(rows[i][6], theory[i][6]);  // mean_S
        EXPECT_EQ(rows[i][7], theory[i][7]);  // density
    }
    c.r_values.clear();
    EXPECT_THROW(cmd_sweep(c), ConfigError);
}

TEST(Commands, SimulateCdfWithinBound) {
    const fs::path dir = scratch("simulate");
    Config c = parse_config(kBaseline);
    c.out_dir = dir;
    c.params.d = 20000.0;
    c.n_trials = 20;
    cmd_simulate(c);
    const auto rows = read_csv(dir / "simulate_cdf.csv");
    ASSERT_EQ(rows.size(), 102u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(std::stod(rows[i][1]), std::stod(rows[i][3]) + std::stod(rows[i][4]) + 1e-12) << i;
    }
    const auto summary = nlohmann::json::parse(slurp(dir / "simulate_summary.json"));
    EXPECT_EQ(summary["total_trajectory_length"].get<double>(), 4e5);
}

TEST(Binary, ExitCodes) {
    const fs::path dir = scratch("exit");
    spit(dir / "ok.json", kBaseline);
    spit(dir / "zero_lambda.json", R"({"lambda":0,"r":100,"d":100,"h_bs":25,"h_user":1.5,
        "l_min":10,"l_max":30,"h_min":10,"h_max":30})");
    spit(dir / "bad.json", "{not json");
    spit(dir / "layout_missing.json", R"({"lambda":3e-4,"r":100,"d":100,"h_bs":25,"h_user":1.5,"l_min":10,
        "l_max":30,"h_min":10,"h_max":30,"layout":{"path":"nowhere.json",
        "queries":[{"bs_u":0,"bs_v":0,"u_lo":0,"u_hi":10}]}})");
    const std::string out = " --out " + (dir / "out").string();

    EXPECT_EQ(run_cli("analytic --config " + (dir / "ok.json").string() + out), 0);
    EXPECT_EQ(run_cli("analytic --config " + (dir / "zero_lambda.json").string() + out), 2);
    EXPECT_EQ(run_cli("analytic --config " + (dir / "bad.json").string() + out), 2);
    EXPECT_EQ(run_cli("sweep --config " + (dir / "ok.json").string() + out), 2);
    EXPECT_EQ(run_cli("analytic --config " + (dir / "missing.json").string() + out), 3);
    EXPECT_EQ(run_cli("layout --config " + (dir / "layout_missing.json").string() + out), 3);
    EXPECT_EQ(run_cli("frobnicate --config " + (dir / "ok.json").string() + out), 2);
    EXPECT_EQ(run_cli("analytic"), 2);

    // an output path that is a regular file cannot become a directory
    spit(dir / "blocker", "x");
    EXPECT_EQ(run_cli("analytic --config " + (dir / "ok.json").string() + " --out " + (dir / "blocker").string()), 3);
}

TEST(Binary, SeededRunsAreByteIdentical) {
    const fs::path dir = scratch("determinism");
    spit(dir / "cfg.json", kBaseline);
    const std::string cfg = " --config " + (dir / "cfg.json").string();
    ASSERT_EQ(run_cli("simulate" + cfg + " --out " + (dir / "a").string()), 0);
    ASSERT_EQ(run_cli("simulate" + cfg + " --out " + (dir / "b").string() + " --threads 3"), 0);
    ASSERT_EQ(run_cli("simulate" + cfg + " --out " + (dir / "c").string() + " --seed 12"), 0);
    for (const char* name : {"simulate_intervals.csv", "simulate_cdf.csv", "simulate_summary.json"}) {
        EXPECT_EQ(slurp(dir / "a" / name), slurp(dir / "b" / name)) << name;
        EXPECT_FALSE(slurp(dir / "a" / name).empty());
    }
    EXPECT_NE(slurp(dir / "a" / "simulate_intervals.csv"), slurp(dir / "c" / "simulate_intervals.csv"));
}

TEST(Binary, RFlagFeedsSweep) {
    const fs::path dir = scratch("rflag");
    spit(dir / "cfg.json", kBaseline);
    ASSERT_EQ(run_cli("sweep --config " + (dir / "cfg.json").string() + " --r 50,150 --trials 2 --out " +
                      (dir / "o").string()),
              0);
    const auto rows = read_csv(dir / "o" / "sweep.csv");
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1][0], "50");
    EXPECT_EQ(rows[2][0], "150");
}
