#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockage/model.hpp"

namespace blockage::cli {

/// Exit codes of the blockage-geom front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Bad config document or flag. Mapped to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Output could not be written. Mapped to exit code 3.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct QuerySpec {
    double bs_u = 0.0;
    double bs_v = 0.0;
    double u_lo = 0.0;
    double u_hi = 0.0;
    int side = +1;
};

struct RandomBsSpec {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    double trajectory_length = 0.0;
};

struct LayoutSpec {
    std::filesystem::path path;
    double thinning = 1.0;
    std::uint64_t thinning_seed = 0;
    std::vector<QuerySpec> queries;
    std::optional<RandomBsSpec> random_bs;
};

/// Everything a command needs. Loaded from a JSON config file; flags
/// override individual keys.
struct Config {
    ScenarioParams params;
    std::vector<double> r_values;
    std::vector<double> z_grid;
    std::uint64_t n_trials = 100;
    std::uint64_t seed = 1;
    bool include_censored = false;
    unsigned threads = 1;
    std::filesystem::path out_dir = ".";
    std::optional<std::filesystem::path> export_scene;
    std::optional<LayoutSpec> layout;
};

/// Parses the config schema. Relative paths inside the document resolve
/// against `base_dir`. Unknown keys are rejected.
Config parse_config(const std::string& json_text, const std::filesystem::path& base_dir = ".");
Config load_config(const std::filesystem::path& path);

/// Flag overrides; unset members leave the config untouched.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::vector<double>> r_values;
    std::optional<unsigned> threads;
    bool include_censored = false;
};

void apply(Config& config, const Overrides& overrides);

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_number(double value);

// Commands. Each writes its files into config.out_dir and returns the list
// of files written. Errors surface as ConfigError, ValidationError,
// layout::LayoutError / QueryError (exit 2) or IoError (exit 3).

/// analytic_summary.json, plus analytic_r.csv when r_values is set and
/// analytic_z.csv when z_grid is set.
std::vector<std::filesystem::path> cmd_analytic(const Config& config);

/// simulate_intervals.csv, simulate_cdf.csv, simulate_summary.json and the
/// optional scene export of trial 0.
std::vector<std::filesystem::path> cmd_simulate(const Config& config);

/// sweep.csv and sweep_summary.json.
std::vector<std::filesystem::path> cmd_sweep(const Config& config);

/// layout_intervals.csv, layout_cdf.csv and layout_summary.json.
std::vector<std::filesystem::path> cmd_layout(const Config& config);

/// Dispatches by command name and maps exceptions to exit codes, printing
/// diagnostics to `err`.
int run(const std::string& command, const Config& config, std::ostream& err);

}  // namespace blockage::cli
