// blockage-geom: analytic model, Monte Carlo simulator and layout evaluator
// for LOS/NLOS intervals along a straight urban trajectory.
//
//   blockage-geom analytic|simulate|sweep|layout --config <path>
//       [--seed N] [--out <dir>] [--trials N] [--r a,b,c] [--include-censored] [--threads N]

#include <iostream>

#include <CLI11.hpp>

#include "blockage/cli.hpp"

int main(int argc, char** argv) {
    namespace cli = blockage::cli;

    CLI::App app{"LOS/NLOS interval statistics for urban mmWave trajectories", "blockage-geom"};
    std::string command;
    std::string config_path;
    cli::Overrides overrides;
    std::uint64_t seed = 0, trials = 0;
    std::string out_dir;
    std::vector<double> r_values;
    unsigned threads = 0;

    app.add_option("command", command, "analytic, simulate, sweep or layout")
        ->required()
        ->check(CLI::IsMember({"analytic", "simulate", "sweep", "layout"}));
    app.add_option("--config", config_path, "JSON config file")->required();
    auto* seed_opt = app.add_option("--seed", seed, "master RNG seed");
    auto* out_opt = app.add_option("--out", out_dir, "output directory");
    auto* trials_opt = app.add_option("--trials", trials, "number of Monte Carlo trials");
    auto* r_opt = app.add_option("--r", r_values, "comma-separated trajectory distances")->delimiter(',');
    auto* threads_opt = app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_flag("--include-censored", overrides.include_censored, "keep boundary-censored intervals in length stats");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitConfig;
    }

    if (*seed_opt) overrides.seed = seed;
    if (*out_opt) overrides.out_dir = out_dir;
    if (*trials_opt) overrides.trials = trials;
    if (*r_opt) overrides.r_values = r_values;
    if (*threads_opt) overrides.threads = threads;

    cli::Config config;
    try {
        config = cli::load_config(config_path);
        cli::apply(config, overrides);
    } catch (const cli::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return cli::kExitIo;
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::kExitConfig;
    }
    return cli::run(command, config, std::cerr);
}
