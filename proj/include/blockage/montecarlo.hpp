#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blockage/geometry.hpp"
#include "blockage/model.hpp"
#include "blockage/random.hpp"

namespace blockage::montecarlo {

class EmptySample : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct TrialConfig {
    ScenarioParams params;
    std::uint64_t n_trials = 1;
    std::uint64_t seed = 0;
    bool include_censored = false;
    /// Worker threads; 0 picks std::thread::hardware_concurrency(). Results
    /// never depend on this value.
    unsigned threads = 1;
};

/// Aggregated interval statistics. Length samples and counters are appended
/// in trial order, so merging is deterministic.
struct RunStats {
    std::vector<double> los_lengths;
    std::vector<double> nlos_lengths;

    std::uint64_t n_los_intervals = 0;  ///< uncensored
    std::uint64_t n_nlos_intervals = 0;  ///< uncensored
    std::uint64_t n_los_censored = 0;
    std::uint64_t n_nlos_censored = 0;

    double los_length_total = 0.0;  ///< includes censored runs
    double total_trajectory_length = 0.0;
    std::uint64_t n_trials = 0;

    std::uint64_t n_los_total() const noexcept { return n_los_intervals + n_los_censored; }
    std::uint64_t n_nlos_total() const noexcept { return n_nlos_intervals + n_nlos_censored; }

    double point_los_frequency() const noexcept;

    /// Intervals per meter; censored runs count one half.
    double los_density() const noexcept;
    double nlos_density() const noexcept;

    double mean_los_length() const;
    double mean_nlos_length() const;

    /// Appends one trial's intervals. Censored runs enter the length samples
    /// only when `include_censored` is set.
    void add_trial(const geometry::IntervalSet& set, bool include_censored);

    /// Appends `other` after this (order matters for the sample vectors).
    void merge(const RunStats& other);
};

/// Draws one PPP scene: N ~ Poisson(lambda (d + l_max) r) buildings with
/// centres uniform on [-l_max/2, d + l_max/2] x (0, r) and independent
/// uniform lengths and heights. Buildings outside that strip cannot shadow
/// any point of [0, d].
std::vector<Building> sample_scene(const ScenarioParams& params, Rng& rng);

/// Scene of trial `index` under `seed`, exactly as run_trials draws it.
std::vector<Building> trial_scene(const ScenarioParams& params, std::uint64_t seed, std::uint64_t index);

/// Expected building count of one scene, lambda (d + l_max) r.
double expected_scene_size(const ScenarioParams& params) noexcept;

/// Runs every trial and hands its partition to `consumer` in trial-index
/// order, whatever the thread count.
void for_each_trial(const TrialConfig& config,
                    const std::function<void(std::uint64_t, const geometry::IntervalSet&)>& consumer);

RunStats run_trials(const TrialConfig& config);

struct CdfPoint {
    double x = 0.0;
    double value = 0.0;
};

/// Right-continuous empirical CDF, F(x) = #{samples <= x} / n, evaluated on
/// `grid`. Throws EmptySample when there are no samples.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples, std::span<const double> grid);

struct SweepRow {
    double r = 0.0;
    double los_density = 0.0;
    double nlos_density = 0.0;
    double mean_z = 0.0;
    double mean_s = 0.0;
    double point_los_frequency = 0.0;
    std::uint64_t n_los = 0;
    std::uint64_t n_nlos = 0;
};

/// Re-runs run_trials for every r (params.r replaced). The trials at the
/// i-th radius use seed stream_seed(seed, i).
std::vector<SweepRow> density_sweep(const ScenarioParams& params, std::span<const double> r_values,
                                    std::uint64_t n_trials, std::uint64_t seed, bool include_censored = false,
                                    unsigned threads = 1);

/// Peak and crossing estimates read off a sweep.
struct SweepFeatures {
    double peak_r_grid = 0.0;  ///< grid argmax of the LOS density
    double peak_r = 0.0;       ///< argmax refined by a parabola through the three top points
    double peak_density = 0.0;
    bool has_crossing = false;
    double crossing_r = 0.0;  ///< where mean_z == mean_s, log-linear interpolation
    double crossing_length = 0.0;
};

SweepFeatures sweep_features(std::span<const SweepRow> rows);

}  // namespace blockage::montecarlo
