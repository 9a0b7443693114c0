#include "blockage/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace blockage::montecarlo {

using geometry::IntervalSet;
using geometry::Kind;

double RunStats::point_los_frequency() const noexcept {
    return total_trajectory_length > 0.0 ? los_length_total / total_trajectory_length : 0.0;
}

double RunStats::los_density() const noexcept {
    if (total_trajectory_length <= 0.0) return 0.0;
    return (static_cast<double>(n_los_intervals) + 0.5 * static_cast<double>(n_los_censored)) /
           total_trajectory_length;
}

double RunStats::nlos_density() const noexcept {
    if (total_trajectory_length <= 0.0) return 0.0;
    return (static_cast<double>(n_nlos_intervals) + 0.5 * static_cast<double>(n_nlos_censored)) /
           total_trajectory_length;
}

namespace {
double sample_mean(const std::vector<double>& v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}
}  // namespace

double RunStats::mean_los_length() const { return sample_mean(los_lengths); }
double RunStats::mean_nlos_length() const { return sample_mean(nlos_lengths); }

void RunStats::add_trial(const IntervalSet& set, bool include_censored) {
    for (const auto& iv : set) {
        const bool los = iv.kind == Kind::Los;
        if (los) los_length_total += iv.length();
        auto& count = iv.censored ? (los ? n_los_censored : n_nlos_censored) : (los ? n_los_intervals : n_nlos_intervals);
        ++count;
        if (!iv.censored || include_censored) (los ? los_lengths : nlos_lengths).push_back(iv.length());
    }
    total_trajectory_length += set.trajectory_length();
    ++n_trials;
}

void RunStats::merge(const RunStats& other) {
    los_lengths.insert(los_lengths.end(), other.los_lengths.begin(), other.los_lengths.end());
    nlos_lengths.insert(nlos_lengths.end(), other.nlos_lengths.begin(), other.nlos_lengths.end());
    n_los_intervals += other.n_los_intervals;
    n_nlos_intervals += other.n_nlos_intervals;
    n_los_censored += other.n_los_censored;
    n_nlos_censored += other.n_nlos_censored;
    los_length_total += other.los_length_total;
    total_trajectory_length += other.total_trajectory_length;
    n_trials += other.n_trials;
}

double expected_scene_size(const ScenarioParams& p) noexcept { return p.lambda * (p.d + p.l_max) * p.r; }

std::vector<Building> sample_scene(const ScenarioParams& p, Rng& rng) {
    const auto n = rng.poisson(expected_scene_size(p));
    const double u_lo = -0.5 * p.l_max;
    const double u_hi = p.d + 0.5 * p.l_max;
    std::vector<Building> scene;
    scene.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Building b;
        b.cu = rng.uniform(u_lo, u_hi);
        do {
            b.cv = p.r * rng.uniform();
        } while (!(b.cv > 0.0 && b.cv < p.r));
        b.length = rng.uniform(p.l_min, p.l_max);
        b.height = rng.uniform(p.h_min, p.h_max);
        scene.push_back(b);
    }
    return scene;
}

std::vector<Building> trial_scene(const ScenarioParams& params, std::uint64_t seed, std::uint64_t index) {
    Rng rng(stream_seed(seed, index));
    return sample_scene(params, rng);
}

namespace {

IntervalSet run_one(const TrialConfig& config, std::uint64_t index) {
    const auto scene = trial_scene(config.params, config.seed, index);
    IntervalSet set = geometry::extract_intervals(scene, config.params);
    const double covered = set.total_length(Kind::Los) + set.total_length(Kind::Nlos);
    if (std::abs(covered - config.params.d) > 1e-9 * std::max(1.0, config.params.d)) {
        throw std::logic_error("trial intervals do not cover the trajectory");
    }
    return set;
}

constexpr std::uint64_t kBlock = 256;

}  // namespace

void for_each_trial(const TrialConfig& config,
                    const std::function<void(std::uint64_t, const IntervalSet&)>& consumer) {
    validate(config.params);
    if (config.n_trials < 1) throw std::invalid_argument("n_trials: must be >= 1");

    const unsigned threads =
        config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    std::vector<IntervalSet> block(std::min(kBlock, config.n_trials));
    for (std::uint64_t first = 0; first < config.n_trials; first += kBlock) {
        const std::uint64_t count = std::min(kBlock, config.n_trials - first);
        const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
        if (workers <= 1) {
            for (std::uint64_t i = 0; i < count; ++i) block[i] = run_one(config, first + i);
        } else {
            std::atomic<std::uint64_t> next{0};
            std::atomic<bool> failed{false};
            std::exception_ptr failure;
            auto work = [&] {
                try {
                    for (std::uint64_t i; !failed && (i = next.fetch_add(1)) < count;) {
                        block[i] = run_one(config, first + i);
                    }
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            };
            {
                std::vector<std::jthread> pool;
                for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
            }
            if (failure) std::rethrow_exception(failure);
        }
        for (std::uint64_t i = 0; i < count; ++i) consumer(first + i, block[i]);
    }
}

RunStats run_trials(const TrialConfig& config) {
    RunStats total;
    for_each_trial(config, [&](std::uint64_t, const IntervalSet& set) { total.add_trial(set, config.include_censored); });
    return total;
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples, std::span<const double> grid) {
    if (samples.empty()) throw EmptySample("empirical_cdf: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<CdfPoint> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const auto below = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        out.push_back({x, static_cast<double>(below) / n});
    }
    return out;
}

std::vector<SweepRow> density_sweep(const ScenarioParams& params, std::span<const double> r_values,
                                    std::uint64_t n_trials, std::uint64_t seed, bool include_censored,
                                    unsigned threads) {
    if (r_values.empty()) throw std::invalid_argument("r_values: must not be empty");
    std::vector<SweepRow> rows;
    rows.reserve(r_values.size());
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        TrialConfig config;
        config.params = params;
        config.params.r = r_values[i];
        config.n_trials = n_trials;
        config.seed = stream_seed(seed, i);
        config.include_censored = include_censored;
        config.threads = threads;
        const RunStats stats = run_trials(config);

        SweepRow row;
        row.r = r_values[i];
        row.los_density = stats.los_density();
        row.nlos_density = stats.nlos_density();
        row.mean_z = stats.mean_los_length();
        row.mean_s = stats.mean_nlos_length();
        row.point_los_frequency = stats.point_los_frequency();
        row.n_los = stats.n_los_intervals;
        row.n_nlos = stats.n_nlos_intervals;
        rows.push_back(row);
    }
    return rows;
}

SweepFeatures sweep_features(std::span<const SweepRow> rows) {
    SweepFeatures f;
    if (rows.empty()) return f;

    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].los_density > rows[best].los_density) best = i;
    }
    f.peak_r_grid = rows[best].r;
    f.peak_r = rows[best].r;
    f.peak_density = rows[best].los_density;
    if (best > 0 && best + 1 < rows.size()) {
        const double x0 = rows[best - 1].r, x1 = rows[best].r, x2 = rows[best + 1].r;
        const double y0 = rows[best - 1].los_density, y1 = rows[best].los_density, y2 = rows[best + 1].los_density;
        const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
        const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
        if (den != 0.0) f.peak_r = x1 - 0.5 * num / den;
    }

    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const SweepRow& a = rows[i];
        const SweepRow& b = rows[i + 1];
        if (!(a.mean_z > 0.0 && a.mean_s > 0.0 && b.mean_z > 0.0 && b.mean_s > 0.0)) continue;
        const double ga = std::log(a.mean_z / a.mean_s);
        const double gb = std::log(b.mean_z / b.mean_s);
        if (ga == 0.0 || (ga > 0.0) != (gb > 0.0)) {
            const double t = ga == gb ? 0.0 : ga / (ga - gb);
            f.has_crossing = true;
            f.crossing_r = a.r + t * (b.r - a.r);
            f.crossing_length = std::exp(std::log(a.mean_z) + t * (std::log(b.mean_z) - std::log(a.mean_z)));
            break;
        }
    }
    return f;
}

}  // namespace blockage::montecarlo
