#pragma once

#include <cstdint>
#include <random>

namespace blockage {

/// SplitMix64 finaliser. Stable across releases: trial streams and every
/// golden output depend on it.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the independent stream for `index` under `master`:
/// mix64(master ^ mix64(index)).
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index));
}

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; every variate is derived here rather
/// than through <random> distributions, which are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on the open interval (0, 1), 52-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 12) * 0x1.0p-52 + 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Poisson variate. Sequential inversion for mean < 30, the PTRS
    /// transformed-rejection method (Hormann 1993) above.
    std::uint64_t poisson(double mean);

  private:
    std::mt19937_64 engine_;
};

}  // namespace blockage
