#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blockage/model.hpp"

namespace blockage::geometry {

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class Kind { Los, Nlos };

const char* to_string(Kind kind) noexcept;

/// A maximal LOS or NLOS run of the trajectory, in trajectory coordinates
/// [0, d]. `censored` marks runs cut by either trajectory endpoint.
struct Interval {
    double start = 0.0;
    double end = 0.0;
    Kind kind = Kind::Los;
    bool censored = false;

    double length() const noexcept { return end - start; }

    bool operator==(const Interval&) const = default;
};

/// Open interval (lo, hi) of the trajectory hidden behind one building.
struct Shadow {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Shadow&) const = default;
};

/// Sorted, disjoint, alternating partition of [0, d] into LOS/NLOS runs.
class IntervalSet {
  public:
    IntervalSet() = default;

    /// Takes ownership of an already-built partition; throws
    /// std::logic_error if it is not a valid alternating cover of [0, d].
    IntervalSet(std::vector<Interval> intervals, double d);

    std::span<const Interval> intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    double trajectory_length() const noexcept { return d_; }

    double total_length(Kind kind) const noexcept;

    /// Empty string when every invariant holds, otherwise a description of
    /// the first violation.
    std::string check_invariants() const;

    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }

  private:
    std::vector<Interval> intervals_;
    double d_ = 0.0;
};

/// Geometry shared by every shadow computation: depth of the trajectory and
/// the two antenna heights.
struct SightGeometry {
    double r = 0.0;
    double h_bs = 0.0;
    double h_user = 0.0;

    static SightGeometry from(const ScenarioParams& p) noexcept { return {p.r, p.h_bs, p.h_user}; }

    /// Height of the BS-user sight line above a building at depth cv.
    double sight_height(double cv) const noexcept { return h_bs - (h_bs - h_user) * cv / r; }
};

/// Shadow of the line [u_lo, u_hi] at depth cv (BS at the origin, trajectory
/// at depth r, both in BS-relative street coordinates). Empty when the line
/// is below the sight line. Throws DomainError if cv is not in (0, r).
std::optional<Shadow> project_line(double u_lo, double u_hi, double cv, double height,
                                   const SightGeometry& geom);

std::optional<Shadow> shadow_of_building(const Building& b, const ScenarioParams& params);

/// Per-point blocking test: does building b cut the sight line to trajectory
/// point x? Independent of the projection route.
bool blocks_point(const Building& b, double x, const SightGeometry& geom);

/// Union of shadows clipped to [0, d], with the LOS complement filled in.
/// Shadows that overlap or touch are merged.
IntervalSet merge_shadows(std::span<const Shadow> shadows, double d);

/// Shadows of every building in BS-relative coordinates that can block.
std::vector<Shadow> shadows_of(std::span<const Building> buildings, const ScenarioParams& params);

/// Sweep route: shadows_of followed by merge_shadows.
IntervalSet extract_intervals(std::span<const Building> buildings, const ScenarioParams& params);

/// Brute-force oracle: classifies sample points 0, step, 2 step, ..., d with
/// blocks_point and places each LOS/NLOS boundary halfway between the two
/// samples that straddle it.
IntervalSet brute_force_intervals(std::span<const Building> buildings, const ScenarioParams& params,
                                  double step);

}  // namespace blockage::geometry
