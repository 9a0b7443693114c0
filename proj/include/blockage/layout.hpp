#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockage/geometry.hpp"
#include "blockage/model.hpp"
#include "blockage/montecarlo.hpp"

namespace blockage::layout {

/// Malformed layout document. The message carries the JSON path of the
/// offending field (e.g. `buildings[3].u_hi`) or the parser's line/column.
class LayoutError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Query that does not fit the layout (outside the bounding box, bad r, ...).
class QueryError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Axis-aligned building footprint. `u` runs along the streets the
/// trajectories follow, `v` across them.
struct Rect {
    double u_lo = 0.0;
    double u_hi = 0.0;
    double v_lo = 0.0;
    double v_hi = 0.0;
    double height = 0.0;

    bool operator==(const Rect&) const = default;
};

/// Blocking line parallel to the `u` axis.
struct Line {
    double u_lo = 0.0;
    double u_hi = 0.0;
    double v = 0.0;
    double height = 0.0;

    bool operator==(const Line&) const = default;
};

struct BoundingBox {
    double u_lo = 0.0;
    double u_hi = 0.0;
    double v_lo = 0.0;
    double v_hi = 0.0;

    double area() const noexcept { return (u_hi - u_lo) * (v_hi - v_lo); }
    bool contains(double u, double v) const noexcept { return u >= u_lo && u <= u_hi && v >= v_lo && v <= v_hi; }

    bool operator==(const BoundingBox&) const = default;
};

struct LayoutFile {
    std::string name;
    std::string units = "m";
    std::vector<Rect> buildings;
    std::vector<Line> lines;
    BoundingBox bbox;

    bool operator==(const LayoutFile&) const = default;
};

/// Parses the JSON layout schema:
///   { "name": str, "units": "m",
///     "buildings": [ {"u_lo","u_hi","v_lo","v_hi","h"} ... ],
///     "lines":     [ {"u_lo","u_hi","v","h"} ... ],          (optional)
///     "bbox":      {"u_lo","u_hi","v_lo","v_hi"} }            (optional)
/// Without "bbox" the box is the extent of all footprints and lines.
LayoutFile parse_layout(const std::string& json_text);
LayoutFile load_layout(const std::filesystem::path& path);

/// Serialises back to the same schema. Doubles are written in shortest
/// round-trip form, so parse_layout(to_json(x)) == x.
std::string to_json(const LayoutFile& layout);

enum class Sides { Both, Low, High };

/// Sides of the footprint parallel to the trajectory (v = v_lo and v = v_hi),
/// each with the footprint's height. A zero-depth footprint gives one line.
std::vector<Line> rect_to_lines(const Rect& rect, Sides sides = Sides::Both);

/// Every blocking line of the layout: both long sides of each footprint,
/// followed by the explicit lines.
std::vector<Line> blocking_lines(const LayoutFile& layout);

/// Lines per building to use with the analytic model at trajectory distance
/// r. Piecewise linear through (50 m, 2.0), (150 m, 1.3), (300 m, 1.0) and
/// clamped to [1, 2] outside.
double effective_line_factor(double r);

/// Footprints per square meter of bounding box. Line-only layouts count
/// lines instead.
double estimate_density(const LayoutFile& layout);

/// Seeded Bernoulli subsampling: every footprint and line survives
/// independently with probability `factor`.
LayoutFile thin_layout(const LayoutFile& layout, double factor, std::uint64_t seed);

struct LayoutQuery {
    double bs_u = 0.0;
    double bs_v = 0.0;
    double h_bs = 0.0;
    double r = 0.0;       ///< perpendicular distance BS -> trajectory
    int side = +1;        ///< trajectory at v = bs_v + side * r
    double u_lo = 0.0;    ///< trajectory extent along u
    double u_hi = 0.0;
    double h_user = 0.0;
    double thinning = 1.0;
    std::uint64_t thinning_seed = 0;
};

struct LayoutResult {
    geometry::IntervalSet intervals;
    montecarlo::RunStats stats;
    std::size_t lines_total = 0;
    std::size_t lines_between = 0;  ///< lines strictly between BS and trajectory
};

/// Deterministic LOS/NLOS partition of one trajectory in a real layout.
/// Trajectory coordinates start at query.u_lo.
LayoutResult evaluate_layout(const LayoutFile& layout, const LayoutQuery& query, bool include_censored = false);

/// Queries with the BS placed uniformly at random wherever the whole
/// trajectory (length `trajectory_length`, starting at the BS abscissa)
/// still fits in the bounding box.
std::vector<LayoutQuery> random_queries(const LayoutFile& layout, const LayoutQuery& prototype,
                                        double trajectory_length, std::size_t count, std::uint64_t seed);

/// Writes a simulated scene as a line layout. Lines keep the exact endpoint
/// values the simulator projects, so evaluate_layout with
/// scene_query(params) reproduces the simulated partition bit for bit.
LayoutFile scene_to_layout(const std::vector<Building>& scene, const ScenarioParams& params,
                           const std::string& name = "scene");
LayoutQuery scene_query(const ScenarioParams& params);

/// Manhattan grid of square-ish blocks separated by streets.
struct GridSpec {
    double u_lo = 0.0, u_hi = 1000.0;
    double v_lo = 0.0, v_hi = 1000.0;
    double block_u = 83.0;
    double block_v = 83.0;
    double street = 30.0;
    double height = 40.0;
};

LayoutFile grid_layout(const GridSpec& spec);

}  // namespace blockage::layout
