#include "blockage/layout.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace blockage::layout {

using nlohmann::json;

namespace {

double number_field(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw LayoutError(path + "." + key + ": missing");
    if (!it->is_number()) throw LayoutError(path + "." + key + ": expected a number");
    const double value = it->get<double>();
    if (!std::isfinite(value)) throw LayoutError(path + "." + key + ": must be finite");
    return value;
}

void check_height(double h, const std::string& path) {
    if (h < 0.0) throw LayoutError(path + ".h: must be >= 0");
}

BoundingBox extent(const LayoutFile& layout) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox box{inf, -inf, inf, -inf};
    for (const Rect& r : layout.buildings) {
        box.u_lo = std::min(box.u_lo, r.u_lo);
        box.u_hi = std::max(box.u_hi, r.u_hi);
        box.v_lo = std::min(box.v_lo, r.v_lo);
        box.v_hi = std::max(box.v_hi, r.v_hi);
    }
    for (const Line& l : layout.lines) {
        box.u_lo = std::min(box.u_lo, l.u_lo);
        box.u_hi = std::max(box.u_hi, l.u_hi);
        box.v_lo = std::min(box.v_lo, l.v);
        box.v_hi = std::max(box.v_hi, l.v);
    }
    if (layout.buildings.empty() && layout.lines.empty()) return BoundingBox{};
    return box;
}

}  // namespace

LayoutFile parse_layout(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw LayoutError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw LayoutError("layout: top level must be an object");

    LayoutFile layout;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw LayoutError("name: expected a string");
        layout.name = it->get<std::string>();
    }
    if (auto it = doc.find("units"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != "m") throw LayoutError("units: must be \"m\"");
    }

    if (auto it = doc.find("buildings"); it != doc.end()) {
        if (!it->is_array()) throw LayoutError("buildings: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "buildings[" + std::to_string(i) + "]";
            const json& item = (*it)[i];
            if (!item.is_object()) throw LayoutError(path + ": expected an object");
            Rect r{number_field(item, path, "u_lo"), number_field(item, path, "u_hi"), number_field(item, path, "v_lo"),
                   number_field(item, path, "v_hi"), number_field(item, path, "h")};
            if (!(r.u_lo < r.u_hi)) throw LayoutError(path + ": u_lo must be < u_hi");
            if (!(r.v_lo <= r.v_hi)) throw LayoutError(path + ": v_lo must be <= v_hi");
            check_height(r.height, path);
            layout.buildings.push_back(r);
        }
    }
    if (auto it = doc.find("lines"); it != doc.end()) {
        if (!it->is_array()) throw LayoutError("lines: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "lines[" + std::to_string(i) + "]";
            const json& item = (*it)[i];
            if (!item.is_object()) throw LayoutError(path + ": expected an object");
            Line l{number_field(item, path, "u_lo"), number_field(item, path, "u_hi"), number_field(item, path, "v"),
                   number_field(item, path, "h")};
            if (!(l.u_lo < l.u_hi)) throw LayoutError(path + ": u_lo must be < u_hi");
            check_height(l.height, path);
            layout.lines.push_back(l);
        }
    }
    if (auto it = doc.find("bbox"); it != doc.end()) {
        if (!it->is_object()) throw LayoutError("bbox: expected an object");
        layout.bbox = BoundingBox{number_field(*it, "bbox", "u_lo"), number_field(*it, "bbox", "u_hi"),
                                  number_field(*it, "bbox", "v_lo"), number_field(*it, "bbox", "v_hi")};
        if (!(layout.bbox.u_lo < layout.bbox.u_hi) || !(layout.bbox.v_lo < layout.bbox.v_hi)) {
            throw LayoutError("bbox: must have u_lo < u_hi and v_lo < v_hi");
        }
    } else {
        layout.bbox = extent(layout);
    }
    return layout;
}

LayoutFile load_layout(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open layout file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_layout(buffer.str());
}

std::string to_json(const LayoutFile& layout) {
    json doc;
    doc["name"] = layout.name;
    doc["units"] = layout.units;
    doc["buildings"] = json::array();
    for (const Rect& r : layout.buildings) {
        doc["buildings"].push_back({{"u_lo", r.u_lo}, {"u_hi", r.u_hi}, {"v_lo", r.v_lo}, {"v_hi", r.v_hi}, {"h", r.height}});
    }
    doc["lines"] = json::array();
    for (const Line& l : layout.lines) {
        doc["lines"].push_back({{"u_lo", l.u_lo}, {"u_hi", l.u_hi}, {"v", l.v}, {"h", l.height}});
    }
    doc["bbox"] = {{"u_lo", layout.bbox.u_lo}, {"u_hi", layout.bbox.u_hi}, {"v_lo", layout.bbox.v_lo},
                   {"v_hi", layout.bbox.v_hi}};
    return doc.dump(1) + "\n";
}

std::vector<Line> rect_to_lines(const Rect& rect, Sides sides) {
    std::vector<Line> out;
    if (sides != Sides::High) out.push_back({rect.u_lo, rect.u_hi, rect.v_lo, rect.height});
    if (sides != Sides::Low && !(sides == Sides::Both && rect.v_hi == rect.v_lo)) {
        out.push_back({rect.u_lo, rect.u_hi, rect.v_hi, rect.height});
    }
    return out;
}

std::vector<Line> blocking_lines(const LayoutFile& layout) {
    std::vector<Line> out;
    out.reserve(2 * layout.buildings.size() + layout.lines.size());
    for (const Rect& r : layout.buildings) {
        for (const Line& l : rect_to_lines(r)) out.push_back(l);
    }
    out.insert(out.end(), layout.lines.begin(), layout.lines.end());
    return out;
}

double effective_line_factor(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("r: must be > 0");
    struct Anchor {
        double r, factor;
    };
    constexpr Anchor anchors[] = {{50.0, 2.0}, {150.0, 1.3}, {300.0, 1.0}};
    if (r <= anchors[0].r) return anchors[0].factor;
    for (std::size_t i = 1; i < std::size(anchors); ++i) {
        if (r <= anchors[i].r) {
            const double t = (r - anchors[i - 1].r) / (anchors[i].r - anchors[i - 1].r);
            return anchors[i - 1].factor + t * (anchors[i].factor - anchors[i - 1].factor);
        }
    }
    return anchors[std::size(anchors) - 1].factor;
}

double estimate_density(const LayoutFile& layout) {
    const double area = layout.bbox.area();
    if (!(area > 0.0)) throw std::invalid_argument("estimate_density: layout has no bounding box area");
    const std::size_t count = layout.buildings.empty() ? layout.lines.size() : layout.buildings.size();
    if (count == 0) throw std::invalid_argument("estimate_density: layout is empty");
    return static_cast<double>(count) / area;
}

LayoutFile thin_layout(const LayoutFile& layout, double factor, std::uint64_t seed) {
    if (!(factor > 0.0 && factor <= 1.0)) throw QueryError("thinning: must be in (0, 1]");
    if (factor == 1.0) return layout;
    Rng rng(seed);
    LayoutFile out = layout;
    out.buildings.clear();
    out.lines.clear();
    for (const Rect& r : layout.buildings) {
        if (rng.uniform() < factor) out.buildings.push_back(r);
    }
    for (const Line& l : layout.lines) {
        if (rng.uniform() < factor) out.lines.push_back(l);
    }
    return out;
}

namespace {

void check_query(const LayoutFile& layout, const LayoutQuery& q) {
    if (!(q.r > 0.0)) throw QueryError("query.r: must be > 0");
    if (q.side != 1 && q.side != -1) throw QueryError("query.side: must be +1 or -1");
    if (!(q.u_lo < q.u_hi)) throw QueryError("query: trajectory u-range must be non-degenerate");
    if (!(q.h_user < q.h_bs)) throw QueryError("query: h_bs must exceed h_user");
    const double v_traj = q.bs_v + q.side * q.r;
    if (!layout.bbox.contains(q.bs_u, q.bs_v)) throw QueryError("query: BS outside the layout bounding box");
    if (!layout.bbox.contains(q.u_lo, v_traj) || !layout.bbox.contains(q.u_hi, v_traj)) {
        throw QueryError("query: trajectory outside the layout bounding box");
    }
}

}  // namespace

LayoutResult evaluate_layout(const LayoutFile& layout, const LayoutQuery& q, bool include_censored) {
    check_query(layout, q);
    const LayoutFile thinned = thin_layout(layout, q.thinning, q.thinning_seed);
    const std::vector<Line> lines = blocking_lines(thinned);

    const geometry::SightGeometry geom{q.r, q.h_bs, q.h_user};
    const double offset = q.bs_u - q.u_lo;  // BS-relative u -> trajectory coordinate
    LayoutResult result;
    result.lines_total = lines.size();
    std::vector<geometry::Shadow> shadows;
    for (const Line& line : lines) {
        const double cv = q.side * (line.v - q.bs_v);
        if (!(cv > 0.0 && cv < q.r)) continue;
        ++result.lines_between;
        if (auto s = geometry::project_line(line.u_lo - q.bs_u, line.u_hi - q.bs_u, cv, line.height, geom)) {
            shadows.push_back({s->lo + offset, s->hi + offset});
        }
    }
    result.intervals = geometry::merge_shadows(shadows, q.u_hi - q.u_lo);
    result.stats.add_trial(result.intervals, include_censored);
    return result;
}

std::vector<LayoutQuery> random_queries(const LayoutFile& layout, const LayoutQuery& prototype,
                                        double trajectory_length, std::size_t count, std::uint64_t seed) {
    const BoundingBox& box = layout.bbox;
    const double u_max = box.u_hi - trajectory_length;
    double v_lo = box.v_lo, v_hi = box.v_hi;
    if (prototype.side > 0) {
        v_hi -= prototype.r;
    } else {
        v_lo += prototype.r;
    }
    if (!(u_max >= box.u_lo) || !(v_hi >= v_lo)) throw QueryError("random_queries: trajectory does not fit the layout");

    Rng rng(seed);
    std::vector<LayoutQuery> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        LayoutQuery q = prototype;
        q.bs_u = rng.uniform(box.u_lo, u_max);
        q.bs_v = rng.uniform(v_lo, v_hi);
        q.u_lo = q.bs_u;
        q.u_hi = q.bs_u + trajectory_length;
        out.push_back(q);
    }
    return out;
}

LayoutFile scene_to_layout(const std::vector<Building>& scene, const ScenarioParams& params, const std::string& name) {
    LayoutFile layout;
    layout.name = name;
    layout.lines.reserve(scene.size());
    for (const Building& b : scene) layout.lines.push_back({b.u_lo(), b.u_hi(), b.cv, b.height});
    layout.bbox = BoundingBox{-params.l_max, params.d + params.l_max, 0.0, params.r};
    return layout;
}

LayoutQuery scene_query(const ScenarioParams& params) {
    LayoutQuery q;
    q.bs_u = 0.0;
    q.bs_v = 0.0;
    q.h_bs = params.h_bs;
    q.r = params.r;
    q.side = +1;
    q.u_lo = 0.0;
    q.u_hi = params.d;
    q.h_user = params.h_user;
    return q;
}

LayoutFile grid_layout(const GridSpec& spec) {
    LayoutFile layout;
    layout.name = "grid";
    const double period_u = spec.block_u + spec.street;
    const double period_v = spec.block_v + spec.street;
    for (double v = spec.v_lo; v + spec.block_v <= spec.v_hi; v += period_v) {
        for (double u = spec.u_lo; u + spec.block_u <= spec.u_hi; u += period_u) {
            layout.buildings.push_back({u, u + spec.block_u, v, v + spec.block_v, spec.height});
        }
    }
    layout.bbox = BoundingBox{spec.u_lo, spec.u_hi, spec.v_lo, spec.v_hi};
    return layout;
}

}  // namespace blockage::layout
