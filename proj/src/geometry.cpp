#include "blockage/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace blockage::geometry {

const char* to_string(Kind kind) noexcept { return kind == Kind::Los ? "LOS" : "NLOS"; }

IntervalSet::IntervalSet(std::vector<Interval> intervals, double d) : intervals_(std::move(intervals)), d_(d) {
    if (auto problem = check_invariants(); !problem.empty()) throw std::logic_error("IntervalSet: " + problem);
}

double IntervalSet::total_length(Kind kind) const noexcept {
    double total = 0.0;
    for (const auto& iv : intervals_) {
        if (iv.kind == kind) total += iv.length();
    }
    return total;
}

std::string IntervalSet::check_invariants() const {
    if (intervals_.empty()) return "empty partition";
    if (intervals_.front().start != 0.0) return "does not start at 0";
    if (intervals_.back().end != d_) return "does not end at d";
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const Interval& iv = intervals_[i];
        if (!(iv.start < iv.end)) return "non-positive length at index " + std::to_string(i);
        const bool touches = iv.start == 0.0 || iv.end == d_;
        if (iv.censored != touches) return "censored flag mismatch at index " + std::to_string(i);
        if (i > 0) {
            const Interval& prev = intervals_[i - 1];
            if (prev.end != iv.start) return "gap or overlap at index " + std::to_string(i);
            if (prev.kind == iv.kind) return "kinds do not alternate at index " + std::to_string(i);
        }
    }
    return {};
}

namespace {

void check_depth(double cv, double r) {
    if (!(cv > 0.0 && cv < r)) {
        throw DomainError("building depth cv=" + std::to_string(cv) + " outside (0, " + std::to_string(r) + ")");
    }
}

}  // namespace

std::optional<Shadow> project_line(double u_lo, double u_hi, double cv, double height, const SightGeometry& geom) {
    check_depth(cv, geom.r);
    if (height < geom.sight_height(cv)) return std::nullopt;
    const double scale = geom.r / cv;
    return Shadow{u_lo * scale, u_hi * scale};
}

std::optional<Shadow> shadow_of_building(const Building& b, const ScenarioParams& params) {
    return project_line(b.u_lo(), b.u_hi(), b.cv, b.height, SightGeometry::from(params));
}

bool blocks_point(const Building& b, double x, const SightGeometry& geom) {
    check_depth(b.cv, geom.r);
    if (b.height < geom.sight_height(b.cv)) return false;
    // Where the ray from the BS to x crosses the building's line.
    const double crossing = x * b.cv / geom.r;
    return std::abs(b.cu - crossing) <= 0.5 * b.length;
}

IntervalSet merge_shadows(std::span<const Shadow> shadows, double d) {
    std::vector<Shadow> clipped;
    clipped.reserve(shadows.size());
    for (const Shadow& s : shadows) {
        const double lo = std::max(s.lo, 0.0);
        const double hi = std::min(s.hi, d);
        if (lo < hi) clipped.push_back({lo, hi});
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const Shadow& a, const Shadow& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });

    std::vector<Interval> out;
    out.reserve(2 * clipped.size() + 1);
    auto push = [&](double start, double end, Kind kind) {
        out.push_back(Interval{start, end, kind, start == 0.0 || end == d});
    };

    double cursor = 0.0;  // end of the last emitted interval
    std::size_t i = 0;
    while (i < clipped.size()) {
        double lo = clipped[i].lo;
        double hi = clipped[i].hi;
        for (++i; i < clipped.size() && clipped[i].lo <= hi; ++i) hi = std::max(hi, clipped[i].hi);
        if (lo > cursor) push(cursor, lo, Kind::Los);
        push(lo, hi, Kind::Nlos);
        cursor = hi;
    }
    if (cursor < d) push(cursor, d, Kind::Los);
    return IntervalSet(std::move(out), d);
}

std::vector<Shadow> shadows_of(std::span<const Building> buildings, const ScenarioParams& params) {
    const SightGeometry geom = SightGeometry::from(params);
    std::vector<Shadow> shadows;
    shadows.reserve(buildings.size());
    for (const Building& b : buildings) {
        if (auto s = project_line(b.u_lo(), b.u_hi(), b.cv, b.height, geom)) shadows.push_back(*s);
    }
    return shadows;
}

IntervalSet extract_intervals(std::span<const Building> buildings, const ScenarioParams& params) {
    const auto shadows = shadows_of(buildings, params);
    return merge_shadows(shadows, params.d);
}

IntervalSet brute_force_intervals(std::span<const Building> buildings, const ScenarioParams& params, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step: must be > 0");
    const SightGeometry geom = SightGeometry::from(params);
    const double d = params.d;

    auto classify = [&](double x) {
        for (const Building& b : buildings) {
            if (blocks_point(b, x, geom)) return Kind::Nlos;
        }
        return Kind::Los;
    };

    const auto n_steps = static_cast<std::size_t>(std::floor(d / step));
    std::vector<Interval> out;
    double prev_x = 0.0;
    Kind prev_kind = classify(0.0);
    double run_start = 0.0;
    auto close_run = [&](double end) {
        out.push_back(Interval{run_start, end, prev_kind, run_start == 0.0 || end == d});
        run_start = end;
    };
    for (std::size_t k = 1; k <= n_steps + 1; ++k) {
        const double x = (k <= n_steps) ? static_cast<double>(k) * step : d;
        if (x <= prev_x) break;
        const Kind kind = classify(x);
        if (kind != prev_kind) {
            close_run(0.5 * (prev_x + x));
            prev_kind = kind;
        }
        prev_x = x;
    }
    close_run(d);
    return IntervalSet(std::move(out), d);
}

}  // namespace blockage::geometry
