#include "blockage/model.hpp"

#include <cmath>

namespace blockage {

const char* to_string(HeightRegime regime) noexcept {
    switch (regime) {
        case HeightRegime::BsBelowAll:
            return "bs_below_all";
        case HeightRegime::BsWithin:
            return "bs_within";
        case HeightRegime::BsAboveAll:
            return "bs_above_all";
    }
    return "unknown";
}

HeightRegime ScenarioParams::regime() const noexcept {
    if (h_bs < h_min) return HeightRegime::BsBelowAll;
    if (h_bs > h_max) return HeightRegime::BsAboveAll;
    return HeightRegime::BsWithin;
}

namespace {

void require_finite(const char* field, double value) {
    if (!std::isfinite(value)) throw ValidationError(field, "must be finite");
}

}  // namespace

ScenarioParams validate(const ScenarioParams& p) {
    require_finite("lambda", p.lambda);
    require_finite("r", p.r);
    require_finite("d", p.d);
    require_finite("h_bs", p.h_bs);
    require_finite("h_user", p.h_user);
    require_finite("l_min", p.l_min);
    require_finite("l_max", p.l_max);
    require_finite("h_min", p.h_min);
    require_finite("h_max", p.h_max);

    if (!(p.lambda > 0.0)) throw ValidationError("lambda", "must be > 0");
    if (!(p.r > 0.0)) throw ValidationError("r", "must be > 0");
    if (!(p.d > 0.0)) throw ValidationError("d", "must be > 0");
    if (!(p.l_min > 0.0)) throw ValidationError("l_min", "must be > 0");
    if (p.l_max < p.l_min) throw ValidationError("l_max", "must be >= l_min");
    if (p.h_min < 0.0) throw ValidationError("h_min", "must be >= 0");
    if (p.h_max < p.h_min) throw ValidationError("h_max", "must be >= h_min");
    if (p.h_user > p.h_min) throw ValidationError("h_user", "must be <= h_min");
    // Every area formula divides by h_bs - h_user.
    if (!(p.h_user < p.h_bs)) throw ValidationError("h_bs", "must be strictly greater than h_user");
    return p;
}

ScenarioParams baseline_params(double r, double d) {
    ScenarioParams p;
    p.lambda = 3.22e-4;
    p.r = r;
    p.d = d;
    p.h_bs = 25.0;
    p.h_user = 1.5;
    p.l_min = 10.0;
    p.l_max = 30.0;
    p.h_min = 10.0;
    p.h_max = 30.0;
    return p;
}

}  // namespace blockage
