#include "blockage/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace blockage::analytic {

namespace {

// Fraction of the BS-user depth over which a building of height h is tall
// enough to cut the sight line.
double point_integrand(const ScenarioParams& p, double h) {
    return std::clamp((h - p.h_user) / (p.h_bs - p.h_user), 0.0, 1.0);
}

double segment_integrand(const ScenarioParams& p, double h) {
    if (h > p.h_bs) return 1.0;
    const double a = (p.h_bs - h) / (p.h_bs - p.h_user);
    return std::max(0.0, 1.0 - a * a);
}

template <typename F>
double simpson(F&& f, double lo, double hi, int intervals) {
    // intervals is even and >= 2
    const double step = (hi - lo) / intervals;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i) {
        sum += f(lo + i * step) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return sum * step / 3.0;
}

template <typename F>
double height_average(const ScenarioParams& p, int n_points, F&& integrand) {
    if (n_points < 64) throw std::invalid_argument("n_points: must be >= 64");
    if (p.h_max == p.h_min) return integrand(p.h_min);

    std::vector<double> knots{p.h_min};
    for (double kink : {p.h_user, p.h_bs}) {
        if (kink > p.h_min && kink < p.h_max) knots.push_back(kink);
    }
    knots.push_back(p.h_max);
    std::sort(knots.begin(), knots.end());

    const double span = p.h_max - p.h_min;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i];
        const double hi = knots[i + 1];
        if (hi <= lo) continue;
        int intervals = static_cast<int>(std::lround(n_points * (hi - lo) / span));
        intervals = std::max(intervals, 2);
        if (intervals % 2 != 0) ++intervals;
        total += simpson(integrand, lo, hi, intervals);
    }
    return total / span;
}

}  // namespace

double eta_x(const ScenarioParams& p) {
    const double hb = p.h_bs;
    const double hu = p.h_user;
    const double lo = p.h_min;
    const double hi = p.h_max;
    switch (p.regime()) {
        case HeightRegime::BsBelowAll:
            return 1.0;
        case HeightRegime::BsWithin:
            if (hi == lo) return point_integrand(p, lo);
            return (2.0 * hb * hi - hb * hb - lo * lo - 2.0 * hu * (hi - lo)) /
                   (2.0 * (hb - hu) * (hi - lo));
        case HeightRegime::BsAboveAll:
            return (hi + lo - 2.0 * hu) / (2.0 * (hb - hu));
    }
    return 1.0;
}

double eta_tilde(const ScenarioParams& p) {
    const double hb = p.h_bs;
    const double hu = p.h_user;
    const double lo = p.h_min;
    const double hi = p.h_max;
    const double dh2 = (hb - hu) * (hb - hu);
    switch (p.regime()) {
        case HeightRegime::BsBelowAll:
            return 1.0;
        case HeightRegime::BsWithin: {
            if (hi == lo) return segment_integrand(p, lo);
            const double span = hi - lo;
            return (hi - hb) / span + (hu * hu - 2.0 * hb * hu) * (hb - lo) / (span * dh2) +
                   (2.0 / 3.0 * hb * hb * hb - hb * lo * lo + lo * lo * lo / 3.0) / (span * dh2);
        }
        case HeightRegime::BsAboveAll:
            return (hu * hu - 2.0 * hb * hu) / dh2 - (hi * hi + hi * lo + lo * lo) / (3.0 * dh2) +
                   hb * (hi + lo) / dh2;
    }
    return 1.0;
}

EtaPair etas(const ScenarioParams& p) { return EtaPair{eta_x(p), eta_tilde(p), p.regime()}; }

double eta_x_quadrature(const ScenarioParams& p, int n_points) {
    return height_average(p, n_points, [&p](double h) { return point_integrand(p, h); });
}

double eta_tilde_quadrature(const ScenarioParams& p, int n_points) {
    return height_average(p, n_points, [&p](double h) { return segment_integrand(p, h); });
}

double blocking_area_point(const ScenarioParams& p, double l, double h) {
    if (h < p.h_user) return 0.0;
    if (h > p.h_bs) return p.r * l;
    return p.r * l * (h - p.h_user) / (p.h_bs - p.h_user);
}

double blocking_area_segment(const ScenarioParams& p, double l, double h, double z) {
    if (h < p.h_user) return 0.0;
    if (h > p.h_bs) return 0.5 * p.r * (z + 2.0 * l);
    const double a = (p.h_bs - h) / (p.h_bs - p.h_user);
    return 0.5 * p.r * (z * (1.0 - a * a) + 2.0 * (1.0 - a) * l);
}

namespace {
double point_exponent(const ScenarioParams& p) { return p.lambda * eta_x(p) * p.mean_length() * p.r; }
}  // namespace

double p_los_point(const ScenarioParams& p) { return std::exp(-point_exponent(p)); }

double p_segment_los(const ScenarioParams& p, double z) {
    return std::exp(-p.lambda * 0.5 * p.r * (eta_tilde(p) * z + 2.0 * eta_x(p) * p.mean_length()));
}

double los_rate(const ScenarioParams& p) { return p.lambda * eta_tilde(p) * 0.5 * p.r; }

double cdf_los_bound(const ScenarioParams& p, double z) { return -std::expm1(-los_rate(p) * z); }

double pdf_los_approx(const ScenarioParams& p, double z) {
    const double rate = los_rate(p);
    return rate * std::exp(-rate * z);
}

double mean_los_length(const ScenarioParams& p) { return 2.0 / (p.lambda * eta_tilde(p) * p.r); }

double mean_nlos_length(const ScenarioParams& p) {
    return 2.0 * std::expm1(point_exponent(p)) / (p.lambda * eta_tilde(p) * p.r);
}

double interval_density(const ScenarioParams& p) { return p_los_point(p) / mean_los_length(p); }

CriticalRadii critical_radii(const ScenarioParams& p) {
    const double scale = 1.0 / (p.lambda * eta_x(p) * p.mean_length());
    return CriticalRadii{scale, std::numbers::ln2 * scale};
}

double max_density_value(const ScenarioParams& p) {
    return eta_tilde(p) / eta_x(p) / (2.0 * p.mean_length() * std::numbers::e);
}

double equal_length_value(const ScenarioParams& p) {
    return eta_x(p) / eta_tilde(p) * p.mean_length() * 2.0 / std::numbers::ln2;
}

AnalyticSummary summarize(const ScenarioParams& p) {
    AnalyticSummary s;
    s.eta = etas(p);
    const double x = point_exponent(p);
    s.p_los_point = std::exp(-x);
    s.p_nlos_point = 1.0 - s.p_los_point;
    s.mean_los_len = mean_los_length(p);
    s.mean_nlos_len = mean_nlos_length(p);
    s.density_per_m = s.p_los_point / s.mean_los_len;
    const CriticalRadii radii = critical_radii(p);
    s.r_max_density = radii.r_max_density;
    s.r_equal_lengths = radii.r_equal;
    s.max_density_value = max_density_value(p);
    s.equal_length_value = equal_length_value(p);
    return s;
}

}  // namespace blockage::analytic
