#pragma once

#include "blockage/model.hpp"

namespace blockage::analytic {

/// Height-correction factors. `eta_x` scales the mean number of blockers of a
/// single point, `eta_tilde` the rate of the LOS-length law.
struct EtaPair {
    double eta_x = 1.0;
    double eta_tilde = 1.0;
    HeightRegime regime = HeightRegime::BsBelowAll;
};

struct CriticalRadii {
    double r_max_density = 0.0;  ///< radius maximising the interval density
    double r_equal = 0.0;        ///< radius where mean LOS and NLOS lengths coincide
};

struct AnalyticSummary {
    EtaPair eta;
    double p_los_point = 0.0;
    double p_nlos_point = 0.0;
    double mean_los_len = 0.0;
    double mean_nlos_len = 0.0;
    double density_per_m = 0.0;
    double r_max_density = 0.0;
    double r_equal_lengths = 0.0;
    double max_density_value = 0.0;
    double equal_length_value = 0.0;
};

// All functions below expect parameters that already passed validate().

double eta_x(const ScenarioParams& params);
double eta_tilde(const ScenarioParams& params);
EtaPair etas(const ScenarioParams& params);

/// Quadrature oracles for the height averages behind eta_x / eta_tilde.
/// Composite Simpson on [h_min, h_max], split at the integrand kinks
/// (h = h_user, h = h_bs). `n_points` must be >= 64.
double eta_x_quadrature(const ScenarioParams& params, int n_points);
double eta_tilde_quadrature(const ScenarioParams& params, int n_points);

/// Area of the region of building centres (length l, height h) that block
/// a fixed trajectory point.
double blocking_area_point(const ScenarioParams& params, double l, double h);

/// Area of the union of those regions over a trajectory segment of length z.
double blocking_area_segment(const ScenarioParams& params, double l, double h, double z);

/// P(a point of the trajectory is in LOS) = exp(-lambda eta_x E[L] r).
double p_los_point(const ScenarioParams& params);

/// P(a whole segment of length z is in LOS).
double p_segment_los(const ScenarioParams& params, double z);

/// Rate of the exponential LOS-length law, lambda * eta_tilde * r / 2.
double los_rate(const ScenarioParams& params);

/// 1 - exp(-los_rate * z): upper bound on the CDF of the LOS-interval length.
double cdf_los_bound(const ScenarioParams& params, double z);

/// Derivative of cdf_los_bound, used as the approximate LOS-length density.
double pdf_los_approx(const ScenarioParams& params, double z);

/// E[Z] = 2 / (lambda eta_tilde r).
double mean_los_length(const ScenarioParams& params);

/// E[S] = 2 (exp(lambda eta_x E[L] r) - 1) / (lambda eta_tilde r).
double mean_nlos_length(const ScenarioParams& params);

/// Expected LOS (equivalently NLOS) intervals per meter of trajectory.
double interval_density(const ScenarioParams& params);

CriticalRadii critical_radii(const ScenarioParams& params);

/// Peak of interval_density over r; independent of lambda.
double max_density_value(const ScenarioParams& params);

/// Common mean length of LOS and NLOS intervals at r_equal; independent of lambda.
double equal_length_value(const ScenarioParams& params);

AnalyticSummary summarize(const ScenarioParams& params);

}  // namespace blockage::analytic
