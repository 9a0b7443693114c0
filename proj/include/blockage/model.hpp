#pragma once

#include <stdexcept>
#include <string>

namespace blockage {

/// Raised when a parameter set breaks one of the scenario invariants.
/// `field()` names the offending parameter so front ends can report it.
class ValidationError : public std::invalid_argument {
  public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Position of the BS antenna relative to the building-height law.
enum class HeightRegime { BsBelowAll, BsWithin, BsAboveAll };

const char* to_string(HeightRegime regime) noexcept;

/// Scalar description of the urban scenario. SI units throughout:
/// meters, and buildings per square meter for `lambda`.
///
/// Building lengths follow U[l_min, l_max] and heights U[h_min, h_max]. The
/// trajectory runs parallel to the buildings at perpendicular distance `r`
/// from the BS and has length `d`.
struct ScenarioParams {
    double lambda = 0.0;
    double r = 0.0;
    double d = 0.0;
    double h_bs = 0.0;
    double h_user = 0.0;
    double l_min = 0.0;
    double l_max = 0.0;
    double h_min = 0.0;
    double h_max = 0.0;

    /// E[L] of the uniform length law.
    double mean_length() const noexcept { return 0.5 * (l_min + l_max); }

    HeightRegime regime() const noexcept;

    bool operator==(const ScenarioParams&) const = default;
};

/// One blocking element: a zero-thickness line parallel to the trajectory.
/// `cu` runs along the street axis, `cv` is the perpendicular offset of the
/// line from the BS.
struct Building {
    double cu = 0.0;
    double cv = 0.0;
    double length = 0.0;
    double height = 0.0;

    double u_lo() const noexcept { return cu - 0.5 * length; }
    double u_hi() const noexcept { return cu + 0.5 * length; }

    bool operator==(const Building&) const = default;
};

/// Returns `params` unchanged when every scenario invariant holds, otherwise
/// throws ValidationError naming the first violated field.
ScenarioParams validate(const ScenarioParams& params);

/// Free-function form of ScenarioParams::mean_length.
inline double mean_length(const ScenarioParams& params) noexcept { return params.mean_length(); }

/// The baseline urban setting used throughout the tests and docs
/// (dense city-centre blocks, 25 m BS, 1.5 m user, 10-30 m lengths and heights).
ScenarioParams baseline_params(double r = 100.0, double d = 1000.0);

}  // namespace blockage
