#include <gtest/gtest.h>

#include "blockage/model.hpp"

using namespace blockage;

TEST(Model, BaselineValidatesAsBsWithin) {
    ScenarioParams p = baseline_params(100.0, 1000.0);
    EXPECT_EQ(validate(p), p);
    EXPECT_EQ(p.regime(), HeightRegime::BsWithin);
}

TEST(Model, EqualAntennaHeightsRejected) {
    ScenarioParams p = baseline_params();
    p.h_bs = 10.0;
    p.h_user = 10.0;
    try {
        validate(p);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "h_bs");
    }
}

TEST(Model, InvertedLengthSupportRejected) {
    ScenarioParams p = baseline_params();
    p.l_min = 30.0;
    p.l_max = 10.0;
    try {
        validate(p);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "l_max");
    }
}

TEST(Model, OtherInvariantsNameTheirField) {
    auto field_of = [](auto mutate) -> std::string {
        ScenarioParams p = baseline_params();
        mutate(p);
        try {
            validate(p);
        } catch (const ValidationError& e) {
            return e.field();
        }
        return "";
    };
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.lambda = 0.0; }), "lambda");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.r = -1.0; }), "r");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.d = 0.0; }), "d");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.l_min = 0.0; }), "l_min");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.h_min = -1.0; }), "h_min");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.h_max = 5.0; }), "h_max");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.h_user = 12.0; }), "h_user");
    EXPECT_EQ(field_of([](ScenarioParams& p) { p.r = std::numeric_limits<double>::quiet_NaN(); }), "r");
}

TEST(Model, MeanLength) {
    ScenarioParams p = baseline_params();
    EXPECT_DOUBLE_EQ(mean_length(p), 20.0);
    p.l_min = p.l_max = 5.0;
    EXPECT_DOUBLE_EQ(mean_length(p), 5.0);
    p.l_min = 0.1;
    p.l_max = 0.3;
    EXPECT_NEAR(mean_length(p), 0.2, 1e-15);
}

TEST(Model, RegimeIsExhaustiveAndExclusive) {
    ScenarioParams p = baseline_params();
    for (double hb = 2.0; hb <= 60.0; hb += 0.25) {
        p.h_bs = hb;
        const HeightRegime regime = p.regime();
        const bool below = hb < p.h_min;
        const bool above = hb > p.h_max;
        const bool within = !below && !above;
        EXPECT_EQ(regime == HeightRegime::BsBelowAll, below) << hb;
        EXPECT_EQ(regime == HeightRegime::BsAboveAll, above) << hb;
        EXPECT_EQ(regime == HeightRegime::BsWithin, within) << hb;
    }
    p.h_bs = p.h_min;
    EXPECT_EQ(p.regime(), HeightRegime::BsWithin);
    p.h_bs = p.h_max;
    EXPECT_EQ(p.regime(), HeightRegime::BsWithin);
}

TEST(Model, ValidateIsIdempotent) {
    const ScenarioParams p = baseline_params(250.0, 5000.0);
    EXPECT_EQ(validate(validate(p)), validate(p));
}
