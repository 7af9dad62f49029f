#include "tailsim/aero.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "tailsim/angles.hpp"

namespace tailsim {
namespace {

TEST(PolarTable, MidpointLinearInterpolation) {
    const PolarTable table({{0.0, 0.0, 0.01}, {10.0, 1.0, 0.05}});
    const Coefficients c = table.coefficients(deg2rad(5.0));
    EXPECT_NEAR(c.cl, 0.5, 1e-12);
    EXPECT_NEAR(c.cd, 0.03, 1e-12);
}

TEST(PolarTable, ExactSampleReturnsThatSample) {
    // 0.1 + (0.3 - 0.1) != 0.3 in doubles: interior nodes must short-circuit
    // rather than interpolate with s = 1.
    const PolarTable table({{-10.0, 0.1, 0.02}, {5.0, 0.3, 0.01}, {10.0, 1.0, 0.05}});
    for (const PolarSample& row : table.rows()) {
        const Coefficients c = table.coefficients_deg(row.alpha_deg);
        EXPECT_EQ(c.cl, row.cl);
        EXPECT_EQ(c.cd, row.cd);
    }
}

TEST(PolarTable, RadianEdgeRoundTripDoesNotFallOutOfRange) {
    const PolarTable table = default_polar_table();
    // Unit round-trips can land an ulp outside the sampled range; the radian
    // entry must absorb that instead of throwing.
    EXPECT_NO_THROW(table.coefficients(deg2rad(table.min_alpha_deg())));
    EXPECT_NO_THROW(table.coefficients(deg2rad(table.max_alpha_deg())));
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double a_deg =
            table.min_alpha_deg() + frac * (table.max_alpha_deg() - table.min_alpha_deg());
        const Coefficients via_rad = table.coefficients(deg2rad(a_deg));
        const Coefficients via_deg = table.coefficients_deg(a_deg);
        EXPECT_NEAR(via_rad.cl, via_deg.cl, 1e-9);
        EXPECT_NEAR(via_rad.cd, via_deg.cd, 1e-9);
    }
}

TEST(PolarTable, OutOfRangeNamesTheBounds) {
    const PolarTable table({{-10.0, -0.8, 0.02}, {10.0, 1.0, 0.05}});
    try {
        table.coefficients(deg2rad(11.0));
        FAIL() << "expected out_of_range";
    } catch (const std::out_of_range& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("-10"), std::string::npos) << msg;
        EXPECT_NE(msg.find("10"), std::string::npos) << msg;
    }
}

TEST(PolarTable, RejectsBadTables) {
    EXPECT_THROW(PolarTable({{0.0, 0.0, 0.01}}), PolarError);                   // 1 row
    EXPECT_THROW(PolarTable({{0.0, 0.0, 0.01}, {0.0, 1.0, 0.05}}), PolarError); // dup
    EXPECT_THROW(PolarTable({{5.0, 0.0, 0.01}, {0.0, 1.0, 0.05}}), PolarError); // order
    EXPECT_THROW(PolarTable({{0.0, 0.0, 0.0}, {5.0, 1.0, 0.05}}), PolarError);  // cd<=0
}

TEST(PolarTable, CsvParsingAndErrors) {
    std::istringstream good("alpha_deg,cl,cd\n-10,-0.8,0.02\n0,0,0.01\n10,1.0,0.05\n");
    const PolarTable table = PolarTable::from_csv(good, "good.csv");
    EXPECT_EQ(table.rows().size(), 3u);
    EXPECT_TRUE(table.covers(-10.0, 10.0));
    EXPECT_FALSE(table.covers(-10.0, 20.0));

    std::istringstream bad_header("alpha,cl,cd\n0,0,0.01\n");
    EXPECT_THROW(PolarTable::from_csv(bad_header, "h.csv"), PolarError);

    std::istringstream bad_cell("alpha_deg,cl,cd\n0,zero,0.01\n1,0,0.01\n");
    try {
        PolarTable::from_csv(bad_cell, "c.csv");
        FAIL() << "expected PolarError";
    } catch (const PolarError& e) {
        EXPECT_NE(std::string(e.what()).find("c.csv:2"), std::string::npos) << e.what();
    }

    std::istringstream unsorted("alpha_deg,cl,cd\n5,0,0.01\n0,0,0.01\n");
    EXPECT_THROW(PolarTable::from_csv(unsorted, "u.csv"), PolarError);

    std::istringstream empty("");
    EXPECT_THROW(PolarTable::from_csv(empty, "e.csv"), PolarError);
}

TEST(AnalyticPolar, SymmetricZeroLiftAtZeroAlpha) {
    const AnalyticPolar model{};
    const Coefficients c = model.coefficients(0.0);
    EXPECT_EQ(c.cl, 0.0);
    EXPECT_EQ(c.cd, model.drag_floor);
}

TEST(AnalyticPolar, LiftPeaksAtFortyFiveDegrees) {
    const AnalyticPolar model{};
    const double peak = model.coefficients(deg2rad(45.0)).cl;
    for (double a : {10.0, 30.0, 44.0, 46.0, 60.0, 89.0}) {
        EXPECT_LE(model.coefficients(deg2rad(a)).cl, peak);
    }
    EXPECT_NEAR(peak, model.lift_gain, 1e-15);
}

TEST(AeroForces, QuadraticScalingExamples) {
    AeroModel model;
    model.rho = 1.0;
    model.wing_area = 1.0;  // K = 0.5
    model.provider = PolarTable({{-180.0, 1.0, 0.1}, {180.0, 1.0, 0.1}});
    const LiftDrag f = aero_forces(model, 2.0, 0.0);
    EXPECT_NEAR(f.lift, 2.0, 1e-12);  // L = 0.5 * 1.0 * 4
    EXPECT_NEAR(f.drag, 0.2, 1e-12);
    EXPECT_EQ(aero_forces(model, 0.0, 0.3).lift, 0.0);
    EXPECT_EQ(aero_forces(model, 0.005, 0.3, 0.01).lift, 0.0);  // below floor
    EXPECT_THROW(aero_forces(model, -1.0, 0.0), std::invalid_argument);
}

TEST(AeroForces, HomogeneityInKAndAirspeed) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> v_dist(0.1, 30.0);
    std::uniform_real_distribution<double> a_dist(-0.15, 1.4);
    std::uniform_real_distribution<double> s_dist(0.2, 5.0);
    for (int i = 0; i < 500; ++i) {
        AeroModel model;
        model.wing_area = s_dist(rng);
        const double v = v_dist(rng);
        const double a = a_dist(rng);
        const LiftDrag base = aero_forces(model, v, a);
        const LiftDrag twice_v = aero_forces(model, 2.0 * v, a);
        EXPECT_NEAR(twice_v.lift, 4.0 * base.lift, 1e-9 * (1.0 + std::fabs(base.lift)));
        EXPECT_NEAR(twice_v.drag, 4.0 * base.drag, 1e-9 * (1.0 + std::fabs(base.drag)));

        AeroModel scaled = model;
        scaled.wing_area = 3.0 * model.wing_area;  // K scales by 3
        const LiftDrag k3 = aero_forces(scaled, v, a);
        EXPECT_NEAR(k3.lift, 3.0 * base.lift, 1e-9 * (1.0 + std::fabs(base.lift)));
        EXPECT_NEAR(k3.drag, 3.0 * base.drag, 1e-9 * (1.0 + std::fabs(base.drag)));
    }
}

TEST(OptimalAoa, AnalyticModelMatchesClosedFormAndFinerSweep) {
    // Independent oracle: for C_L = c1 sin(2a), C_D = cd0 + cd90 sin^2(a),
    // d(C_L/C_D)/da = 0 solves to sin^2(a*) = cd0/(cd90 + 2 cd0).
    const AnalyticPolar model{0.8, 1.0, 0.02};
    const double closed_form = rad2deg(std::asin(std::sqrt(0.02 / (1.0 + 0.04))));
    EXPECT_NEAR(closed_form, 7.971184302814320, 1e-9);

    const double coarse = optimal_aoa_deg(model, 0.0, 90.0, 0.01);
    EXPECT_NEAR(coarse, closed_form, 0.01);

    // 10x finer brute-force sweep, written out independently.
    double best_a = 0.0;
    double best_ratio = -1e300;
    for (int i = 0; i <= 90000; ++i) {
        const double a = i * 0.001;
        const Coefficients c = model.coefficients(deg2rad(a));
        const double ratio = c.cl / c.cd;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_a = a;
        }
    }
    EXPECT_NEAR(coarse, best_a, 0.01);
}

TEST(OptimalAoa, GridRefinementStability) {
    const AnalyticPolar model{};
    const double at_001 = optimal_aoa_deg(model, 0.0, 90.0, 0.01);
    const double at_0001 = optimal_aoa_deg(model, 0.0, 90.0, 0.001);
    EXPECT_LE(std::fabs(at_001 - at_0001), 0.01);
}

TEST(OptimalAoa, ConstantRatioTieBreaksLowest) {
    const PolarTable flat({{1.0, 0.5, 0.05}, {20.0, 10.0, 1.0}});  // cl/cd == 10
    EXPECT_EQ(optimal_aoa_deg(flat, 1.0, 20.0, 0.5), 1.0);
}

TEST(OptimalAoa, DegenerateRangeIsConfigurationError) {
    const AnalyticPolar model{};
    EXPECT_THROW(optimal_aoa_deg(model, 5.0, 5.0), std::invalid_argument);
    EXPECT_THROW(optimal_aoa_deg(model, 6.0, 5.0), std::invalid_argument);
    EXPECT_THROW(optimal_aoa_deg(model, 0.0, 10.0, 0.0), std::invalid_argument);
}

TEST(DefaultPolar, CoversTransitionEnvelopeAndPeaksAtSix) {
    const PolarTable table = default_polar_table();
    EXPECT_TRUE(table.covers(-10.0, 90.0));
    EXPECT_EQ(table.rows().size(), 201u);
    const double best = optimal_aoa_deg(table, -10.0, 90.0, 0.01);
    EXPECT_NEAR(best, 6.0, 0.01);
}

TEST(DefaultPolar, DerivedDragFloorPlacesAnalyticOptimumAtSix) {
    const AnalyticPolar model{};
    EXPECT_NEAR(model.drag_floor, 0.015079901533894759, 1e-15);
    EXPECT_NEAR(rad2deg(model.optimum_alpha_rad()), 6.0, 1e-9);
}

}  // namespace
}  // namespace tailsim
