// Acceptance suite: one test per criterion, each printing its own pass line.
// Tolerances are pinned here; the smoothness rate limits were frozen from the
// first accepted preset runs.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "tailsim/angles.hpp"
#include "tailsim/config.hpp"
#include "tailsim/integrate.hpp"
#include "tailsim/scenario.hpp"
#include "tailsim/sim.hpp"

namespace tailsim {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Frozen from the first accepted runs of both presets (max observed per-step
// jumps 1.33 for thrust and 16.0 for torque at dt = 1e-3), with headroom for
// libm variation across platforms.
constexpr double kFrozenThrustRate = 1.9e3;   // |dT| <= rate * dt
constexpr double kFrozenTorqueRate = 2.1e4;   // |dtau| <= rate * dt

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

RunResult run_preset(const RunConfig& config) {
    const AeroModel aero = config.make_aero_model();
    TransitionController controller(config.gains, config.allocation);
    const TrajectoryParams traj = config.trajectory;
    const ReferenceFn refs = [traj](double t) { return reference_at(traj, t); };
    return run(config.make_sim_config(), refs, controller, aero, config.physical);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(Acceptance, Criterion1SaturationAxioms) {
    const auto start = Clock::now();
    std::mt19937_64 rng(0x5a17);
    std::uniform_real_distribution<double> bound_dist(0.1, 5.0);
    std::uniform_real_distribution<double> frac_dist(0.05, 0.99);
    std::uniform_real_distribution<double> arg_dist(-1e6, 1e6);
    for (int i = 0; i < 10000; ++i) {
        const double M = bound_dist(rng);
        const double L = M * frac_dist(rng);
        const SaturationFn sat{L, M};
        const double s = arg_dist(rng);
        const double v = sat(s);
        if (s != 0.0) {
            ASSERT_GT(s * v, 0.0);  // (a)
        }
        ASSERT_LE(std::fabs(v), M);                // (b)
        if (std::fabs(s) <= L) {
            ASSERT_EQ(v, s);                       // (c), exact
        } else {
            ASSERT_LT(std::fabs(v), M);            // strict outside the linear region
        }
    }
    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 1.0);
    std::printf("[criterion 1] saturation axioms over 10000 randomized triples: pass "
                "(%.2fs)\n", elapsed);
}

TEST(Acceptance, Criterion2TrajectorySmoothness) {
    const auto start = Clock::now();
    TrajectoryParams params;  // section-IV constants are the defaults
    const double h = 1e-5;
    for (double t0 : {5.0 * 0.7, 4.0}) {  // u-ramp and alpha-ramp breakpoints
        for (int k = -10; k <= 10; ++k) {
            const double t = t0 + k * h;
            const ReferenceSample lo = reference_at(params, t - h);
            const ReferenceSample hi = reference_at(params, t + h);
            const ReferenceSample mid = reference_at(params, t);
            ASSERT_NEAR((hi.u_d - lo.u_d) / (2.0 * h), mid.du_d, 1e-6);
            ASSERT_NEAR((hi.alpha_d - lo.alpha_d) / (2.0 * h), mid.dalpha_d, 1e-6);
            ASSERT_NEAR((hi.w_d - lo.w_d) / (2.0 * h), mid.dw_d, 1e-6);
        }
    }
    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 1.0);
    std::printf("[criterion 2] reference profiles C1 across breakpoints: pass (%.2fs)\n",
                elapsed);
}

TEST(Acceptance, Criterion3IntegratorOracle) {
    const auto start = Clock::now();
    const auto rhs = [](double, const std::array<double, 2>& x) {
        return std::array<double, 2>{x[1], -x[0]};
    };
    const auto closure = [&rhs](std::size_t n) {
        const double dt = 2.0 * std::numbers::pi / static_cast<double>(n);
        std::array<double, 2> x{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) x = rk4_step(x, 0.0, dt, rhs);
        return std::hypot(x[0] - 1.0, x[1]);
    };
    const double err_1ms = closure(6284);  // dt ~ 1e-3
    EXPECT_LT(err_1ms, 1e-10);
    // Convergence order measured above the round-off floor.
    const double order = std::log2(closure(50) / closure(100));
    EXPECT_GE(order, 3.5);
    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 1.0);
    std::printf("[criterion 3] RK4 closes the harmonic orbit to %.2e, order %.2f: pass "
                "(%.2fs)\n", err_1ms, order, elapsed);
}

TEST(Acceptance, Criterion4HoverEquilibriumFixedPoint) {
    const auto start = Clock::now();
    RunConfig config;  // section-IV gains, analytic aero
    config.sim.t_end = 10.0;
    config.sim.initial = {0.0, 0.0, 90.0, 0.0};
    const AeroModel aero = config.make_aero_model();
    TransitionController controller(config.gains, config.allocation);
    const ReferenceFn zero_refs = [](double) { return ReferenceSample{}; };
    const RunResult result =
        run(config.make_sim_config(), zero_refs, controller, aero, config.physical);
    ASSERT_FALSE(result.aborted);

    double max_dev = 0.0;
    for (const SimRecord& r : result.records) {
        max_dev = std::max({max_dev, std::fabs(r.state.u), std::fabs(r.state.w),
                            std::fabs(r.state.theta - std::numbers::pi / 2.0),
                            std::fabs(r.state.q)});
        ASSERT_NEAR(r.control.thrust, 9.81, 1e-9);
        ASSERT_NEAR(r.control.epsilon, 0.0, 1e-10);
        ASSERT_NEAR(r.control.torque, 0.0, 1e-8);
    }
    EXPECT_LT(max_dev, 1e-9);
    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 5.0);
    std::printf("[criterion 4] hover fixed point drift %.2e over 10 s: pass (%.2fs)\n",
                max_dev, elapsed);
}

TEST(Acceptance, Criterion5HoverToCruiseReproduction) {
    const auto start = Clock::now();
    const RunConfig config = preset_hover_to_cruise();
    const RunResult result = run_preset(config);
    ASSERT_FALSE(result.aborted);
    const SimRecord& last = result.records.back();

    EXPECT_LT(std::fabs(last.state.u - 1.0), 0.02);
    EXPECT_LT(std::fabs(rad2deg(last.forces.alpha) - 6.0), 0.5);
    EXPECT_LT(rad2deg(result.summary.final_attitude_err), 1.0);
    EXPECT_LT(last.control.thrust, 0.7 * 9.81);
    EXPECT_LE(result.summary.max_abs_epsilon, 1.0);
    ASSERT_GE(result.summary.band_entry_time, 0.0) << "attitude band never held";
    EXPECT_EQ(result.summary.violations_after_band, 0u);

    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 10.0);
    std::printf("[criterion 5] hover->cruise: u=%.4f alpha=%.3f deg T=%.3f band@%.2fs "
                "violations=%zu: pass (%.2fs)\n",
                last.state.u, rad2deg(last.forces.alpha), last.control.thrust,
                result.summary.band_entry_time, result.summary.violations_after_band,
                elapsed);
}

TEST(Acceptance, Criterion6CruiseToHoverReproduction) {
    const auto start = Clock::now();
    const RunConfig config = preset_cruise_to_hover();
    const RunResult result = run_preset(config);
    ASSERT_FALSE(result.aborted);
    const SimRecord& last = result.records.back();

    EXPECT_LT(std::max(std::fabs(last.state.u), std::fabs(last.state.w)), 0.05);
    EXPECT_LT(std::fabs(rad2deg(last.state.theta) - 90.0), 1.0);
    EXPECT_NEAR(last.control.thrust, 9.81, 0.02 * 9.81);

    const double elapsed = seconds_since(start);
    EXPECT_LT(elapsed, 10.0);
    std::printf("[criterion 6] cruise->hover: u=%.2e w=%.2e theta=%.3f deg T=%.4f: pass "
                "(%.2fs)\n", last.state.u, last.state.w, rad2deg(last.state.theta),
                last.control.thrust, elapsed);
}

TEST(Acceptance, Criterion7ControlSmoothness) {
    for (const RunConfig& config : {preset_hover_to_cruise(), preset_cruise_to_hover()}) {
        const RunResult result = run_preset(config);
        ASSERT_FALSE(result.aborted);
        const double dt = config.sim.dt;
        EXPECT_LE(result.summary.max_thrust_step, kFrozenThrustRate * dt);
        EXPECT_LE(result.summary.max_torque_step, kFrozenTorqueRate * dt);
        EXPECT_EQ(result.summary.theta_d_jumps, 0u);
        std::printf("[criterion 7] %s: max |dT|=%.4f (cap %.4f), max |dtau|=%.3f "
                    "(cap %.3f): pass\n",
                    config.trajectory.direction == TransitionDirection::hover_to_cruise
                        ? "hover->cruise"
                        : "cruise->hover",
                    result.summary.max_thrust_step, kFrozenThrustRate * dt,
                    result.summary.max_torque_step, kFrozenTorqueRate * dt);
    }
}

TEST(Acceptance, Criterion8OptimalAoaOracle) {
    const auto start = Clock::now();
    const PolarTable table = default_polar_table();
    const double coarse = optimal_aoa_deg(table, table.min_alpha_deg(),
                                          table.max_alpha_deg(), 0.01);
    EXPECT_NEAR(coarse, 6.0, 0.01);

    // Independent brute-force sweep at 10x finer resolution.
    double best_alpha = table.min_alpha_deg();
    double best_ratio = -1e300;
    const double step = 0.001;
    const auto n = static_cast<std::size_t>(
        (table.max_alpha_deg() - table.min_alpha_deg()) / step);
    for (std::size_t i = 0; i <= n; ++i) {
        const double a =
            std::min(table.min_alpha_deg() + static_cast<double>(i) * step,
                     table.max_alpha_deg());
        const Coefficients c = table.coefficients(deg2rad(a));
        if (c.cl / c.cd > best_ratio) {
            best_ratio = c.cl / c.cd;
            best_alpha = a;
        }
    }
    EXPECT_NEAR(best_alpha, 6.0, 0.001);
    EXPECT_NEAR(coarse, best_alpha, 0.01);
    std::printf("[criterion 8] default polar L/D optimum at %.4f deg (fine sweep "
                "%.4f): pass (%.2fs)\n", coarse, best_alpha, seconds_since(start));
}

TEST(Acceptance, Criterion9Determinism) {
    for (const char* name : {"hover_to_cruise", "cruise_to_hover"}) {
        const RunConfig config = *preset_by_name(name);
        std::string csv[2];
        for (int pass = 0; pass < 2; ++pass) {
            const fs::path out = fs::path(::testing::TempDir()) /
                                 (std::string("determinism_") + name + char('a' + pass));
            ScenarioOptions options;
            options.out_dir = out.string();
            const ScenarioResult result = run_scenario(config, options);
            EXPECT_EQ(result.exit_code, 0) << result.message;
            csv[pass] = slurp(result.artifacts.timeseries_csv);
        }
        ASSERT_FALSE(csv[0].empty());
        EXPECT_EQ(csv[0], csv[1]);
        std::printf("[criterion 9] %s: consecutive runs byte-identical: pass\n", name);
    }
}

}  // namespace
}  // namespace tailsim
