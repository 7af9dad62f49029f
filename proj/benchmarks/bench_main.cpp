#include <benchmark/benchmark.h>

#include "tailsim/config.hpp"
#include "tailsim/dynamics.hpp"
#include "tailsim/scenario.hpp"
#include "tailsim/sim.hpp"

namespace {

using namespace tailsim;

AeroModel analytic_aero() {
    AeroModel model;
    model.wing_area = 68.674;
    model.provider = AnalyticPolar{};
    return model;
}

void BM_DynamicsRhs(benchmark::State& state) {
    const AeroModel aero = analytic_aero();
    const PhysicalParams params;
    const VehicleState vehicle{0.8, 0.08, 0.4, 0.05};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dynamics_rhs(vehicle, 3.0, 0.1, aero, params));
    }
}
BENCHMARK(BM_DynamicsRhs);

void BM_PolarTableLookup(benchmark::State& state) {
    const PolarTable table = default_polar_table();
    double alpha = -0.17;
    for (auto _ : state) {
        alpha += 1e-4;
        if (alpha > 1.5) alpha = -0.17;
        benchmark::DoNotOptimize(table.coefficients(alpha));
    }
}
BENCHMARK(BM_PolarTableLookup);

void BM_ControllerStep(benchmark::State& state) {
    const AeroModel aero = analytic_aero();
    const PhysicalParams params;
    TransitionController controller{ControllerGains{}};
    const VehicleState vehicle{0.8, 0.08, 0.4, 0.05};
    TrajectoryParams traj;
    const ReferenceSample ref = reference_at(traj, 12.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(controller.step(vehicle, ref, aero, params, 1e-3));
    }
}
BENCHMARK(BM_ControllerStep);

void BM_Rk4Step(benchmark::State& state) {
    const AeroModel aero = analytic_aero();
    const PhysicalParams params;
    VehicleState vehicle{0.8, 0.08, 0.4, 0.05};
    for (auto _ : state) {
        vehicle = step(vehicle, 9.0, 0.01, aero, params, 1e-3, IntegratorKind::rk4);
        benchmark::DoNotOptimize(vehicle);
        vehicle.u = 0.8;  // keep the state from drifting off
        vehicle.w = 0.08;
        vehicle.theta = 0.4;
        vehicle.q = 0.05;
    }
}
BENCHMARK(BM_Rk4Step);

void BM_HoverToCruiseRun(benchmark::State& state) {
    const RunConfig config = preset_hover_to_cruise();
    const AeroModel aero = config.make_aero_model();
    const SimConfig sim_config = config.make_sim_config();
    const TrajectoryParams traj = config.trajectory;
    const ReferenceFn refs = [traj](double t) { return reference_at(traj, t); };
    for (auto _ : state) {
        TransitionController controller(config.gains, config.allocation);
        benchmark::DoNotOptimize(run(sim_config, refs, controller, aero, config.physical));
    }
}
BENCHMARK(BM_HoverToCruiseRun)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    return 0;
}
