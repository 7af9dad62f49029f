#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tailsim/angles.hpp"
#include "tailsim/controller.hpp"
#include "tailsim/dynamics.hpp"

namespace tailsim {

enum class IntegratorKind {
    rk4,
    euler,
};

/// Lyapunov-monitor settings. Decrease of V = (u-u_d)^2/2 + (w-w_d)^2/2 is
/// only meaningful while the attitude loop tracks (time-scale separation),
/// so pairs are checked only below attitude_threshold and with both
/// translational saturations in their linear regions.
struct MonitorParams {
    double attitude_threshold = deg2rad(5.0);  // rad; gate for checking a pair
    double band_threshold = deg2rad(5.0);      // rad; defines "transient over"
    double lyap_rel_tol = 1e-6;                // tol = lyap_rel_tol * (1 + V)
    double theta_d_jump_max = 0.2;             // rad per step

    bool valid() const {
        return attitude_threshold > 0.0 && band_threshold > 0.0 &&
               lyap_rel_tol > 0.0 && theta_d_jump_max > 0.0;
    }
};

struct SimConfig {
    double dt = 1e-3;   // s
    double t_end = 60.0;
    IntegratorKind integrator = IntegratorKind::rk4;
    VehicleState initial{};
    MonitorParams monitor{};

    bool valid() const {
        return dt > 0.0 && dt <= 0.01 && t_end > 0.0 && initial.finite() &&
               initial.theta >= 0.0 && initial.theta <= std::numbers::pi &&
               monitor.valid();
    }
};

/// One log row per control period.
struct SimRecord {
    double t = 0.0;
    VehicleState state;
    ReferenceSample ref;
    ControlInput control;
    ForceSet forces;
    double v_lyap = 0.0;
    bool lyapunov_violation = false;  // filled by the monitor pass
};

struct MonitorReport {
    std::vector<double> violation_times;
    std::size_t violations_after_band = 0;
    double band_entry_time = -1.0;  // -1 when the band is never entered-and-held
    double max_theta_d_step = 0.0;  // rad, largest per-step reference jump
    std::size_t theta_d_jumps = 0;  // steps exceeding theta_d_jump_max
};

struct RunSummary {
    double final_u_err = 0.0;        // |u - u_d| at t_end
    double final_w_err = 0.0;
    double final_attitude_err = 0.0; // |theta - theta_d| at t_end (rad)
    double settle_time_u = -1.0;     // earliest t after which the error stays
    double settle_time_w = -1.0;     // inside the 2% band; -1 if never
    double settle_time_theta = -1.0;
    double max_abs_epsilon = 0.0;
    double min_thrust = 0.0;
    double max_thrust = 0.0;
    double max_thrust_step = 0.0;    // max |T(t+dt) - T(t)|
    double max_torque_step = 0.0;
    double max_theta_d_step = 0.0;
    std::size_t thrust_clamp_events = 0;
    std::size_t monitor_violations = 0;
    std::size_t violations_after_band = 0;
    std::size_t theta_d_jumps = 0;
    double band_entry_time = -1.0;
    std::size_t steps = 0;
};

struct RunResult {
    std::vector<SimRecord> records;
    RunSummary summary;
    bool aborted = false;
    std::string abort_reason;
};

using ReferenceFn = std::function<ReferenceSample(double)>;

/// Advance the vehicle one fixed step with the control held constant across
/// substages (zero-order hold).
VehicleState step(const VehicleState& state, double thrust, double torque,
                  const AeroModel& aero, const PhysicalParams& params, double dt,
                  IntegratorKind kind);

/// Sample -> control -> integrate loop over t in [0, t_end]. Deterministic:
/// identical inputs produce bit-identical records. A non-finite state stops
/// the run at the last good record (result.aborted). t_end == 0 is the
/// degenerate case: no records, summary over the initial state only.
RunResult run(const SimConfig& config, const ReferenceFn& reference,
              TransitionController& controller, const AeroModel& aero,
              const PhysicalParams& params);

/// Flag every consecutive pair where V increases beyond tolerance while the
/// attitude error is below threshold and sigma1/sigma3 are linear. The gains
/// supply those linear limits.
MonitorReport lyapunov_monitor(std::span<const SimRecord> records,
                               const MonitorParams& params,
                               const ControllerGains& gains);

RunSummary summarize(std::span<const SimRecord> records, const MonitorReport& monitor);

}  // namespace tailsim
