#include "tailsim/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tailsim/integrate.hpp"

namespace tailsim {

namespace {

SimRecord make_record(double t, const VehicleState& state, const ReferenceSample& ref,
                      const ControlInput& control, const AeroModel& aero,
                      const PhysicalParams& params) {
    SimRecord r;
    r.t = t;
    r.state = state;
    r.ref = ref;
    r.control = control;
    r.forces = evaluate_forces(state, aero, params);
    r.forces.thrust = control.thrust;
    const double eu = state.u - ref.u_d;
    const double ew = state.w - ref.w_d;
    r.v_lyap = 0.5 * eu * eu + 0.5 * ew * ew;
    return r;
}

// Earliest time after which pred holds for every record through the end.
template <class Pred>
double held_from(std::span<const SimRecord> records, Pred&& pred) {
    double entry = -1.0;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (!pred(*it)) break;
        entry = it->t;
    }
    return entry;
}

double settle_time(std::span<const SimRecord> records, double scale,
                   double (*err)(const SimRecord&)) {
    if (records.empty()) return -1.0;
    const double band = 0.02 * std::max(scale, 1e-3);
    double entry = -1.0;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (std::fabs(err(*it)) > band) break;
        entry = it->t;
    }
    return entry;
}

}  // namespace

VehicleState step(const VehicleState& state, double thrust, double torque,
                  const AeroModel& aero, const PhysicalParams& params, double dt,
                  IntegratorKind kind) {
    const std::array<double, 4> x{state.u, state.w, state.theta, state.q};
    // Control held constant across substages (zero-order hold).
    const auto rhs = [&](double, const std::array<double, 4>& y) {
        const VehicleState s{y[0], y[1], y[2], y[3]};
        const StateRates r = dynamics_rhs(s, thrust, torque, aero, params);
        return std::array<double, 4>{r.du, r.dw, r.dtheta, r.dq};
    };
    const std::array<double, 4> next = kind == IntegratorKind::rk4
                                           ? rk4_step(x, 0.0, dt, rhs)
                                           : euler_step(x, 0.0, dt, rhs);
    return VehicleState{next[0], next[1], next[2], next[3]};
}

RunResult run(const SimConfig& config, const ReferenceFn& reference,
              TransitionController& controller, const AeroModel& aero,
              const PhysicalParams& params) {
    if (!(config.dt > 0.0) || !config.initial.finite() || config.t_end < 0.0) {
        throw std::invalid_argument("run: need dt > 0, t_end >= 0 and a finite state");
    }
    RunResult result;
    VehicleState state = config.initial;
    state.theta = wrap_pi(state.theta);

    const auto n = static_cast<std::size_t>(std::llround(config.t_end / config.dt));
    if (n == 0) {
        // Degenerate duration: no records; summarize the initial state.
        const ReferenceSample ref = reference(0.0);
        const ControlInput control = controller.step(state, ref, aero, params, config.dt);
        const SimRecord r0 = make_record(0.0, state, ref, control, aero, params);
        result.summary = summarize({&r0, 1}, MonitorReport{});
        return result;
    }

    result.records.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * config.dt;
        const ReferenceSample ref = reference(t);
        VehicleState next;
        try {
            const ForceSet forces = evaluate_forces(state, aero, params);
            if (!std::isfinite(forces.lift) || !std::isfinite(forces.drag)) {
                result.aborted = true;
                result.abort_reason =
                    "non-finite aerodynamic forces at t=" + std::to_string(t);
                break;
            }
            const ControlInput control =
                controller.step(state, ref, aero, params, config.dt);
            result.records.push_back(make_record(t, state, ref, control, aero, params));
            if (i == n) break;
            next = step(state, control.thrust, control.torque, aero, params, config.dt,
                        config.integrator);
        } catch (const std::out_of_range& e) {
            // Polar queried outside its sampled range mid-run.
            result.aborted = true;
            result.abort_reason = e.what();
            break;
        } catch (const std::invalid_argument& e) {
            result.aborted = true;
            result.abort_reason = e.what();
            break;
        }
        if (!next.finite()) {
            result.aborted = true;
            result.abort_reason = "non-finite state after step at t=" + std::to_string(t);
            break;
        }
        next.theta = wrap_pi(next.theta);
        state = next;
    }

    const MonitorReport monitor =
        lyapunov_monitor(result.records, config.monitor, controller.gains());
    // Mark the later record of each violating pair.
    std::size_t vi = 0;
    for (SimRecord& r : result.records) {
        while (vi < monitor.violation_times.size() && monitor.violation_times[vi] < r.t) {
            ++vi;
        }
        if (vi < monitor.violation_times.size() && monitor.violation_times[vi] == r.t) {
            r.lyapunov_violation = true;
            ++vi;
        }
    }
    result.summary = summarize(result.records, monitor);
    return result;
}

MonitorReport lyapunov_monitor(std::span<const SimRecord> records,
                               const MonitorParams& params,
                               const ControllerGains& gains) {
    MonitorReport report;
    if (records.empty()) return report;

    report.band_entry_time = held_from(records, [&](const SimRecord& r) {
        return std::fabs(r.state.theta - r.control.theta_d) < params.band_threshold;
    });

    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const SimRecord& a = records[i];
        const SimRecord& b = records[i + 1];
        const double dtheta_d = std::fabs(b.control.theta_d - a.control.theta_d);
        report.max_theta_d_step = std::max(report.max_theta_d_step, dtheta_d);
        if (dtheta_d > params.theta_d_jump_max) ++report.theta_d_jumps;

        const bool attitude_ok =
            std::fabs(a.state.theta - a.control.theta_d) < params.attitude_threshold;
        const bool sats_linear =
            std::fabs(a.state.u - a.ref.u_d) <= gains.sigma3.linear_limit &&
            std::fabs(a.state.w - a.ref.w_d) <= gains.sigma1.linear_limit;
        if (!attitude_ok || !sats_linear) continue;

        const double tol = params.lyap_rel_tol * (1.0 + a.v_lyap);
        if (b.v_lyap > a.v_lyap + tol) {
            report.violation_times.push_back(b.t);
            if (report.band_entry_time >= 0.0 && b.t >= report.band_entry_time) {
                ++report.violations_after_band;
            }
        }
    }
    return report;
}

RunSummary summarize(std::span<const SimRecord> records, const MonitorReport& monitor) {
    RunSummary s;
    if (records.empty()) return s;

    const SimRecord& last = records.back();
    s.final_u_err = std::fabs(last.state.u - last.ref.u_d);
    s.final_w_err = std::fabs(last.state.w - last.ref.w_d);
    s.final_attitude_err = std::fabs(last.state.theta - last.control.theta_d);
    s.steps = records.size() - 1;

    s.min_thrust = s.max_thrust = records.front().control.thrust;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SimRecord& r = records[i];
        s.max_abs_epsilon = std::max(s.max_abs_epsilon, std::fabs(r.control.epsilon));
        s.min_thrust = std::min(s.min_thrust, r.control.thrust);
        s.max_thrust = std::max(s.max_thrust, r.control.thrust);
        if (r.control.thrust_clamped) ++s.thrust_clamp_events;
        if (i + 1 < records.size()) {
            const SimRecord& b = records[i + 1];
            s.max_thrust_step =
                std::max(s.max_thrust_step, std::fabs(b.control.thrust - r.control.thrust));
            s.max_torque_step =
                std::max(s.max_torque_step, std::fabs(b.control.torque - r.control.torque));
        }
    }

    // 2% settling bands, scaled by the total reference excursion.
    const SimRecord& first = records.front();
    s.settle_time_u = settle_time(records, std::fabs(last.ref.u_d - first.ref.u_d),
                                  [](const SimRecord& r) { return r.state.u - r.ref.u_d; });
    s.settle_time_w = settle_time(records, std::fabs(last.ref.w_d - first.ref.w_d),
                                  [](const SimRecord& r) { return r.state.w - r.ref.w_d; });
    s.settle_time_theta =
        settle_time(records, std::fabs(last.control.theta_d - first.control.theta_d),
                    [](const SimRecord& r) { return r.state.theta - r.control.theta_d; });

    s.monitor_violations = monitor.violation_times.size();
    s.violations_after_band = monitor.violations_after_band;
    s.band_entry_time = monitor.band_entry_time;
    s.max_theta_d_step = monitor.max_theta_d_step;
    s.theta_d_jumps = monitor.theta_d_jumps;
    return s;
}

}  // namespace tailsim
