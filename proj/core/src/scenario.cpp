#include "tailsim/scenario.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "tailsim/angles.hpp"

namespace tailsim {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

// Write-then-rename so readers never see a partial file.
void write_atomic(const fs::path& target, const std::string& content) {
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::runtime_error("rename failed for " + target.string() + ": " +
                                 ec.message());
    }
}

std::string timeseries_content(const std::vector<SimRecord>& records, int decimation) {
    std::string out = timeseries_header();
    out += '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i % static_cast<std::size_t>(decimation) != 0) continue;
        const SimRecord& r = records[i];
        const int flags = (r.control.thrust_clamped ? 1 : 0) |
                          (r.lyapunov_violation ? 2 : 0);
        out += fmt(r.t);
        out += ',';
        out += fmt(r.state.u);
        out += ',';
        out += fmt(r.state.w);
        out += ',';
        out += fmt(r.state.theta);
        out += ',';
        out += fmt(r.state.q);
        out += ',';
        out += fmt(r.ref.u_d);
        out += ',';
        out += fmt(r.ref.w_d);
        out += ',';
        out += fmt(r.ref.alpha_d);
        out += ',';
        out += fmt(r.control.theta_d);
        out += ',';
        out += fmt(r.control.q_d);
        out += ',';
        out += fmt(r.control.thrust);
        out += ',';
        out += fmt(r.control.torque);
        out += ',';
        out += fmt(r.control.allocation.t1);
        out += ',';
        out += fmt(r.control.allocation.t2);
        out += ',';
        out += fmt(r.control.epsilon);
        out += ',';
        out += fmt(r.forces.lift);
        out += ',';
        out += fmt(r.forces.drag);
        out += ',';
        out += fmt(r.forces.alpha);
        out += ',';
        out += fmt(r.forces.airspeed);
        out += ',';
        out += fmt(r.v_lyap);
        out += ',';
        out += std::to_string(flags);
        out += '\n';
    }
    return out;
}

std::string plot_attitude_content(const std::vector<SimRecord>& records, int decimation) {
    std::string out = "t,theta,theta_d,alpha,alpha_d,tau\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i % static_cast<std::size_t>(decimation) != 0) continue;
        const SimRecord& r = records[i];
        out += fmt(r.t) + ',' + fmt(r.state.theta) + ',' + fmt(r.control.theta_d) + ',' +
               fmt(r.forces.alpha) + ',' + fmt(r.ref.alpha_d) + ',' +
               fmt(r.control.torque) + '\n';
    }
    return out;
}

std::string plot_velocity_content(const std::vector<SimRecord>& records, int decimation) {
    std::string out = "t,u,u_d,w,w_d,T\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i % static_cast<std::size_t>(decimation) != 0) continue;
        const SimRecord& r = records[i];
        out += fmt(r.t) + ',' + fmt(r.state.u) + ',' + fmt(r.ref.u_d) + ',' +
               fmt(r.state.w) + ',' + fmt(r.ref.w_d) + ',' + fmt(r.control.thrust) + '\n';
    }
    return out;
}

std::string summary_content(const RunConfig& config, const RunResult& result,
                            const std::vector<std::string>& failures) {
    const RunSummary& s = result.summary;
    std::ostringstream out;
    out << "scenario: "
        << (config.trajectory.direction == TransitionDirection::hover_to_cruise
                ? "hover_to_cruise"
                : "cruise_to_hover")
        << '\n';
    out << "steps: " << s.steps << '\n';
    out << "final_u_err: " << fmt(s.final_u_err) << '\n';
    out << "final_w_err: " << fmt(s.final_w_err) << '\n';
    out << "final_attitude_err_rad: " << fmt(s.final_attitude_err) << '\n';
    out << "settle_time_u: " << fmt(s.settle_time_u) << '\n';
    out << "settle_time_w: " << fmt(s.settle_time_w) << '\n';
    out << "settle_time_theta: " << fmt(s.settle_time_theta) << '\n';
    out << "max_abs_epsilon: " << fmt(s.max_abs_epsilon) << '\n';
    out << "min_thrust: " << fmt(s.min_thrust) << '\n';
    out << "max_thrust: " << fmt(s.max_thrust) << '\n';
    out << "max_thrust_step: " << fmt(s.max_thrust_step) << '\n';
    out << "max_torque_step: " << fmt(s.max_torque_step) << '\n';
    out << "max_theta_d_step: " << fmt(s.max_theta_d_step) << '\n';
    out << "theta_d_jumps: " << s.theta_d_jumps << '\n';
    out << "thrust_clamp_events: " << s.thrust_clamp_events << '\n';
    out << "monitor_violations: " << s.monitor_violations << '\n';
    out << "violations_after_band: " << s.violations_after_band << '\n';
    out << "band_entry_time: " << fmt(s.band_entry_time) << '\n';
    out << "aborted: " << (result.aborted ? "true" : "false") << '\n';
    if (result.aborted) out << "abort_reason: " << result.abort_reason << '\n';
    out << "checks: " << (failures.empty() && !result.aborted ? "pass" : "fail") << '\n';
    for (const std::string& f : failures) out << "check_failed: " << f << '\n';
    return out.str();
}

std::vector<std::string> evaluate_checks(const ChecksSection& checks,
                                         const RunResult& result) {
    std::vector<std::string> failures;
    if (result.records.empty()) {
        failures.push_back("no records produced");
        return failures;
    }
    const RunSummary& s = result.summary;
    const SimRecord& last = result.records.back();

    const auto band = [&failures](const char* name, double value,
                                  const std::optional<BandCheck>& check) {
        if (!check) return;
        if (std::fabs(value - check->target) > check->tol) {
            std::ostringstream msg;
            msg << name << " = " << value << " not within " << check->tol << " of "
                << check->target;
            failures.push_back(msg.str());
        }
    };
    band("final_u", last.state.u, checks.final_u);
    band("final_w", last.state.w, checks.final_w);
    band("final_alpha_deg", rad2deg(last.forces.alpha), checks.final_alpha_deg);
    band("final_theta_deg", rad2deg(last.state.theta), checks.final_theta_deg);
    band("final_thrust", last.control.thrust, checks.final_thrust);

    const auto cap = [&failures](const char* name, double value, double limit) {
        if (value > limit) {
            std::ostringstream msg;
            msg << name << " = " << value << " exceeds " << limit;
            failures.push_back(msg.str());
        }
    };
    if (checks.final_thrust_max) cap("final_thrust", last.control.thrust, *checks.final_thrust_max);
    if (checks.final_attitude_error_deg) {
        cap("final_attitude_error_deg", rad2deg(s.final_attitude_err),
            *checks.final_attitude_error_deg);
    }
    if (checks.max_abs_epsilon) cap("max_abs_epsilon", s.max_abs_epsilon, *checks.max_abs_epsilon);
    if (checks.max_thrust_step) cap("max_thrust_step", s.max_thrust_step, *checks.max_thrust_step);
    if (checks.max_torque_step) cap("max_torque_step", s.max_torque_step, *checks.max_torque_step);

    if (s.theta_d_jumps > 0) {
        failures.push_back("theta_d jumped more than the configured per-step limit " +
                           std::to_string(s.theta_d_jumps) + " time(s)");
    }
    if (checks.require_zero_violations_after_band) {
        if (s.band_entry_time < 0.0) {
            failures.push_back("attitude band never entered and held");
        } else if (s.violations_after_band > 0) {
            failures.push_back(std::to_string(s.violations_after_band) +
                               " Lyapunov violation(s) after the attitude transient");
        }
    }
    return failures;
}

}  // namespace

std::string timeseries_header() {
    return "t,u,w,theta,q,u_d,w_d,alpha_d,theta_d,q_d,T,tau,T1,T2,eps,L,D,alpha,V,"
           "V_lyap,flags";
}

ScenarioResult run_scenario(const RunConfig& config, const ScenarioOptions& options) {
    const AeroModel aero = config.make_aero_model();
    const SimConfig sim_config = config.make_sim_config();
    TransitionController controller(config.gains, config.allocation);
    const TrajectoryParams traj = config.trajectory;
    const ReferenceFn refs = [traj](double t) { return reference_at(traj, t); };

    RunResult result = run(sim_config, refs, controller, aero, config.physical);

    const fs::path out_dir = options.out_dir ? *options.out_dir : config.output.out_dir;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + out_dir.string() +
                                 ": " + ec.message());
    }

    const int decimation = options.full_rate ? 1 : config.output.decimation;
    ScenarioResult out;
    out.artifacts.timeseries_csv = (out_dir / "timeseries.csv").string();
    write_atomic(out.artifacts.timeseries_csv,
                 timeseries_content(result.records, decimation));
    out.artifacts.resolved_config_json = (out_dir / "resolved_config.json").string();
    write_atomic(out.artifacts.resolved_config_json, resolved_json(config).dump(2) + "\n");
    if (config.output.plots) {
        fs::create_directories(out_dir / "plots", ec);
        if (ec) {
            throw std::runtime_error("cannot create plots directory: " + ec.message());
        }
        const std::string attitude = (out_dir / "plots" / "attitude.csv").string();
        const std::string velocity = (out_dir / "plots" / "velocity_thrust.csv").string();
        write_atomic(attitude, plot_attitude_content(result.records, decimation));
        write_atomic(velocity, plot_velocity_content(result.records, decimation));
        out.artifacts.plot_csvs = {attitude, velocity};
    }

    std::vector<std::string> failures;
    if (!result.aborted) failures = evaluate_checks(config.checks, result);
    out.artifacts.summary_txt = (out_dir / "summary.txt").string();
    write_atomic(out.artifacts.summary_txt, summary_content(config, result, failures));

    out.summary = result.summary;
    if (result.aborted) {
        out.exit_code = 3;
        out.message = "simulation aborted: " + result.abort_reason;
    } else if (!failures.empty()) {
        out.exit_code = 1;
        std::string msg = "checks failed:";
        for (const std::string& f : failures) msg += "\n  " + f;
        out.message = msg;
    } else {
        out.exit_code = 0;
        out.message = "pass";
    }
    return out;
}

}  // namespace tailsim
