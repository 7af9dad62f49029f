#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tailsim/aero.hpp"
#include "tailsim/controller.hpp"
#include "tailsim/sim.hpp"
#include "tailsim/trajectory.hpp"

namespace tailsim {

/// Configuration problems: parse errors (with line info from the JSON
/// parser), unknown keys, out-of-range values. The message carries the
/// field path and the legal range.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config sections mirror the file exactly (angles in degrees there);
/// conversion to engine units happens only in the make_* helpers so a
/// resolved-config echo reparses to bit-identical values.

struct AeroSection {
    double rho = 1.225;
    std::optional<double> wing_area;  // S (m^2); exclusive with k_aero
    std::optional<double> k_aero;     // K = rho*S/2 (1/m)
    std::string provider = "analytic";  // "analytic" | "table"
    AnalyticPolar analytic{};
    std::optional<std::string> polar_csv;  // table source; built-in table if unset
    double coverage_min_deg = -10.0;
    double coverage_max_deg = 90.0;
    bool check_coverage = true;

    double resolved_wing_area() const;
};

struct InitialSection {
    double u = 0.0;
    double w = 0.0;
    double theta_deg = 90.0;
    double q = 0.0;
};

struct MonitorSection {
    double attitude_threshold_deg = 5.0;
    double band_threshold_deg = 5.0;
    double lyap_rel_tol = 1e-6;
    double theta_d_jump_max = 0.2;  // rad per step

    MonitorParams to_params() const;
};

struct SimSection {
    double dt = 1e-3;
    double t_end = 60.0;
    std::string integrator = "rk4";  // "rk4" | "euler"
    InitialSection initial{};
    MonitorSection monitor{};
};

struct OutputSection {
    std::string out_dir = "out";
    int decimation = 10;  // log every Nth record
    bool plots = true;    // per-figure CSV splits
};

struct BandCheck {
    double target = 0.0;
    double tol = 0.0;
};

/// Optional pass/fail gates evaluated by run_scenario after a run.
struct ChecksSection {
    std::optional<BandCheck> final_u;
    std::optional<BandCheck> final_w;
    std::optional<BandCheck> final_alpha_deg;
    std::optional<BandCheck> final_theta_deg;
    std::optional<BandCheck> final_thrust;
    std::optional<double> final_thrust_max;
    std::optional<double> final_attitude_error_deg;
    std::optional<double> max_abs_epsilon;
    std::optional<double> max_thrust_step;   // per control period
    std::optional<double> max_torque_step;
    bool require_zero_violations_after_band = true;
};

struct RunConfig {
    PhysicalParams physical{};
    AeroSection aero{};
    TrajectoryParams trajectory{};  // direction comes from sim.scenario
    ControllerGains gains{};
    AllocationConfig allocation{};
    SimSection sim{};
    OutputSection output{};
    ChecksSection checks{};

    /// Resolve the aero section into a model (loads and validates the polar
    /// file when one is configured).
    AeroModel make_aero_model() const;
    SimConfig make_sim_config() const;
};

/// Load and validate a config file. A file with only whitespace yields the
/// documented defaults. Unknown keys are rejected.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j, const std::string& origin = "<memory>");

/// Every field, defaults applied, suitable for byte-exact re-runs.
nlohmann::json resolved_json(const RunConfig& config);

/// The two bundled experiment setups (also shipped as files under presets/).
RunConfig preset_hover_to_cruise();
RunConfig preset_cruise_to_hover();
std::optional<RunConfig> preset_by_name(const std::string& name);

}  // namespace tailsim
