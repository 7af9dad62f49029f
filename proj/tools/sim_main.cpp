#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "tailsim/aero.hpp"
#include "tailsim/config.hpp"
#include "tailsim/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeFault = 3;

int cmd_run(const std::string& config_path, const std::string& preset,
            const std::string& out_dir, bool full_rate) {
    tailsim::RunConfig config;
    if (!preset.empty() && !config_path.empty()) {
        std::fprintf(stderr, "error: give a config file or --preset, not both\n");
        return kExitConfigError;
    }
    if (!preset.empty()) {
        const auto p = tailsim::preset_by_name(preset);
        if (!p) {
            std::fprintf(stderr,
                         "error: unknown preset '%s' (expected hover_to_cruise or "
                         "cruise_to_hover)\n",
                         preset.c_str());
            return kExitConfigError;
        }
        config = *p;
    } else if (!config_path.empty()) {
        config = tailsim::load_config(config_path);
    } else {
        std::fprintf(stderr, "error: need a config file or --preset\n");
        return kExitConfigError;
    }

    tailsim::ScenarioOptions options;
    if (!out_dir.empty()) options.out_dir = out_dir;
    options.full_rate = full_rate;

    const tailsim::ScenarioResult result = tailsim::run_scenario(config, options);
    std::printf("%s\n", result.message.c_str());
    std::printf("timeseries: %s\n", result.artifacts.timeseries_csv.c_str());
    std::printf("summary:    %s\n", result.artifacts.summary_txt.c_str());
    return result.exit_code;
}

int cmd_polar_check(const std::string& path) {
    const tailsim::PolarTable table = tailsim::PolarTable::from_csv_file(path);
    std::printf("ok: %zu rows, alpha in [%g, %g] deg\n", table.rows().size(),
                table.min_alpha_deg(), table.max_alpha_deg());
    return kExitPass;
}

int cmd_polar_optimum(const std::string& path, double resolution_deg) {
    const tailsim::PolarTable table = tailsim::PolarTable::from_csv_file(path);
    const double lo = table.min_alpha_deg();
    const double hi = table.max_alpha_deg();
    const double best = tailsim::optimal_aoa_deg(table, lo, hi, resolution_deg);
    std::printf("optimal alpha: %.4f deg (searched [%g, %g] deg at %g deg)\n", best, lo,
                hi, resolution_deg);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar tail-sitter transition simulator"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Run a scenario and write CSV artifacts");
    std::string config_path;
    std::string preset;
    std::string out_dir;
    bool full_rate = false;
    bool seedless = true;
    run_cmd->add_option("config", config_path, "JSON config file");
    run_cmd->add_option("--preset", preset,
                        "Built-in preset: hover_to_cruise | cruise_to_hover");
    run_cmd->add_option("--out", out_dir, "Output directory (overrides the config)");
    run_cmd->add_flag("--full-rate", full_rate, "Log every step instead of decimating");
    run_cmd->add_flag("--seedless-deterministic", seedless,
                      "Deterministic batch mode (default; the only mode)");

    auto* polar_cmd = app.add_subcommand("polar", "Polar table utilities");
    polar_cmd->require_subcommand(1);
    auto* check_cmd = polar_cmd->add_subcommand("check", "Validate a polar CSV file");
    std::string check_path;
    check_cmd->add_option("csv", check_path, "Polar CSV file")->required();
    auto* optimum_cmd =
        polar_cmd->add_subcommand("optimum", "Print the best lift-to-drag AoA");
    std::string optimum_path;
    double resolution_deg = 0.01;
    optimum_cmd->add_option("csv", optimum_path, "Polar CSV file")->required();
    optimum_cmd->add_option("--resolution", resolution_deg, "Grid step in degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, preset, out_dir, full_rate);
        if (check_cmd->parsed()) return cmd_polar_check(check_path);
        if (optimum_cmd->parsed()) return cmd_polar_optimum(optimum_path, resolution_deg);
        return kExitConfigError;
    } catch (const tailsim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const tailsim::PolarError& e) {
        std::fprintf(stderr, "polar error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime fault: %s\n", e.what());
        return kExitRuntimeFault;
    }
}
