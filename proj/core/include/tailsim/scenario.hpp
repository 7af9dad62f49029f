#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tailsim/config.hpp"
#include "tailsim/sim.hpp"

namespace tailsim {

struct ScenarioOptions {
    std::optional<std::string> out_dir;  // overrides config.output.out_dir
    bool full_rate = false;              // ignore the decimation setting
};

struct ScenarioArtifacts {
    std::string timeseries_csv;
    std::string summary_txt;
    std::string resolved_config_json;
    std::vector<std::string> plot_csvs;
};

struct ScenarioResult {
    int exit_code = 0;  // 0 pass, 1 checks failed, 3 runtime fault (aborted run)
    std::string message;
    RunSummary summary;
    ScenarioArtifacts artifacts;
};

/// Run one configured scenario and write timeseries.csv, summary.txt,
/// resolved_config.json and the plot splits into the output directory.
/// Files are written to a temp name and renamed, so a failed run leaves no
/// partial artifacts. Throws ConfigError for bad configs and
/// std::runtime_error for I/O failures.
ScenarioResult run_scenario(const RunConfig& config, const ScenarioOptions& options = {});

/// Exact column order of timeseries.csv.
std::string timeseries_header();

}  // namespace tailsim
