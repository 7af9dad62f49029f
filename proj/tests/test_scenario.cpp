#include "tailsim/scenario.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace tailsim {
namespace {

namespace fs = std::filesystem;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunConfig quick_config() {
    RunConfig c;  // defaults: hover-to-cruise profile
    c.sim.t_end = 0.5;
    c.sim.initial = {0.18, 0.03, 80.0, 0.0};
    c.checks.require_zero_violations_after_band = false;  // too short to settle
    return c;
}

fs::path temp_dir(const std::string& name) {
    return fs::path(::testing::TempDir()) / name;
}

TEST(Scenario, WritesSchemaStableTimeseries) {
    EXPECT_STREQ(timeseries_header().c_str(),
                 "t,u,w,theta,q,u_d,w_d,alpha_d,theta_d,q_d,T,tau,T1,T2,eps,L,D,alpha,"
                 "V,V_lyap,flags");
    RunConfig config = quick_config();
    const fs::path out = temp_dir("scenario_schema");
    ScenarioOptions options;
    options.out_dir = out.string();
    const ScenarioResult result = run_scenario(config, options);
    EXPECT_EQ(result.exit_code, 0) << result.message;

    const std::string csv = slurp(result.artifacts.timeseries_csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), timeseries_header());
    // 501 records decimated by 10: rows 0, 10, ..., 500.
    const auto lines = std::count(csv.begin(), csv.end(), '\n');
    EXPECT_EQ(lines, 1 + 51);
    EXPECT_TRUE(fs::exists(result.artifacts.summary_txt));
    EXPECT_TRUE(fs::exists(result.artifacts.resolved_config_json));
    ASSERT_EQ(result.artifacts.plot_csvs.size(), 2u);
    const std::string attitude = slurp(result.artifacts.plot_csvs[0]);
    EXPECT_EQ(attitude.substr(0, attitude.find('\n')), "t,theta,theta_d,alpha,alpha_d,tau");
    const std::string velocity = slurp(result.artifacts.plot_csvs[1]);
    EXPECT_EQ(velocity.substr(0, velocity.find('\n')), "t,u,u_d,w,w_d,T");
}

TEST(Scenario, FullRateLogsEveryStep) {
    RunConfig config = quick_config();
    const fs::path out = temp_dir("scenario_fullrate");
    ScenarioOptions options;
    options.out_dir = out.string();
    options.full_rate = true;
    const ScenarioResult result = run_scenario(config, options);
    const std::string csv = slurp(result.artifacts.timeseries_csv);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 501);
}

TEST(Scenario, RerunFromResolvedConfigIsByteIdentical) {
    RunConfig config = quick_config();
    const fs::path out_a = temp_dir("scenario_echo_a");
    ScenarioOptions options_a;
    options_a.out_dir = out_a.string();
    const ScenarioResult first = run_scenario(config, options_a);

    const RunConfig echoed = load_config(first.artifacts.resolved_config_json);
    const fs::path out_b = temp_dir("scenario_echo_b");
    ScenarioOptions options_b;
    options_b.out_dir = out_b.string();
    const ScenarioResult second = run_scenario(echoed, options_b);

    EXPECT_EQ(slurp(first.artifacts.timeseries_csv), slurp(second.artifacts.timeseries_csv));
}

TEST(Scenario, UnwritableOutputLeavesNoPartialFiles) {
    // A path below a regular file can never become a directory.
    const fs::path blocker = temp_dir("scenario_blocker");
    std::ofstream(blocker).put('x');
    RunConfig config = quick_config();
    ScenarioOptions options;
    options.out_dir = (blocker / "out").string();
    EXPECT_THROW(run_scenario(config, options), std::runtime_error);
    EXPECT_FALSE(fs::exists(blocker / "out"));
}

TEST(Scenario, FailedChecksGiveExitOne) {
    RunConfig config = quick_config();
    config.checks.final_u = BandCheck{5.0, 0.001};  // unmeetable in half a second
    const fs::path out = temp_dir("scenario_fail");
    ScenarioOptions options;
    options.out_dir = out.string();
    const ScenarioResult result = run_scenario(config, options);
    EXPECT_EQ(result.exit_code, 1);
    EXPECT_NE(result.message.find("final_u"), std::string::npos) << result.message;
    const std::string summary = slurp(result.artifacts.summary_txt);
    EXPECT_NE(summary.find("checks: fail"), std::string::npos);
    EXPECT_NE(summary.find("check_failed:"), std::string::npos);
}

TEST(Scenario, AbortedRunStillWritesArtifactsAndExitsThree) {
    RunConfig config = quick_config();
    config.sim.t_end = 10.0;
    config.aero.provider = "table";  // default table: transient exits its range
    const fs::path out = temp_dir("scenario_abort");
    ScenarioOptions options;
    options.out_dir = out.string();
    const ScenarioResult result = run_scenario(config, options);
    EXPECT_EQ(result.exit_code, 3);
    EXPECT_NE(result.message.find("aborted"), std::string::npos) << result.message;
    EXPECT_TRUE(fs::exists(result.artifacts.timeseries_csv));
    const std::string summary = slurp(result.artifacts.summary_txt);
    EXPECT_NE(summary.find("aborted: true"), std::string::npos);
    EXPECT_NE(summary.find("abort_reason:"), std::string::npos);
}

TEST(Scenario, ViolationFlagBitsAppearInCsv) {
    // Force monitor violations with an unmeetable tolerance, then look for
    // flag bit 2 in some decimated row.
    RunConfig config = quick_config();
    config.sim.monitor.lyap_rel_tol = 1e-300;
    config.sim.monitor.attitude_threshold_deg = 180.0;
    config.sim.monitor.band_threshold_deg = 180.0;
    config.sim.monitor.theta_d_jump_max = 10.0;
    config.checks.require_zero_violations_after_band = false;
    const fs::path out = temp_dir("scenario_flags");
    ScenarioOptions options;
    options.out_dir = out.string();
    options.full_rate = true;
    const ScenarioResult result = run_scenario(config, options);
    const std::string csv = slurp(result.artifacts.timeseries_csv);
    EXPECT_NE(csv.find(",2\n"), std::string::npos);
}

}  // namespace
}  // namespace tailsim
