// Command-line front end: run, batch, metrics, plot, validate.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "follownav/engine.hpp"
#include "follownav/io_util.hpp"
#include "follownav/metrics.hpp"
#include "follownav/record_io.hpp"
#include "follownav/scenario.hpp"
#include "follownav/svg.hpp"
#include "follownav/trajectory_io.hpp"

namespace fs = std::filesystem;
using namespace follownav;

namespace {

void ensure_parent_dir(const fs::path& path) {
  const fs::path parent = path.parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void write_output(const fs::path& path, const std::string& content) {
  ensure_parent_dir(path);
  write_file_atomic(path, content);
  std::cout << "wrote " << path.string() << "\n";
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct ScenarioOverrides {
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
};

Scenario load_scenario(const std::string& path, const ScenarioOverrides& overrides) {
  Scenario scenario = load_scenario_file(path);
  if (!overrides.mode.empty()) {
    scenario.mode = *mode_from_string(overrides.mode);  // choices pre-checked by CLI11
  }
  if (overrides.seed) scenario.seed = *overrides.seed;
  if (overrides.trials) scenario.trials = *overrides.trials;
  return scenario;
}

std::string status_line(const RunRecord& record) {
  std::string out = record.status == RunStatus::Reached ? "reached goal" : "timed out";
  out += " after " + std::to_string(record.ticks.back().tick) + " ticks (";
  out += kv::format_double(static_cast<double>(record.ticks.back().tick) * record.dt);
  out += " s)";
  return out;
}

int cmd_run(const std::string& scenario_path, const ScenarioOverrides& overrides,
            const std::string& out_record, const std::string& out_metrics,
            const std::string& out_scores) {
  const Scenario scenario = load_scenario(scenario_path, overrides);
  std::vector<std::string> warnings;
  const TrajectoryLog log = load_scenario_log(scenario, &warnings);
  print_warnings(warnings);

  const bool keep_scores = !out_scores.empty();
  const RunRecord record =
      run(scenario.scene, log, scenario.config, scenario.mode, scenario.seed, keep_scores);
  std::cout << status_line(record) << "\n";

  write_output(out_record, serialize_record(record));
  if (!out_metrics.empty()) {
    const MetricsReport report = summarize({record}, scenario.config);
    write_output(out_metrics, metrics_to_json(report));
  }
  if (keep_scores) write_output(out_scores, serialize_scores(record));
  return 0;
}

int cmd_batch(const std::string& scenario_path, const ScenarioOverrides& overrides,
              const std::string& out_metrics, const std::string& out_dir, int jobs) {
  const Scenario scenario = load_scenario(scenario_path, overrides);
  std::vector<std::string> warnings;
  const TrajectoryLog log = load_scenario_log(scenario, &warnings);
  print_warnings(warnings);

  const std::vector<RunRecord> records = run_batch(
      scenario.scene, log, scenario.config, scenario.mode, scenario.trials, scenario.seed, jobs);
  const MetricsReport report = summarize(records, scenario.config);
  std::cout << "ran " << records.size() << " trials: tcc_uniform "
            << kv::format_double(report.tcc_uniform) << ", tcc_realistic "
            << kv::format_double(report.tcc_realistic) << ", t_avg "
            << kv::format_double(report.t_avg) << " s, d_avg "
            << kv::format_double(report.d_avg) << " m\n";

  write_output(out_metrics, metrics_to_json(report));
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < records.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "trial_%04zu.csv", i);
      write_file_atomic(fs::path(out_dir) / name, serialize_record(records[i]));
    }
    std::cout << "wrote " << records.size() << " record files to " << out_dir << "\n";
  }
  return 0;
}

int cmd_metrics(const std::vector<std::string>& record_paths, const std::string& scenario_path,
                const std::string& out_path) {
  FrameworkConfig config;
  if (!scenario_path.empty()) config = load_scenario_file(scenario_path).config;

  std::vector<RunRecord> records;
  records.reserve(record_paths.size());
  for (const auto& path : record_paths) {
    try {
      records.push_back(load_record_file(path));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  const std::string json = metrics_to_json(summarize(records, config));
  if (out_path.empty()) {
    std::cout << json;
  } else {
    write_output(out_path, json);
  }
  return 0;
}

int cmd_plot(const std::string& record_path, const std::string& scenario_path,
             const std::string& out_path) {
  const RunRecord record = load_record_file(record_path);
  std::optional<Scenario> scenario;
  if (!scenario_path.empty()) scenario = load_scenario_file(scenario_path);
  const std::string svg = render_svg(record, scenario ? &scenario->scene : nullptr);
  write_output(out_path, svg);
  return 0;
}

int cmd_validate(const std::string& scenario_path) {
  const Scenario scenario = load_scenario_file(scenario_path);
  std::vector<std::string> warnings;
  const TrajectoryLog log = load_scenario_log(scenario, &warnings);
  print_warnings(warnings);
  std::cout << "scenario ok: mode " << to_string(scenario.mode) << ", " << scenario.trials
            << (scenario.trials == 1 ? " trial, " : " trials, ") << log.agent_ids().size()
            << " logged agents, " << scenario.scene.obstacles.size() << " obstacles\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader-following crowd navigation: simulation, metrics and plots"};
  app.require_subcommand(1);

  ScenarioOverrides overrides;
  std::string scenario_path;
  std::string out_record = "record.csv";
  std::string out_metrics = "metrics.json";
  std::string out_scores;
  std::string out_dir;
  std::string out_path;
  std::vector<std::string> record_paths;
  int jobs = 0;

  const std::vector<std::string> mode_names{"framework", "raw-sf"};

  auto add_scenario_option = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "Scenario file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--mode", overrides.mode, "Planner mode override")
        ->check(CLI::IsMember(mode_names));
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run one seeded trial");
  add_scenario_option(run_cmd);
  std::uint64_t seed_value = 0;
  CLI::Option* seed_opt = run_cmd->add_option("--seed", seed_value, "Seed override");
  run_cmd->add_option("--out-record", out_record, "Record CSV path (default record.csv)");
  run_cmd->add_option("--out-metrics", out_metrics,
                      "Metrics JSON path (default metrics.json, empty to skip)");
  run_cmd->add_option("--out-scores", out_scores, "Leader score table CSV path");

  CLI::App* batch_cmd = app.add_subcommand("batch", "Run repeated seeded trials");
  batch_cmd->add_option("--scenario", scenario_path, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  batch_cmd->add_option("--mode", overrides.mode, "Planner mode override")
      ->check(CLI::IsMember(mode_names));
  std::uint64_t batch_seed = 0;
  CLI::Option* batch_seed_opt = batch_cmd->add_option("--seed", batch_seed, "Base seed override");
  int trials_value = 0;
  CLI::Option* trials_opt = batch_cmd->add_option("--trials", trials_value, "Trial count override")
                                ->check(CLI::PositiveNumber);
  batch_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  batch_cmd->add_option("--out-metrics", out_metrics,
                        "Aggregate metrics JSON path (default metrics.json)");
  batch_cmd->add_option("--out-dir", out_dir, "Directory for per-trial record CSVs");

  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Compute metrics from record CSVs");
  metrics_cmd->add_option("records", record_paths, "Record CSV files")
      ->required()
      ->check(CLI::ExistingFile);
  metrics_cmd->add_option("--scenario", scenario_path, "Scenario supplying the config")
      ->check(CLI::ExistingFile);
  metrics_cmd->add_option("-o,--out", out_path, "Output JSON path (default stdout)");

  CLI::App* plot_cmd = app.add_subcommand("plot", "Render a record CSV as SVG");
  std::string plot_record;
  plot_cmd->add_option("record", plot_record, "Record CSV file")
      ->required()
      ->check(CLI::ExistingFile);
  plot_cmd->add_option("--scenario", scenario_path, "Scenario supplying obstacles and goal")
      ->check(CLI::ExistingFile);
  plot_cmd->add_option("-o,--out", out_path, "Output SVG path")->required();

  CLI::App* validate_cmd = app.add_subcommand("validate", "Schema-check a scenario file");
  validate_cmd->add_option("scenario", scenario_path, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      if (*seed_opt) overrides.seed = seed_value;
      return cmd_run(scenario_path, overrides, out_record, out_metrics, out_scores);
    }
    if (batch_cmd->parsed()) {
      if (*batch_seed_opt) overrides.seed = batch_seed;
      if (*trials_opt) overrides.trials = trials_value;
      return cmd_batch(scenario_path, overrides, out_metrics, out_dir, jobs);
    }
    if (metrics_cmd->parsed()) return cmd_metrics(record_paths, scenario_path, out_path);
    if (plot_cmd->parsed()) return cmd_plot(plot_record, scenario_path, out_path);
    if (validate_cmd->parsed()) return cmd_validate(scenario_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
