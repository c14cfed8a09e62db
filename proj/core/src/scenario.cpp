#include "follownav/scenario.hpp"

#include <cmath>

#include "follownav/io_util.hpp"
#include "follownav/kv.hpp"
#include "follownav/trajectory_io.hpp"

namespace follownav {

namespace {

Vec2 get_vec2(const kv::Value& value, const std::string& key) {
  const auto& list = kv::get_list(value, key, 2);
  return {list[0], list[1]};
}

long get_integer(const kv::Value& value, const std::string& key, long min_value) {
  const double d = kv::get_number(value, key);
  if (!std::isfinite(d) || d != std::floor(d)) {
    throw ValidationError("scenario key '" + key + "' must be an integer");
  }
  if (d < static_cast<double>(min_value)) {
    throw ValidationError("scenario key '" + key + "' must be at least " +
                          std::to_string(min_value));
  }
  return static_cast<long>(d);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const kv::Document doc = kv::parse(text);
  Scenario scenario;
  kv::Document config_entries;
  bool has_goal = false;
  bool has_start = false;
  bool has_bounds = false;

  for (const auto& [key, value] : doc) {
    if (key.rfind("config.", 0) == 0) {
      config_entries.emplace(key.substr(7), value);
    } else if (key == "goal") {
      scenario.scene.goal = get_vec2(value, key);
      has_goal = true;
    } else if (key == "robot_start") {
      scenario.scene.robot_start = get_vec2(value, key);
      has_start = true;
    } else if (key == "robot_start_velocity") {
      scenario.scene.robot_start_velocity = get_vec2(value, key);
    } else if (key == "bounds") {
      const auto& list = kv::get_list(value, key, 4);
      scenario.scene.bounds = {{list[0], list[1]}, {list[2], list[3]}};
      has_bounds = true;
    } else if (key == "obstacles") {
      for (const auto& row : kv::get_grid(value, key, 4)) {
        scenario.scene.obstacles.push_back({{row[0], row[1]}, {row[2], row[3]}});
      }
    } else if (key == "trajectories") {
      scenario.trajectories = kv::get_string(value, key);
    } else if (key == "scale") {
      scenario.scale = kv::get_number(value, key);
      if (!(scenario.scale > 0.0) || !std::isfinite(scenario.scale)) {
        throw ValidationError("scenario key 'scale' must be positive");
      }
    } else if (key == "source_rate") {
      scenario.source_rate = kv::get_number(value, key);
      if (!(scenario.source_rate > 0.0) || !std::isfinite(scenario.source_rate)) {
        throw ValidationError("scenario key 'source_rate' must be positive");
      }
    } else if (key == "mode") {
      const std::string& name = kv::get_string(value, key);
      const auto mode = mode_from_string(name);
      if (!mode) throw ValidationError("unknown mode '" + name + "'");
      scenario.mode = *mode;
    } else if (key == "trials") {
      scenario.trials = static_cast<int>(get_integer(value, key, 1));
    } else if (key == "seed") {
      scenario.seed = static_cast<std::uint64_t>(get_integer(value, key, 0));
    } else {
      throw ValidationError("unknown scenario key '" + key + "'");
    }
  }

  if (!has_goal) throw ValidationError("scenario is missing 'goal'");
  if (!has_start) throw ValidationError("scenario is missing 'robot_start'");

  apply_config_entries(scenario.config, config_entries);
  scenario.config.validate();
  scenario.config.normalize_weights();

  if (!has_bounds) {
    Bounds box{scenario.scene.robot_start, scenario.scene.robot_start};
    box.expand(scenario.scene.goal);
    for (const Segment& s : scenario.scene.obstacles) {
      box.expand(s.a);
      box.expand(s.b);
    }
    const Vec2 margin{5.0, 5.0};
    scenario.scene.bounds = {box.min - margin, box.max + margin};
  }
  scenario.scene.validate();
  return scenario;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  Scenario scenario = parse_scenario(read_text_file(path));
  if (!scenario.trajectories.empty() && scenario.trajectories.is_relative()) {
    scenario.trajectories = path.parent_path() / scenario.trajectories;
  }
  return scenario;
}

TrajectoryLog load_scenario_log(const Scenario& scenario,
                                std::vector<std::string>* warnings) {
  const double sim_rate = 1.0 / scenario.config.dt;
  if (scenario.trajectories.empty()) return TrajectoryLog(sim_rate);
  const double source_rate =
      scenario.source_rate > 0.0 ? scenario.source_rate : sim_rate;
  return ingest_trajectory_file(scenario.trajectories, scenario.scale, source_rate,
                                sim_rate, warnings);
}

}  // namespace follownav
