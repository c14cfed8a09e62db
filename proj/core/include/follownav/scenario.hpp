#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "follownav/config.hpp"
#include "follownav/engine.hpp"
#include "follownav/scene.hpp"
#include "follownav/trajectory.hpp"

namespace follownav {

// A complete experiment description, parsed from a scenario file: the
// static scene, where the recorded crowd comes from and how to scale it,
// the planner mode, the trial protocol, and any config overrides.
//
// File format: `key = value` lines with `#` comments.
//
//   goal = [20, 0]                       # required, meters
//   robot_start = [0, 0]                 # required
//   robot_start_velocity = [0, 0]        # optional, default zero
//   bounds = [-5, -5, 25, 5]             # optional min_x,min_y,max_x,max_y;
//                                        # default: data bounding box + 5 m
//   obstacles = [[2, 0.75, 16, 0.75]]    # optional segment rows x1,y1,x2,y2
//   trajectories = "crowd.csv"           # optional, relative to the scenario
//   scale = 0.036                        # meters per trajectory unit, default 1
//   source_rate = 30                     # Hz of the file, default: sim rate
//   mode = "framework"                   # or "raw-sf", default framework
//   trials = 100                         # default 1
//   seed = 7                             # base seed, default 0
//   [config]                             # any config field name
//   v_pref = 1.2
struct Scenario {
  Scene scene;
  std::filesystem::path trajectories;  // empty: no recorded crowd
  double scale = 1.0;
  double source_rate = 0.0;  // 0: file already at the simulation rate
  Mode mode = Mode::Framework;
  int trials = 1;
  std::uint64_t seed = 0;
  FrameworkConfig config;
};

Scenario parse_scenario(const std::string& text);

// Parses the file and resolves a relative trajectory path against the
// scenario's own directory.
Scenario load_scenario_file(const std::filesystem::path& path);

// Ingests the referenced trajectory file resampled to the scenario's
// simulation rate; an empty log when the scenario names none.
TrajectoryLog load_scenario_log(const Scenario& scenario,
                                std::vector<std::string>* warnings = nullptr);

}  // namespace follownav
