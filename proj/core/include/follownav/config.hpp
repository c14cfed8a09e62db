#pragma once

#include <numbers>
#include <string>

#include "follownav/errors.hpp"
#include "follownav/kv.hpp"

namespace follownav {

// Social force integration parameters.
struct SfParams {
  double relaxation_time = 0.5;     // [s] velocity relaxation toward the drive direction
  double repulsion_strength = 2.0;  // [m/s^2] agent-agent exponential repulsion peak scale
  double repulsion_range = 0.35;    // [m] agent-agent repulsion decay length
  double obstacle_strength = 3.0;   // [m/s^2] wall repulsion peak scale
  double obstacle_range = 0.25;     // [m] wall repulsion decay length
};

// All tunables of the leader-following navigation stack. Field names double
// as the config file keys (flat `key = value` lines, SI units).
struct FrameworkConfig {
  double v_pref = 1.4;             // [m/s] nominal crowd walking speed
  double observable_range = 10.0;  // [m] sensing radius r
  double follow_distance = 0.8;    // [m] subgoal offset d behind the leader
  double robot_speed_limit = 2.0;  // [m/s]
  double dt = 1.0 / 30.0;          // [s] simulation tick
  int history_window = 30;         // [frames] velocity averaging window T
  double agent_radius = 0.5;       // [m] planning disc radius, robot and humans

  double tau_group_dis = 1.5;      // [m] group link distance threshold
  double tau_group_vel = 0.5;      // [m/s] group link velocity threshold
  double tau_reach = 0.5;          // [m] minimum clearance inside the visible region
  double tau_leader = 0.2;         // minimum acceptable leader score
  double tau_catchup = 2.0;        // [m] distance beyond which the robot speeds up
  double v_catchup = 1.8;          // [m/s] catch-up speed
  double leader_bonus = 0.1;       // additive score keeping the incumbent leader
  double w_head = 0.5;             // heading score weight (normalized on load)
  double w_vel = 0.25;             // speed score weight
  double w_pos = 0.25;             // position score weight
  double delta_theta = std::numbers::pi / 8.0;  // [rad] subgoal sampling step
  int ray_count = 720;             // visibility rays per revolution

  SfParams sf;

  double arrival_radius = 0.05;    // [m] run termination tolerance at the goal
  double playback_noise_sigma = 0.02;  // [m] per-axis noise on playback positions
  long max_ticks = 0;              // 0 = three times the straight-line optimistic time
  bool reactive_humans = false;    // replace playback with force-driven agents

  // Throws ValidationError naming the offending field.
  void validate() const;

  // Divides the three score weights by their sum so they add to one.
  void normalize_weights();
};

// Assigns already-parsed entries onto `config`; keys must be field names.
// Callers layering overrides (e.g. a scenario's [config] section) validate
// and normalize afterward themselves.
void apply_config_entries(FrameworkConfig& config, const kv::Document& entries);

// Parses a flat key-value document. Missing keys keep their defaults,
// unknown keys are an error, and the weights are normalized afterward.
FrameworkConfig load_config(const std::string& text);

FrameworkConfig load_config_file(const std::string& path);

// Canonical serialization: every field, declaration order, shortest
// round-trip number format. load_config(serialize_config(c)) == c.
std::string serialize_config(const FrameworkConfig& config);

bool operator==(const SfParams& a, const SfParams& b);
bool operator==(const FrameworkConfig& a, const FrameworkConfig& b);

}  // namespace follownav
