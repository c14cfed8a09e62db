#pragma once

#include <string>
#include <vector>

#include "follownav/config.hpp"
#include "follownav/engine.hpp"

namespace follownav {

// Uniform: every agent is a disc of the planning radius. Realistic:
// pedestrians stay discs while bicycles and cars become oriented
// rectangles (1.9 x 1.0 m and 4.5 x 1.9 m) aligned with their motion.
enum class CollisionRegime { Uniform, Realistic };

// Footprint of one agent at one instant under a regime. The heading is the
// last direction the agent moved (rectangles keep their orientation while
// stopped; agents that never moved face +x).
OrientedRect footprint_rect(const Vec2& position, const Vec2& heading, AgentKind kind);

// True when the robot disc overlaps the agent footprint.
bool robot_overlaps_agent(const Vec2& robot_position, double robot_radius,
                          const Vec2& agent_position, const Vec2& agent_heading,
                          AgentKind kind, double agent_radius, CollisionRegime regime);

// Per-tick collision indicator for a whole run; a tick with several
// simultaneous overlaps still counts once.
std::vector<bool> collision_flags(const RunRecord& record, const FrameworkConfig& config,
                                  CollisionRegime regime);

struct TrialMetrics {
  int trial = 0;
  std::uint64_t seed = 0;
  bool timeout = false;
  double time_s = 0.0;      // ticks to arrival x dt; timeouts count the full budget
  double distance_m = 0.0;  // summed robot displacement
  long tcc_uniform = 0;     // colliding ticks, uniform regime
  long tcc_realistic = 0;
  long pairwise_uniform = 0;  // robot-agent overlap pairs summed over ticks
  long pairwise_realistic = 0;
  long wall_contact_ticks = 0;  // diagnostic; walls never count as collisions
};

struct MetricsReport {
  std::string mode;
  int trial_count = 0;
  double tcc_uniform = 0.0;  // means over trials
  double tcc_realistic = 0.0;
  double t_avg = 0.0;
  double d_avg = 0.0;
  bool any_timeout = false;
  std::vector<TrialMetrics> per_trial;
};

TrialMetrics trial_metrics(const RunRecord& record, const FrameworkConfig& config);

// Means over the batch. Trials are aggregated by their position in
// `records`; shuffling the input reorders per_trial but leaves every
// aggregate unchanged (up to floating-point addition order).
MetricsReport summarize(const std::vector<RunRecord>& records,
                        const FrameworkConfig& config);

// Lower_snake_case JSON document, stable key order.
std::string metrics_to_json(const MetricsReport& report);

}  // namespace follownav
