#pragma once

#include <optional>
#include <vector>

#include "follownav/config.hpp"
#include "follownav/scene.hpp"
#include "follownav/visibility.hpp"

namespace follownav {

// Per-candidate scoring breakdown for one tick, exportable for debugging.
struct LeaderScore {
  int id = 0;
  double s_head = 0.0;
  double s_vel = 0.0;
  double s_pos = 0.0;
  double reach = 0.0;     // signed clearance inside the visible region
  bool reachable = false;
  double total = 0.0;     // weighted sum, previous-leader bonus included
  bool selected = false;
};

// Alignment of the candidate's mean velocity with its direction to the
// goal: the cosine when within 45 degrees, otherwise -1. Stationary
// candidates and candidates standing on the goal have no useful heading.
double score_heading(const Vec2& mean_velocity, const Vec2& position, const Vec2& goal);

// Preference for walking near v_pref: negative below it, 1 at it, fading
// to 0 above it.
double score_speed(double mean_speed, double v_pref);

// Preference for candidates ahead of the robot (relative to the goal) and
// near it: -1 behind, otherwise 1 at the robot fading to 0 at the
// observable range.
double score_position(const Vec2& position, const Vec2& robot_position,
                      const Vec2& goal, double observable_range);

struct SelectionResult {
  std::optional<int> leader;        // none when no candidate clears tau_leader
  std::vector<LeaderScore> scores;  // one row per crowd member, crowd order
};

// Scores every line-of-sight-reachable crowd member and picks the best.
// The previous leader keeps an additive bonus while it remains reachable;
// the winner must reach tau_leader (bonus included). Exact ties go to the
// lower agent id.
SelectionResult select_leader(const AgentState& robot, const Crowd& crowd,
                              const Scene& scene, std::optional<int> previous_leader,
                              const FrameworkConfig& config);

}  // namespace follownav
