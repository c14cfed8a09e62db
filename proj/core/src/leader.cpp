#include "follownav/leader.hpp"

#include <cmath>
#include <numbers>

#include "follownav/trajectory.hpp"

namespace follownav {

double score_heading(const Vec2& mean_velocity, const Vec2& position, const Vec2& goal) {
  double speed = norm(mean_velocity);
  Vec2 to_goal = goal - position;
  double gap = norm(to_goal);
  if (speed == 0.0 || gap == 0.0) return -1.0;
  double c = dot(mean_velocity, to_goal) / (speed * gap);
  // The 45-degree boundary counts as aligned; the 1e-12 slack keeps an
  // exactly-diagonal velocity from falling to the rejected branch when its
  // cosine lands one rounding step below the threshold.
  static const double kMin = std::cos(std::numbers::pi / 4.0) - 1e-12;
  return c >= kMin ? c : -1.0;
}

double score_speed(double mean_speed, double v_pref) {
  if (mean_speed < v_pref) return (mean_speed - v_pref) / v_pref;
  return std::max(0.0, 1.0 - (mean_speed - v_pref) / v_pref);
}

double score_position(const Vec2& position, const Vec2& robot_position,
                      const Vec2& goal, double observable_range) {
  Vec2 offset = position - robot_position;
  if (dot(offset, goal - robot_position) > 0.0)
    return std::max(0.0, 1.0 - norm(offset) / observable_range);
  return -1.0;
}

SelectionResult select_leader(const AgentState& robot, const Crowd& crowd,
                              const Scene& scene, std::optional<int> previous_leader,
                              const FrameworkConfig& config) {
  SelectionResult result;
  result.scores.reserve(crowd.size());

  for (size_t i = 0; i < crowd.size(); ++i) {
    const TrackedAgent& human = crowd[i];
    LeaderScore row;
    row.id = human.agent.id;

    ReachResult reach = is_reachable(crowd, i, robot, scene, config);
    row.reach = reach.score;
    row.reachable = reach.reachable;

    Vec2 mean_vel = mean_recent_velocity(human.recent_positions, config.dt,
                                         config.history_window);
    double mean_speed = mean_recent_speed(human.recent_positions, config.dt,
                                          config.history_window);
    row.s_head = score_heading(mean_vel, human.state.position, scene.goal);
    row.s_vel = score_speed(mean_speed, config.v_pref);
    row.s_pos = score_position(human.state.position, robot.position, scene.goal,
                               config.observable_range);
    row.total = config.w_head * row.s_head + config.w_vel * row.s_vel +
                config.w_pos * row.s_pos;
    if (row.reachable && previous_leader && *previous_leader == row.id)
      row.total += config.leader_bonus;  // hysteresis, only while still qualified
    result.scores.push_back(row);
  }

  const LeaderScore* best = nullptr;
  for (const LeaderScore& row : result.scores) {
    if (!row.reachable) continue;
    if (!best || row.total > best->total ||
        (row.total == best->total && row.id < best->id))
      best = &row;
  }
  if (best && best->total >= config.tau_leader) {
    result.leader = best->id;
    for (LeaderScore& row : result.scores)
      row.selected = (row.id == best->id);
  }
  return result;
}

}  // namespace follownav
