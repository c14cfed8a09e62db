#include "follownav/subgoal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace follownav {

std::vector<SubgoalCandidate> sample_candidates(const Vec2& robot_position,
                                                const Vec2& leader_position,
                                                double follow_distance,
                                                double delta_theta) {
  Vec2 axis = leader_position - robot_position;
  if (norm_sq(axis) == 0.0)
    throw ValidationError("subgoal sampling requires distinct robot and leader positions");
  Vec2 unit = normalized(axis);

  int last = static_cast<int>(std::ceil(std::numbers::pi / (2.0 * delta_theta)));
  std::vector<SubgoalCandidate> candidates;
  candidates.reserve(static_cast<size_t>(last) + 1);
  for (int m = 0; m <= last; ++m) {
    SubgoalCandidate c;
    c.m = m;
    c.theta = -std::numbers::pi / 4.0 + static_cast<double>(m) * delta_theta;
    c.point = leader_position - rotated(unit, c.theta) * follow_distance;
    candidates.push_back(c);
  }
  return candidates;
}

size_t choose_subgoal(std::vector<SubgoalCandidate>& candidates,
                      const std::vector<Vec2>& others) {
  if (candidates.empty())
    throw ValidationError("choose_subgoal requires at least one candidate");
  for (SubgoalCandidate& c : candidates) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const Vec2& p : others) clearance = std::min(clearance, dist(c.point, p));
    c.clearance = clearance;
  }
  // Two passes: the max clearance defines the tie set, the tie set picks
  // the most central angle. Order-independent.
  double top = -std::numeric_limits<double>::infinity();
  for (const SubgoalCandidate& c : candidates) top = std::max(top, c.clearance);
  size_t best = candidates.size();
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!(candidates[i].clearance >= top - kClearanceTie)) continue;
    if (best == candidates.size() ||
        std::abs(candidates[i].theta) < std::abs(candidates[best].theta))
      best = i;  // visiting in m order breaks |theta| ties toward smaller m
  }
  return best;
}

int effective_leader(int leader_id, const GroupAssignment& groups, const Crowd& crowd,
                     const Vec2& robot_position) {
  const std::vector<int>& members = groups.members_of(leader_id);
  if (members.size() <= 1) return leader_id;
  int best_id = leader_id;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const TrackedAgent& human : crowd) {
    bool in_group = false;
    for (int id : members)
      if (id == human.agent.id) { in_group = true; break; }
    if (!in_group) continue;
    double d = dist(human.state.position, robot_position);
    // Strict < with ids visited in crowd order; resolve equal distances by id.
    if (d < best_dist || (d == best_dist && human.agent.id < best_id)) {
      best_dist = d;
      best_id = human.agent.id;
    }
  }
  return best_id;
}

double adapt_speed(const AgentState& robot, const AgentState& leader,
                   const FrameworkConfig& config) {
  double gap = dist(robot.position, leader.position);
  double v = gap <= config.tau_catchup ? norm(leader.velocity) : config.v_catchup;
  v = std::min(v, config.robot_speed_limit);
  v = std::max(v, std::min(0.05, config.robot_speed_limit));  // stationary-leader floor
  return v;
}

LeaderDecision decide(const AgentState& robot, std::optional<int> leader,
                      const GroupAssignment& groups, const Crowd& crowd,
                      const FrameworkConfig& config, const Vec2& goal) {
  LeaderDecision decision;
  if (!leader) {
    decision.subgoal = goal;
    decision.speed_limit = config.robot_speed_limit;
    return decision;
  }

  int followed = effective_leader(*leader, groups, crowd, robot.position);
  const TrackedAgent* agent = nullptr;
  for (const TrackedAgent& human : crowd)
    if (human.agent.id == followed) { agent = &human; break; }
  if (!agent)
    throw ValidationError("leader id " + std::to_string(followed) + " is not in the crowd");

  decision.leader_id = followed;
  decision.candidates = sample_candidates(robot.position, agent->state.position,
                                          config.follow_distance, config.delta_theta);
  std::vector<Vec2> others;
  others.reserve(crowd.size());
  for (const TrackedAgent& human : crowd)
    if (human.agent.id != followed) others.push_back(human.state.position);
  size_t pick = choose_subgoal(decision.candidates, others);
  decision.subgoal = decision.candidates[pick].point;
  decision.speed_limit = adapt_speed(robot, agent->state, config);
  return decision;
}

}  // namespace follownav
