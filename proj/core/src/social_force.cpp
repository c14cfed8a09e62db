#include "follownav/social_force.hpp"

#include <cmath>

#include "follownav/errors.hpp"

namespace follownav {

Vec2 sf_goal_force(const AgentState& self, const Vec2& goal, double v_max,
                   const SfParams& params) {
  Vec2 to_goal = goal - self.position;
  if (norm(to_goal) <= kGoalDeadzone) return {0.0, 0.0};
  Vec2 desired = normalized(to_goal) * v_max;
  return (desired - self.velocity) / params.relaxation_time;
}

Vec2 sf_agent_repulsion(const Vec2& position, double radius, const SfNeighbor& other,
                        const SfParams& params) {
  Vec2 away = position - other.position;
  double gap = norm(away);
  if (gap == 0.0) return {0.0, 0.0};  // coincident centers give no direction
  double magnitude =
      params.repulsion_strength * std::exp((radius + other.radius - gap) / params.repulsion_range);
  return away * (magnitude / gap);
}

Vec2 sf_obstacle_repulsion(const Vec2& position, double radius, const Segment& wall,
                           const SfParams& params) {
  Vec2 closest = closest_point_on_segment(position, wall);
  Vec2 away = position - closest;
  double gap = norm(away);
  if (gap == 0.0) return {0.0, 0.0};
  double magnitude =
      params.obstacle_strength * std::exp((radius - gap) / params.obstacle_range);
  return away * (magnitude / gap);
}

AgentState sf_step(const AgentState& self, double self_radius, const Vec2& goal,
                   double v_max, const std::vector<SfNeighbor>& neighbors,
                   const std::vector<Segment>& obstacles, const SfParams& params,
                   double dt) {
  if (!(v_max > 0.0)) throw ValidationError("sf_step requires a positive speed limit");
  if (!(dt > 0.0)) throw ValidationError("sf_step requires a positive dt");

  Vec2 force = sf_goal_force(self, goal, v_max, params);
  for (const SfNeighbor& other : neighbors) {
    if (self.position == other.position)
      throw ValidationError("sf_step: agent coincides with a neighbor");
    force += sf_agent_repulsion(self.position, self_radius, other, params);
  }
  for (const Segment& wall : obstacles)
    force += sf_obstacle_repulsion(self.position, self_radius, wall, params);

  AgentState next;
  next.velocity = self.velocity + force * dt;
  double speed = norm(next.velocity);
  if (speed > v_max) next.velocity = next.velocity * (v_max / speed);
  next.position = self.position + next.velocity * dt;
  return next;
}

}  // namespace follownav
