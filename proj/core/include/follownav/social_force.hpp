#pragma once

#include <vector>

#include "follownav/agents.hpp"
#include "follownav/config.hpp"
#include "follownav/geometry.hpp"

namespace follownav {

struct SfNeighbor {
  Vec2 position;
  double radius = 0.5;  // [m]
};

// Goal attraction switches off inside this radius; the caller decides when
// the goal counts as reached.
inline constexpr double kGoalDeadzone = 0.2;  // [m]

// Relaxation toward driving at v_max straight for the goal; zero inside
// the dead zone.
Vec2 sf_goal_force(const AgentState& self, const Vec2& goal, double v_max,
                   const SfParams& params);

// Exponential body repulsion, strictly increasing as the gap closes.
Vec2 sf_agent_repulsion(const Vec2& position, double radius, const SfNeighbor& other,
                        const SfParams& params);

// Same shape against the closest point of a wall segment.
Vec2 sf_obstacle_repulsion(const Vec2& position, double radius, const Segment& wall,
                           const SfParams& params);

// One integration step: sum the forces, advance velocity, clamp its norm
// to v_max, then advance position with the new velocity. Pure.
AgentState sf_step(const AgentState& self, double self_radius, const Vec2& goal,
                   double v_max, const std::vector<SfNeighbor>& neighbors,
                   const std::vector<Segment>& obstacles, const SfParams& params,
                   double dt);

}  // namespace follownav
