#pragma once

#include <optional>
#include <vector>

#include "follownav/config.hpp"
#include "follownav/groups.hpp"
#include "follownav/visibility.hpp"

namespace follownav {

struct SubgoalCandidate {
  Vec2 point;
  double theta = 0.0;      // sampling angle [rad]
  int m = 0;               // sampling index
  double clearance = 0.0;  // min distance to the rest of the crowd [m]
};

// Follow points behind the leader: the direction robot->leader is rotated
// by theta_m = -pi/4 + m*delta_theta for m = 0..ceil(pi/(2*delta_theta))
// and the leader position pulled back by follow_distance along each
// rotated direction. Requires distinct robot and leader positions.
std::vector<SubgoalCandidate> sample_candidates(const Vec2& robot_position,
                                                const Vec2& leader_position,
                                                double follow_distance,
                                                double delta_theta);

// Fills each candidate's clearance (min distance to `others`, infinite when
// empty) and returns the index of the max-clearance candidate. Clearances
// within kClearanceTie of the best count as tied; ties prefer the smallest
// |theta|, then the smaller m.
size_t choose_subgoal(std::vector<SubgoalCandidate>& candidates,
                      const std::vector<Vec2>& others);

inline constexpr double kClearanceTie = 1e-6;  // [m]

// A leader inside a multi-member group is replaced by the group member
// currently nearest the robot (ties to the lower id); the robot then tails
// the group's near edge instead of cutting through it.
int effective_leader(int leader_id, const GroupAssignment& groups, const Crowd& crowd,
                     const Vec2& robot_position);

// Speed ceiling while following: match the leader when within tau_catchup,
// otherwise close at v_catchup; always within (0.05, robot_speed_limit].
double adapt_speed(const AgentState& robot, const AgentState& leader,
                   const FrameworkConfig& config);

struct LeaderDecision {
  std::optional<int> leader_id;  // agent actually followed (group-adjusted)
  Vec2 subgoal;
  double speed_limit = 0.0;      // [m/s]
  std::vector<SubgoalCandidate> candidates;  // diagnostic
};

// Combines the pieces for one tick: with no leader the subgoal is the
// global goal at full speed; with one, a sampled follow point behind the
// (group-adjusted) leader and an adapted speed ceiling.
LeaderDecision decide(const AgentState& robot, std::optional<int> leader,
                      const GroupAssignment& groups, const Crowd& crowd,
                      const FrameworkConfig& config, const Vec2& goal);

}  // namespace follownav
