#pragma once

#include <vector>

#include "follownav/agents.hpp"
#include "follownav/config.hpp"
#include "follownav/errors.hpp"
#include "follownav/geometry.hpp"
#include "follownav/scene.hpp"

namespace follownav {

struct OccluderDisc {
  Vec2 center;
  double radius = 0.0;
};

// Star-shaped polygon of everything the robot can see from `origin`:
// vertex k sits on the ray at angle 2*pi*k/n at the distance of the first
// occluder hit, clamped to max_range.
struct VisibleRegion {
  Vec2 origin;
  double max_range = 0.0;
  std::vector<Vec2> vertices;  // counterclockwise, one per ray

  // Star-shape membership: the point is inside iff it lies on the origin
  // side of the boundary chord spanning its bearing. Equivalent to general
  // point-in-polygon for this vertex layout.
  bool contains(const Vec2& p) const;

  // Distance to the closest boundary edge.
  double boundary_distance(const Vec2& p) const;
};

// Casts ray_count evenly spaced rays against the occluder discs and
// segments. Throws DegeneratePoseError when the origin is inside (or on)
// an occluder disc, since no view exists from there.
VisibleRegion build_visible_region(const Vec2& origin,
                                   const std::vector<OccluderDisc>& discs,
                                   const std::vector<Segment>& segments,
                                   double max_range, int ray_count);

// Signed clearance of a point inside the visible region: positive distance
// to the boundary when visible, negative when outside.
double reach_score(const Vec2& p, const VisibleRegion& region);

// One crowd participant as seen by the planner at the current tick.
// recent_positions holds the last few observed positions (oldest first,
// one per tick, the newest equal to state.position).
struct TrackedAgent {
  Agent agent;
  AgentState state;
  std::vector<Vec2> recent_positions;
};

using Crowd = std::vector<TrackedAgent>;

struct ReachResult {
  bool reachable = false;
  double score = 0.0;
};

// Builds the robot's visible region with every crowd member except the
// candidate as an occluder disc (group membership grants no transparency:
// group-mates occlude like anyone else) plus the scene obstacles, then
// scores the candidate's position. Reachable means score >= tau_reach.
ReachResult is_reachable(const Crowd& crowd, size_t candidate_index,
                         const AgentState& robot, const Scene& scene,
                         const FrameworkConfig& config);

}  // namespace follownav
