#pragma once

#include <vector>

#include "follownav/agents.hpp"
#include "follownav/errors.hpp"
#include "follownav/geometry.hpp"

namespace follownav {

// Static part of a navigation problem: obstacles as line segments plus the
// robot's start and global goal. Bounds exist for plotting and sanity
// checks; motion is not clipped to them.
struct Scene {
  std::vector<Segment> obstacles;
  Vec2 robot_start;
  Vec2 robot_start_velocity;
  Vec2 goal;
  Bounds bounds{{-100.0, -100.0}, {100.0, 100.0}};

  void validate() const {
    if (!is_finite(robot_start) || !is_finite(goal) || !is_finite(robot_start_velocity))
      throw ValidationError("scene: robot start, velocity and goal must be finite");
    if (!(bounds.min.x < bounds.max.x) || !(bounds.min.y < bounds.max.y))
      throw ValidationError("scene: bounds must have positive extent");
    if (!bounds.contains(robot_start))
      throw ValidationError("scene: robot start outside bounds");
    if (!bounds.contains(goal))
      throw ValidationError("scene: goal outside bounds");
    for (const Segment& s : obstacles)
      if (!is_finite(s.a) || !is_finite(s.b))
        throw ValidationError("scene: obstacle endpoints must be finite");
  }
};

}  // namespace follownav
