#include "follownav/visibility.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace follownav {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

bool VisibleRegion::contains(const Vec2& p) const {
  size_t n = vertices.size();
  if (n < 3) return false;
  Vec2 d = p - origin;
  double r_sq = norm_sq(d);
  if (r_sq == 0.0) return true;
  double theta = std::atan2(d.y, d.x);
  if (theta < 0.0) theta += kTau;
  size_t k = static_cast<size_t>(theta / (kTau / static_cast<double>(n)));
  if (k >= n) k = n - 1;
  const Vec2& a = vertices[k];
  const Vec2& b = vertices[(k + 1) % n];
  double side_p = cross(b - a, p - a);
  double side_o = cross(b - a, origin - a);
  return side_p * side_o >= 0.0;
}

double VisibleRegion::boundary_distance(const Vec2& p) const {
  size_t n = vertices.size();
  double best = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < n; ++k) {
    double d = dist_point_segment(p, Segment{vertices[k], vertices[(k + 1) % n]});
    if (d < best) best = d;
  }
  return best;
}

VisibleRegion build_visible_region(const Vec2& origin,
                                   const std::vector<OccluderDisc>& discs,
                                   const std::vector<Segment>& segments,
                                   double max_range, int ray_count) {
  if (!(max_range > 0.0))
    throw ValidationError("visible region range must be positive");
  if (ray_count < 8)
    throw ValidationError("visible region needs at least 8 rays");
  for (const OccluderDisc& d : discs)
    if (dist(origin, d.center) <= d.radius)
      throw DegeneratePoseError("view origin lies inside an occluder disc");

  VisibleRegion region;
  region.origin = origin;
  region.max_range = max_range;
  region.vertices.resize(static_cast<size_t>(ray_count));
  for (int k = 0; k < ray_count; ++k) {
    double angle = kTau * static_cast<double>(k) / static_cast<double>(ray_count);
    Vec2 dir{std::cos(angle), std::sin(angle)};
    double t = max_range;
    for (const OccluderDisc& d : discs) {
      auto hit = ray_circle_first_hit(origin, dir, d.center, d.radius);
      if (hit && *hit < t) t = *hit;
    }
    for (const Segment& s : segments) {
      auto hit = ray_segment_first_hit(origin, dir, s);
      if (hit && *hit < t) t = *hit;
    }
    region.vertices[static_cast<size_t>(k)] = origin + dir * t;
  }
  return region;
}

double reach_score(const Vec2& p, const VisibleRegion& region) {
  double d = region.boundary_distance(p);
  return region.contains(p) ? d : -d;
}

ReachResult is_reachable(const Crowd& crowd, size_t candidate_index,
                         const AgentState& robot, const Scene& scene,
                         const FrameworkConfig& config) {
  if (candidate_index >= crowd.size())
    throw ValidationError("candidate index " + std::to_string(candidate_index) +
                          " out of range");
  std::vector<OccluderDisc> discs;
  discs.reserve(crowd.size());
  for (size_t i = 0; i < crowd.size(); ++i) {
    if (i == candidate_index) continue;  // a candidate does not hide itself
    discs.push_back({crowd[i].state.position, crowd[i].agent.radius});
  }
  VisibleRegion region = build_visible_region(robot.position, discs, scene.obstacles,
                                              config.observable_range, config.ray_count);
  double score = reach_score(crowd[candidate_index].state.position, region);
  return {score >= config.tau_reach, score};
}

}  // namespace follownav
