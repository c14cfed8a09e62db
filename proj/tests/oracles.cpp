#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {

namespace {

double dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double len2(const Vec2& a) { return std::sqrt(a.x * a.x + a.y * a.y); }
Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = sub(b, a);
  const double denom = dot2(ab, ab);
  double t = denom > 0.0 ? dot2(sub(p, a), ab) / denom : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec2 closest{a.x + ab.x * t, a.y + ab.y * t};
  return len2(sub(p, closest));
}

bool segments_properly_cross(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                             const Vec2& b2) {
  const double d1 = cross2(sub(a2, a1), sub(b1, a1));
  const double d2 = cross2(sub(a2, a1), sub(b2, a1));
  const double d3 = cross2(sub(b2, b1), sub(a1, b1));
  const double d4 = cross2(sub(b2, b1), sub(a2, b1));
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
         ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

double segment_segment_distance(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                                const Vec2& b2) {
  if (segments_properly_cross(a1, a2, b1, b2)) return 0.0;
  return std::min(std::min(point_segment_distance(a1, b1, b2),
                           point_segment_distance(a2, b1, b2)),
                  std::min(point_segment_distance(b1, a1, a2),
                           point_segment_distance(b2, a1, a2)));
}

bool visible_exact(const Vec2& origin, const Vec2& p, const std::vector<OccluderDisc>& discs,
                   const std::vector<Segment>& walls, double range) {
  if (len2(sub(p, origin)) > range) return false;
  for (const auto& disc : discs) {
    if (point_segment_distance(disc.center, origin, p) < disc.radius) return false;
  }
  for (const auto& wall : walls) {
    if (segments_properly_cross(origin, p, wall.a, wall.b)) return false;
  }
  return true;
}

Tri classify_visibility(const Vec2& origin, const Vec2& p,
                        const std::vector<OccluderDisc>& discs,
                        const std::vector<Segment>& walls, double range, double margin) {
  bool blocked = false;
  bool marginal = false;

  const double distance = len2(sub(p, origin));
  if (distance >= range + margin) {
    blocked = true;
  } else if (distance > range - margin) {
    marginal = true;
  }

  for (const auto& disc : discs) {
    const double clearance = point_segment_distance(disc.center, origin, p) - disc.radius;
    if (clearance <= -margin) {
      blocked = true;
    } else if (clearance < margin) {
      marginal = true;
    }
  }

  for (const auto& wall : walls) {
    // Robustly blocked only when the sight line still crosses the wall
    // after the wall is trimmed by `margin` at both ends and p sits at
    // least `margin` past the crossing; anything nearer an edge is
    // Marginal.
    const Vec2 wall_dir = sub(wall.b, wall.a);
    const double wall_len = len2(wall_dir);
    bool robust_cross = false;
    if (wall_len > 2.0 * margin) {
      const double shrink = margin / wall_len;
      const Vec2 ta{wall.a.x + wall_dir.x * shrink, wall.a.y + wall_dir.y * shrink};
      const Vec2 tb{wall.b.x - wall_dir.x * shrink, wall.b.y - wall_dir.y * shrink};
      if (segments_properly_cross(origin, p, ta, tb)) {
        // Crossing parameter along origin->p via the standard line solve.
        const Vec2 r = sub(p, origin);
        const double denom = cross2(r, sub(tb, ta));
        if (denom != 0.0) {
          const double t = cross2(sub(ta, origin), sub(tb, ta)) / denom;
          if ((1.0 - t) * len2(r) >= margin) robust_cross = true;
        }
      }
    }
    if (robust_cross) {
      blocked = true;
    } else if (segment_segment_distance(origin, p, wall.a, wall.b) < margin) {
      marginal = true;
    }
  }

  if (blocked) return Tri::No;
  if (marginal) return Tri::Marginal;
  return Tri::Yes;
}

bool polygon_contains_crossing(const std::vector<Vec2>& vertices, const Vec2& p) {
  bool inside = false;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = vertices[j];
    const Vec2& b = vertices[i];
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_cross = b.x + (p.y - b.y) / (a.y - b.y) * (a.x - b.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double polygon_edge_distance(const std::vector<Vec2>& vertices, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    best = std::min(best, point_segment_distance(p, vertices[j], vertices[i]));
  }
  return best;
}

std::size_t subgoal_index(const Vec2& robot, const Vec2& leader, double follow_distance,
                          double delta_theta, const std::vector<Vec2>& others,
                          double tie_eps) {
  const Vec2 axis = sub(leader, robot);
  const double axis_len = len2(axis);
  const Vec2 unit{axis.x / axis_len, axis.y / axis_len};
  const int last = static_cast<int>(std::ceil(std::numbers::pi / (2.0 * delta_theta)));

  struct Entry {
    Vec2 point;
    double theta;
    double clearance;
  };
  std::vector<Entry> entries;
  for (int m = 0; m <= last; ++m) {
    const double theta = -std::numbers::pi / 4.0 + m * delta_theta;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Vec2 dir{unit.x * c - unit.y * s, unit.x * s + unit.y * c};
    const Vec2 point{leader.x - dir.x * follow_distance, leader.y - dir.y * follow_distance};
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& h : others) clearance = std::min(clearance, len2(sub(point, h)));
    entries.push_back({point, theta, clearance});
  }

  double top = -std::numeric_limits<double>::infinity();
  for (const auto& e : entries) top = std::max(top, e.clearance);

  std::size_t winner = 0;
  bool have = false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].clearance >= top - tie_eps)) continue;
    if (!have || std::abs(entries[i].theta) < std::abs(entries[winner].theta)) {
      winner = i;
      have = true;
    }
  }
  return winner;
}

Tri disc_rect_overlap(const Vec2& disc_center, double disc_radius, const Vec2& rect_center,
                      double half_length, double half_width, const Vec2& axis_unit,
                      double margin) {
  const auto local = [&](const Vec2& q) {
    const Vec2 d = sub(q, rect_center);
    return Vec2{dot2(d, axis_unit), cross2(axis_unit, d)};
  };
  const auto inside = [&](const Vec2& q) {
    const Vec2 uv = local(q);
    return std::abs(uv.x) <= half_length && std::abs(uv.y) <= half_width;
  };

  // Exact clearance between the disc center and the rectangle, for the
  // tangency guard.
  const Vec2 uv = local(disc_center);
  const double du = std::max(std::abs(uv.x) - half_length, 0.0);
  const double dv = std::max(std::abs(uv.y) - half_width, 0.0);
  const double exact = std::sqrt(du * du + dv * dv);
  if (std::abs(exact - disc_radius) < margin) return Tri::Marginal;

  bool hit = inside(disc_center);
  for (int k = 0; k < 360 && !hit; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 360.0;
    const Vec2 q{disc_center.x + disc_radius * std::cos(angle),
                 disc_center.y + disc_radius * std::sin(angle)};
    hit = inside(q);
  }
  return hit ? Tri::Yes : Tri::No;
}

}  // namespace oracle
