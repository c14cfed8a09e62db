#include "follownav/geometry.hpp"

#include <algorithm>

namespace follownav {

Vec2 closest_point_on_segment(const Vec2& p, const Segment& s) {
  Vec2 ab = s.b - s.a;
  double len_sq = norm_sq(ab);
  if (len_sq == 0.0) return s.a;
  double t = dot(p - s.a, ab) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return s.a + ab * t;
}

double dist_point_segment(const Vec2& p, const Segment& s) {
  return dist(p, closest_point_on_segment(p, s));
}

double dist_point_rect(const Vec2& p, const OrientedRect& rect) {
  // Express p in the rectangle frame; the perpendicular axis is the CCW
  // normal of the long axis.
  Vec2 d = p - rect.center;
  double u = dot(d, rect.axis);
  double v = cross(rect.axis, d);
  double dx = std::max(std::abs(u) - rect.half_length, 0.0);
  double dy = std::max(std::abs(v) - rect.half_width, 0.0);
  return std::sqrt(dx * dx + dy * dy);
}

std::optional<double> ray_circle_first_hit(const Vec2& origin, const Vec2& dir,
                                           const Vec2& center, double radius) {
  Vec2 oc = origin - center;
  // dir is unit length: t^2 + 2 b t + c = 0.
  double b = dot(oc, dir);
  double c = norm_sq(oc) - radius * radius;
  double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  double s = std::sqrt(disc);
  double t0 = -b - s;
  double t1 = -b + s;
  if (t0 >= 0.0) return t0;
  if (t1 >= 0.0) return t1;  // origin inside the circle
  return std::nullopt;
}

std::optional<double> ray_segment_first_hit(const Vec2& origin, const Vec2& dir,
                                            const Segment& seg) {
  Vec2 v = seg.b - seg.a;
  double denom = cross(dir, v);
  Vec2 w = seg.a - origin;
  if (denom == 0.0) {
    // Parallel. Collinear overlap: report the nearest endpoint ahead.
    if (cross(w, dir) != 0.0) return std::nullopt;
    double ta = dot(seg.a - origin, dir);
    double tb = dot(seg.b - origin, dir);
    double lo = std::min(ta, tb), hi = std::max(ta, tb);
    if (hi < 0.0) return std::nullopt;
    return std::max(lo, 0.0);
  }
  double t = cross(w, v) / denom;   // along the ray
  double u = cross(w, dir) / denom; // along the segment
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

static int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
  double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

static bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  int d1 = orientation_sign(s2.a, s2.b, s1.a);
  int d2 = orientation_sign(s2.a, s2.b, s1.b);
  int d3 = orientation_sign(s1.a, s1.b, s2.a);
  int d4 = orientation_sign(s1.a, s1.b, s2.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_collinear(s2.a, s2.b, s1.a)) return true;
  if (d2 == 0 && on_segment_collinear(s2.a, s2.b, s1.b)) return true;
  if (d3 == 0 && on_segment_collinear(s1.a, s1.b, s2.a)) return true;
  if (d4 == 0 && on_segment_collinear(s1.a, s1.b, s2.b)) return true;
  return false;
}

bool segment_hits_disc(const Vec2& a, const Vec2& b, const Vec2& center, double radius) {
  return dist_point_segment(center, Segment{a, b}) < radius;
}

}  // namespace follownav
