#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace follownav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline double norm(const Vec2& v) { return std::sqrt(norm_sq(v)); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Unit vector of v; zero vector maps to zero (callers guard where direction
// is required).
inline Vec2 normalized(const Vec2& v) {
  double n = norm(v);
  if (n == 0.0) return {0.0, 0.0};
  return v / n;
}

// Counterclockwise rotation by angle (radians).
inline Vec2 rotated(const Vec2& v, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

struct Segment {
  Vec2 a;
  Vec2 b;
};

// Axis-aligned rectangle, min corner <= max corner.
struct Bounds {
  Vec2 min;
  Vec2 max;

  bool contains(const Vec2& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  void expand(const Vec2& p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }
};

// Rectangle with arbitrary orientation: center, half extents along the local
// axes, and the unit direction of the local +x axis (the long axis).
struct OrientedRect {
  Vec2 center;
  double half_length = 0.0;  // along axis
  double half_width = 0.0;   // across axis
  Vec2 axis{1.0, 0.0};       // unit
};

Vec2 closest_point_on_segment(const Vec2& p, const Segment& s);
double dist_point_segment(const Vec2& p, const Segment& s);

// Distance from point to the boundary-or-interior of an oriented rectangle;
// zero when the point is inside.
double dist_point_rect(const Vec2& p, const OrientedRect& rect);

// Smallest t >= 0 with origin + t*dir on the circle, dir unit length.
std::optional<double> ray_circle_first_hit(const Vec2& origin, const Vec2& dir,
                                           const Vec2& center, double radius);

// Smallest t >= 0 with origin + t*dir on the segment, dir unit length.
std::optional<double> ray_segment_first_hit(const Vec2& origin, const Vec2& dir,
                                            const Segment& seg);

bool segments_intersect(const Segment& s1, const Segment& s2);

// True when the open segment from a to b passes through the disc
// (strictly closer than radius to center). Endpoints on the disc rim do
// not count.
bool segment_hits_disc(const Vec2& a, const Vec2& b, const Vec2& center, double radius);

}  // namespace follownav
