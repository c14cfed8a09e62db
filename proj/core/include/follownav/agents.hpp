#pragma once

#include <algorithm>
#include <cctype>
#include <string>

#include "follownav/geometry.hpp"

namespace follownav {

enum class AgentKind { Pedestrian, Bicycle, Car };

inline const char* to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::Pedestrian: return "pedestrian";
    case AgentKind::Bicycle: return "bicycle";
    case AgentKind::Car: return "car";
  }
  return "pedestrian";
}

// Parses a kind label. Accepts the native names plus common dataset labels
// (Biker, Skater, Cart, Bus). Carts have no native category and ride as
// bicycles; that mapping and any unrecognized label set *approximate so the
// caller can warn once per label.
inline AgentKind kind_from_label(const std::string& label, bool* approximate = nullptr) {
  std::string s = label;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (approximate) *approximate = false;
  if (s == "pedestrian" || s == "skater") return AgentKind::Pedestrian;
  if (s == "bicycle" || s == "biker") return AgentKind::Bicycle;
  if (s == "car" || s == "bus") return AgentKind::Car;
  if (approximate) *approximate = true;
  return AgentKind::Bicycle;
}

// Footprint used by the realistic collision regime. Dimensions are those of
// typical road users: bicycles 1.9 x 1.0 m, cars 4.5 x 1.9 m, pedestrians a
// disc of the planning radius.
struct Footprint {
  enum class Shape { Disc, Rect } shape = Shape::Disc;
  double radius = 0.5;  // Disc only [m]
  double length = 0.0;  // Rect only, along heading [m]
  double width = 0.0;   // Rect only, across heading [m]
};

inline Footprint realistic_footprint(AgentKind kind, double pedestrian_radius) {
  Footprint f;
  switch (kind) {
    case AgentKind::Pedestrian:
      f.shape = Footprint::Shape::Disc;
      f.radius = pedestrian_radius;
      break;
    case AgentKind::Bicycle:
      f.shape = Footprint::Shape::Rect;
      f.length = 1.9;
      f.width = 1.0;
      break;
    case AgentKind::Car:
      f.shape = Footprint::Shape::Rect;
      f.length = 4.5;
      f.width = 1.9;
      break;
  }
  return f;
}

struct Agent {
  int id = 0;
  AgentKind kind = AgentKind::Pedestrian;
  double radius = 0.5;  // planning disc radius [m]
};

struct AgentState {
  Vec2 position;  // [m]
  Vec2 velocity;  // [m/s]
};

}  // namespace follownav
