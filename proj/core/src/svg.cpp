#include "follownav/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "follownav/kv.hpp"

namespace follownav {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPad = 24.0;
constexpr long kMarkerStride = 15;  // leader/subgoal markers every half second

struct Mapper {
  Vec2 world_min;
  double k = 1.0;
  double height = 0.0;

  double x(double wx) const { return (wx - world_min.x) * k + kPad; }
  double y(double wy) const { return height - ((wy - world_min.y) * k + kPad); }
};

std::string num(double v) { return kv::format_double(v); }

const char* kind_color(AgentKind kind) {
  switch (kind) {
    case AgentKind::Bicycle: return "#e76f51";
    case AgentKind::Car: return "#7b2cbf";
    default: return "#2a9d8f";
  }
}

}  // namespace

std::string render_svg(const RunRecord& record, const Scene* scene) {
  // Trajectories keyed by agent id (robot under -1), in tick order.
  std::map<int, std::vector<Vec2>> paths;
  std::vector<Vec2> subgoals;
  std::vector<Vec2> leader_marks;
  for (const auto& row : record.ticks) {
    paths[-1].push_back(row.robot.position);
    for (const auto& agent_row : row.agents) {
      paths[agent_row.id].push_back(agent_row.state.position);
    }
    const bool sampled = row.tick % kMarkerStride == 0 || &row == &record.ticks.back();
    if (!sampled) continue;
    subgoals.push_back(row.subgoal);
    if (row.leader_id) {
      for (const auto& agent_row : row.agents) {
        if (agent_row.id == *row.leader_id) {
          leader_marks.push_back(agent_row.state.position);
          break;
        }
      }
    }
  }

  Bounds box{{0.0, 0.0}, {0.0, 0.0}};
  bool first = true;
  auto grow = [&](const Vec2& p) {
    if (first) {
      box = {p, p};
      first = false;
    } else {
      box.expand(p);
    }
  };
  for (const auto& [id, pts] : paths) {
    for (const auto& p : pts) grow(p);
  }
  for (const auto& p : subgoals) grow(p);
  if (scene) {
    for (const auto& s : scene->obstacles) {
      grow(s.a);
      grow(s.b);
    }
    grow(scene->goal);
    grow(scene->robot_start);
  }
  if (first) grow({0.0, 0.0});

  Mapper map;
  map.world_min = box.min;
  const double ext_x = std::max(box.max.x - box.min.x, 0.5);
  const double ext_y = std::max(box.max.y - box.min.y, 0.5);
  map.k = (kWidth - 2.0 * kPad) / ext_x;
  map.height = ext_y * map.k + 2.0 * kPad;

  std::map<int, AgentKind> kinds;
  for (const auto& agent : record.agents) kinds[agent.id] = agent.kind;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(kWidth) << ' '
      << num(map.height) << "\" width=\"" << num(kWidth) << "\" height=\"" << num(map.height)
      << "\">\n";
  out << "<defs>\n";
  for (const auto& [id, pts] : paths) {
    const Vec2 a = pts.front();
    const Vec2 b = pts.back();
    const char* color = id < 0 ? "#1d6fd1" : kind_color(kinds.count(id) ? kinds[id]
                                                                        : AgentKind::Pedestrian);
    out << "<linearGradient id=\"tgrad" << (id < 0 ? "r" : std::to_string(id))
        << "\" gradientUnits=\"userSpaceOnUse\" x1=\"" << num(map.x(a.x)) << "\" y1=\""
        << num(map.y(a.y)) << "\" x2=\"" << num(map.x(b.x)) << "\" y2=\"" << num(map.y(b.y))
        << "\">";
    out << "<stop offset=\"0\" stop-color=\"" << color << "\" stop-opacity=\"0.2\"/>";
    if (id < 0) {
      out << "<stop offset=\"1\" stop-color=\"#d11d3e\"/>";
    } else {
      out << "<stop offset=\"1\" stop-color=\"" << color << "\"/>";
    }
    out << "</linearGradient>\n";
  }
  out << "</defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(map.height)
      << "\" fill=\"#ffffff\"/>\n";

  if (scene) {
    for (const auto& s : scene->obstacles) {
      out << "<line x1=\"" << num(map.x(s.a.x)) << "\" y1=\"" << num(map.y(s.a.y))
          << "\" x2=\"" << num(map.x(s.b.x)) << "\" y2=\"" << num(map.y(s.b.y))
          << "\" stroke=\"#333333\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
    out << "<circle cx=\"" << num(map.x(scene->goal.x)) << "\" cy=\"" << num(map.y(scene->goal.y))
        << "\" r=\"6\" fill=\"none\" stroke=\"#d11d3e\" stroke-width=\"2\"/>\n";
  }

  // Crowd first, robot last so it draws on top; exactly one polyline each.
  for (const auto& [id, pts] : paths) {
    if (id < 0) continue;
    out << "<polyline fill=\"none\" stroke=\"url(#tgrad" << id << ")\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << num(map.x(pts[i].x)) << ',' << num(map.y(pts[i].y));
    }
    out << "\"/>\n";
  }
  {
    const auto& pts = paths[-1];
    out << "<polyline fill=\"none\" stroke=\"url(#tgradr)\" stroke-width=\"2.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << num(map.x(pts[i].x)) << ',' << num(map.y(pts[i].y));
    }
    out << "\"/>\n";
  }

  for (const auto& p : leader_marks) {
    out << "<circle cx=\"" << num(map.x(p.x)) << "\" cy=\"" << num(map.y(p.y))
        << "\" r=\"4\" fill=\"none\" stroke=\"#f4a261\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : subgoals) {
    const double cx = map.x(p.x);
    const double cy = map.y(p.y);
    out << "<path d=\"M" << num(cx - 3) << ' ' << num(cy - 3) << " L" << num(cx + 3) << ' '
        << num(cy + 3) << " M" << num(cx - 3) << ' ' << num(cy + 3) << " L" << num(cx + 3)
        << ' ' << num(cy - 3) << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace follownav
