#include "follownav/metrics.hpp"

#include <cmath>
#include <map>

#include "json.hpp"

namespace follownav {

namespace {

// Headings for every agent at every tick: the direction of the last
// nonzero velocity seen at or before the tick, (1, 0) until one exists.
class HeadingTracker {
 public:
  Vec2 update(int id, const Vec2& velocity) {
    auto [it, inserted] = headings_.try_emplace(id, Vec2{1.0, 0.0});
    if (norm_sq(velocity) > 0.0) it->second = normalized(velocity);
    return it->second;
  }

 private:
  std::map<int, Vec2> headings_;
};

}  // namespace

OrientedRect footprint_rect(const Vec2& position, const Vec2& heading, AgentKind kind) {
  const Footprint fp = realistic_footprint(kind, 0.0);
  OrientedRect rect;
  rect.center = position;
  rect.half_length = fp.length / 2.0;
  rect.half_width = fp.width / 2.0;
  rect.axis = norm_sq(heading) > 0.0 ? normalized(heading) : Vec2{1.0, 0.0};
  return rect;
}

bool robot_overlaps_agent(const Vec2& robot_position, double robot_radius,
                          const Vec2& agent_position, const Vec2& agent_heading,
                          AgentKind kind, double agent_radius, CollisionRegime regime) {
  if (regime == CollisionRegime::Uniform || kind == AgentKind::Pedestrian) {
    return dist(robot_position, agent_position) < robot_radius + agent_radius;
  }
  const OrientedRect rect = footprint_rect(agent_position, agent_heading, kind);
  return dist_point_rect(robot_position, rect) < robot_radius;
}

std::vector<bool> collision_flags(const RunRecord& record, const FrameworkConfig& config,
                                  CollisionRegime regime) {
  std::vector<bool> flags(record.ticks.size(), false);
  HeadingTracker tracker;
  std::map<int, AgentKind> kinds;
  for (const auto& agent : record.agents) kinds[agent.id] = agent.kind;
  for (std::size_t t = 0; t < record.ticks.size(); ++t) {
    const TickRow& row = record.ticks[t];
    for (const auto& agent_row : row.agents) {
      const Vec2 heading = tracker.update(agent_row.id, agent_row.state.velocity);
      auto it = kinds.find(agent_row.id);
      const AgentKind kind = it == kinds.end() ? AgentKind::Pedestrian : it->second;
      if (robot_overlaps_agent(row.robot.position, config.agent_radius,
                               agent_row.state.position, heading, kind,
                               config.agent_radius, regime)) {
        flags[t] = true;
      }
    }
  }
  return flags;
}

TrialMetrics trial_metrics(const RunRecord& record, const FrameworkConfig& config) {
  TrialMetrics out;
  out.seed = record.seed;
  out.timeout = record.status == RunStatus::Timeout;
  if (record.ticks.empty()) return out;

  out.time_s = static_cast<double>(record.ticks.back().tick) * record.dt;

  HeadingTracker tracker;
  std::map<int, AgentKind> kinds;
  for (const auto& agent : record.agents) kinds[agent.id] = agent.kind;

  for (std::size_t t = 0; t < record.ticks.size(); ++t) {
    const TickRow& row = record.ticks[t];
    if (t > 0) out.distance_m += dist(record.ticks[t - 1].robot.position, row.robot.position);
    if (row.wall_contact) ++out.wall_contact_ticks;

    bool hit_uniform = false;
    bool hit_realistic = false;
    for (const auto& agent_row : row.agents) {
      const Vec2 heading = tracker.update(agent_row.id, agent_row.state.velocity);
      auto it = kinds.find(agent_row.id);
      const AgentKind kind = it == kinds.end() ? AgentKind::Pedestrian : it->second;
      if (robot_overlaps_agent(row.robot.position, config.agent_radius,
                               agent_row.state.position, heading, kind,
                               config.agent_radius, CollisionRegime::Uniform)) {
        hit_uniform = true;
        ++out.pairwise_uniform;
      }
      if (robot_overlaps_agent(row.robot.position, config.agent_radius,
                               agent_row.state.position, heading, kind,
                               config.agent_radius, CollisionRegime::Realistic)) {
        hit_realistic = true;
        ++out.pairwise_realistic;
      }
    }
    if (hit_uniform) ++out.tcc_uniform;
    if (hit_realistic) ++out.tcc_realistic;
  }
  return out;
}

MetricsReport summarize(const std::vector<RunRecord>& records,
                        const FrameworkConfig& config) {
  MetricsReport report;
  report.trial_count = static_cast<int>(records.size());
  if (records.empty()) return report;
  report.mode = to_string(records.front().mode);

  for (std::size_t i = 0; i < records.size(); ++i) {
    TrialMetrics tm = trial_metrics(records[i], config);
    tm.trial = static_cast<int>(i);
    report.any_timeout = report.any_timeout || tm.timeout;
    report.tcc_uniform += static_cast<double>(tm.tcc_uniform);
    report.tcc_realistic += static_cast<double>(tm.tcc_realistic);
    report.t_avg += tm.time_s;
    report.d_avg += tm.distance_m;
    report.per_trial.push_back(tm);
  }
  const double n = static_cast<double>(records.size());
  report.tcc_uniform /= n;
  report.tcc_realistic /= n;
  report.t_avg /= n;
  report.d_avg /= n;
  return report;
}

std::string metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json doc;
  doc["mode"] = report.mode;
  doc["trial_count"] = report.trial_count;
  doc["tcc_uniform"] = report.tcc_uniform;
  doc["tcc_realistic"] = report.tcc_realistic;
  doc["t_avg"] = report.t_avg;
  doc["d_avg"] = report.d_avg;
  doc["any_timeout"] = report.any_timeout;
  doc["per_trial"] = nlohmann::ordered_json::array();
  for (const auto& tm : report.per_trial) {
    nlohmann::ordered_json row;
    row["trial"] = tm.trial;
    row["seed"] = tm.seed;
    row["timeout"] = tm.timeout;
    row["time_s"] = tm.time_s;
    row["distance_m"] = tm.distance_m;
    row["tcc_uniform"] = tm.tcc_uniform;
    row["tcc_realistic"] = tm.tcc_realistic;
    row["pairwise_uniform"] = tm.pairwise_uniform;
    row["pairwise_realistic"] = tm.pairwise_realistic;
    row["wall_contact_ticks"] = tm.wall_contact_ticks;
    doc["per_trial"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace follownav
