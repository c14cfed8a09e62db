#include "follownav/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>
#include <vector>

#include "follownav/kv.hpp"

namespace follownav {

namespace {

using DoubleField = double FrameworkConfig::*;
using IntField = int FrameworkConfig::*;
using LongField = long FrameworkConfig::*;
using BoolField = bool FrameworkConfig::*;
using SfField = double SfParams::*;
using AnyField = std::variant<DoubleField, IntField, LongField, BoolField, SfField>;

struct FieldDef {
  const char* key;
  AnyField field;
};

// Declaration order here fixes the canonical serialization order.
const std::vector<FieldDef>& fields() {
  static const std::vector<FieldDef> defs = {
      {"v_pref", &FrameworkConfig::v_pref},
      {"observable_range", &FrameworkConfig::observable_range},
      {"follow_distance", &FrameworkConfig::follow_distance},
      {"robot_speed_limit", &FrameworkConfig::robot_speed_limit},
      {"dt", &FrameworkConfig::dt},
      {"history_window", &FrameworkConfig::history_window},
      {"agent_radius", &FrameworkConfig::agent_radius},
      {"tau_group_dis", &FrameworkConfig::tau_group_dis},
      {"tau_group_vel", &FrameworkConfig::tau_group_vel},
      {"tau_reach", &FrameworkConfig::tau_reach},
      {"tau_leader", &FrameworkConfig::tau_leader},
      {"tau_catchup", &FrameworkConfig::tau_catchup},
      {"v_catchup", &FrameworkConfig::v_catchup},
      {"leader_bonus", &FrameworkConfig::leader_bonus},
      {"w_head", &FrameworkConfig::w_head},
      {"w_vel", &FrameworkConfig::w_vel},
      {"w_pos", &FrameworkConfig::w_pos},
      {"delta_theta", &FrameworkConfig::delta_theta},
      {"ray_count", &FrameworkConfig::ray_count},
      {"sf_relaxation_time", &SfParams::relaxation_time},
      {"sf_repulsion_strength", &SfParams::repulsion_strength},
      {"sf_repulsion_range", &SfParams::repulsion_range},
      {"sf_obstacle_strength", &SfParams::obstacle_strength},
      {"sf_obstacle_range", &SfParams::obstacle_range},
      {"arrival_radius", &FrameworkConfig::arrival_radius},
      {"playback_noise_sigma", &FrameworkConfig::playback_noise_sigma},
      {"max_ticks", &FrameworkConfig::max_ticks},
      {"reactive_humans", &FrameworkConfig::reactive_humans},
  };
  return defs;
}

void assign(FrameworkConfig& cfg, const FieldDef& def, const kv::Value& value) {
  const std::string key = def.key;
  if (std::holds_alternative<DoubleField>(def.field)) {
    cfg.*std::get<DoubleField>(def.field) = kv::get_number(value, key);
  } else if (std::holds_alternative<SfField>(def.field)) {
    cfg.sf.*std::get<SfField>(def.field) = kv::get_number(value, key);
  } else if (std::holds_alternative<BoolField>(def.field)) {
    cfg.*std::get<BoolField>(def.field) = kv::get_bool(value, key);
  } else {
    double d = kv::get_number(value, key);
    if (d != std::floor(d))
      throw ValidationError(key + " must be an integer");
    if (std::holds_alternative<IntField>(def.field))
      cfg.*std::get<IntField>(def.field) = static_cast<int>(d);
    else
      cfg.*std::get<LongField>(def.field) = static_cast<long>(d);
  }
}

std::string emit(const FrameworkConfig& cfg, const FieldDef& def) {
  if (std::holds_alternative<DoubleField>(def.field))
    return kv::format_double(cfg.*std::get<DoubleField>(def.field));
  if (std::holds_alternative<SfField>(def.field))
    return kv::format_double(cfg.sf.*std::get<SfField>(def.field));
  if (std::holds_alternative<BoolField>(def.field))
    return cfg.*std::get<BoolField>(def.field) ? "true" : "false";
  if (std::holds_alternative<IntField>(def.field))
    return std::to_string(cfg.*std::get<IntField>(def.field));
  return std::to_string(cfg.*std::get<LongField>(def.field));
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ValidationError(std::string(name) + " must be positive");
}

void require_nonnegative(double v, const char* name) {
  if (v < 0.0 || !std::isfinite(v))
    throw ValidationError(std::string(name) + " must be non-negative");
}

}  // namespace

void FrameworkConfig::validate() const {
  require_positive(v_pref, "v_pref");
  require_positive(observable_range, "observable_range");
  require_positive(follow_distance, "follow_distance");
  require_positive(robot_speed_limit, "robot_speed_limit");
  require_positive(dt, "dt");
  if (history_window < 1) throw ValidationError("history_window must be at least 1");
  require_positive(agent_radius, "agent_radius");
  require_positive(tau_group_dis, "tau_group_dis");
  require_positive(tau_group_vel, "tau_group_vel");
  require_positive(tau_reach, "tau_reach");
  if (!std::isfinite(tau_leader)) throw ValidationError("tau_leader must be finite");
  require_positive(tau_catchup, "tau_catchup");
  require_positive(v_catchup, "v_catchup");
  require_nonnegative(leader_bonus, "leader_bonus");
  require_nonnegative(w_head, "w_head");
  require_nonnegative(w_vel, "w_vel");
  require_nonnegative(w_pos, "w_pos");
  if (!(w_head + w_vel + w_pos > 0.0))
    throw ValidationError("score weights must not all be zero");
  if (!(delta_theta > 0.0) || delta_theta > std::numbers::pi / 2.0)
    throw ValidationError("delta_theta must be in (0, pi/2]");
  if (ray_count < 8) throw ValidationError("ray_count must be at least 8");
  require_positive(sf.relaxation_time, "sf_relaxation_time");
  require_positive(sf.repulsion_strength, "sf_repulsion_strength");
  require_positive(sf.repulsion_range, "sf_repulsion_range");
  require_positive(sf.obstacle_strength, "sf_obstacle_strength");
  require_positive(sf.obstacle_range, "sf_obstacle_range");
  require_positive(arrival_radius, "arrival_radius");
  require_nonnegative(playback_noise_sigma, "playback_noise_sigma");
  if (max_ticks < 0) throw ValidationError("max_ticks must be non-negative");
}

void FrameworkConfig::normalize_weights() {
  double sum = w_head + w_vel + w_pos;
  if (!(sum > 0.0))
    throw ValidationError("score weights must not all be zero");
  // Idempotent: already-normalized weights pass through bit-identical, so
  // serialize/load round-trips exactly.
  if (std::abs(sum - 1.0) <= 1e-12) return;
  w_head /= sum;
  w_vel /= sum;
  w_pos /= sum;
}

void apply_config_entries(FrameworkConfig& config, const kv::Document& entries) {
  for (const auto& [key, value] : entries) {
    bool known = false;
    for (const FieldDef& def : fields()) {
      if (key == def.key) {
        assign(config, def, value);
        known = true;
        break;
      }
    }
    if (!known) throw ValidationError("unknown config key '" + key + "'");
  }
}

FrameworkConfig load_config(const std::string& text) {
  FrameworkConfig cfg;
  apply_config_entries(cfg, kv::parse(text));
  cfg.validate();
  cfg.normalize_weights();
  return cfg;
}

FrameworkConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

std::string serialize_config(const FrameworkConfig& config) {
  std::string out;
  for (const FieldDef& def : fields()) {
    out += def.key;
    out += " = ";
    out += emit(config, def);
    out += "\n";
  }
  return out;
}

bool operator==(const SfParams& a, const SfParams& b) {
  return a.relaxation_time == b.relaxation_time &&
         a.repulsion_strength == b.repulsion_strength &&
         a.repulsion_range == b.repulsion_range &&
         a.obstacle_strength == b.obstacle_strength &&
         a.obstacle_range == b.obstacle_range;
}

bool operator==(const FrameworkConfig& a, const FrameworkConfig& b) {
  return a.v_pref == b.v_pref && a.observable_range == b.observable_range &&
         a.follow_distance == b.follow_distance &&
         a.robot_speed_limit == b.robot_speed_limit && a.dt == b.dt &&
         a.history_window == b.history_window && a.agent_radius == b.agent_radius &&
         a.tau_group_dis == b.tau_group_dis && a.tau_group_vel == b.tau_group_vel &&
         a.tau_reach == b.tau_reach && a.tau_leader == b.tau_leader &&
         a.tau_catchup == b.tau_catchup && a.v_catchup == b.v_catchup &&
         a.leader_bonus == b.leader_bonus && a.w_head == b.w_head &&
         a.w_vel == b.w_vel && a.w_pos == b.w_pos &&
         a.delta_theta == b.delta_theta && a.ray_count == b.ray_count &&
         a.sf == b.sf && a.arrival_radius == b.arrival_radius &&
         a.playback_noise_sigma == b.playback_noise_sigma &&
         a.max_ticks == b.max_ticks && a.reactive_humans == b.reactive_humans;
}

}  // namespace follownav
