#pragma once

#include <map>
#include <vector>

#include "follownav/agents.hpp"
#include "follownav/errors.hpp"
#include "follownav/geometry.hpp"

namespace follownav {

struct TrajectorySample {
  long frame = 0;
  Vec2 position;

  bool operator==(const TrajectorySample& o) const {
    return frame == o.frame && position == o.position;
  }
};

// Recorded positions of every human in a scene, sampled at a fixed rate.
// Frames are integers; an agent exists exactly from its first to its last
// recorded frame and positions between samples are linear interpolations.
class TrajectoryLog {
 public:
  TrajectoryLog() = default;
  explicit TrajectoryLog(double frame_rate_hz);

  // Samples must arrive in strictly increasing frame order per agent.
  // Rejects implied speeds above kMaxSpeed (tracker glitches).
  void add_sample(int id, AgentKind kind, long frame, const Vec2& position);

  std::vector<int> agent_ids() const;  // ascending
  bool has_agent(int id) const;
  AgentKind kind(int id) const;
  long first_frame(int id) const;
  long last_frame(int id) const;
  size_t sample_count(int id) const;
  const std::vector<TrajectorySample>& samples(int id) const;

  bool active_at(int id, double frame) const;

  // Interpolated position; requires active_at(id, frame).
  Vec2 position_at(int id, double frame) const;

  // Mean of the min(window, available) most recent finite-difference
  // velocities taken from samples at or before `frame`. A single sample
  // has no finite differences and yields the zero vector (stationary).
  Vec2 history_mean_velocity(int id, long frame, int window) const;

  // Mean of the speeds (norms) of the same finite differences; zero for a
  // single sample.
  double history_mean_speed(int id, long frame, int window) const;

  double frame_rate() const { return rate_; }
  bool empty() const { return agents_.empty(); }

  bool operator==(const TrajectoryLog& o) const;

  // Upper bound on plausible recorded speed; faster jumps are data errors.
  static constexpr double kMaxSpeed = 15.0;  // [m/s]

 private:
  struct Track {
    AgentKind kind = AgentKind::Pedestrian;
    std::vector<TrajectorySample> samples;
  };

  const Track& track(int id) const;

  double rate_ = 30.0;  // [Hz]
  std::map<int, Track> agents_;
};

// History math over a dense position window (one position per tick of
// length dt, oldest first). Mirrors TrajectoryLog::history_mean_velocity
// for the live buffers kept by the simulation.
Vec2 mean_recent_velocity(const std::vector<Vec2>& positions, double dt, int window);
double mean_recent_speed(const std::vector<Vec2>& positions, double dt, int window);

}  // namespace follownav
