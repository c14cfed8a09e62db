#include "follownav/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace follownav {

TrajectoryLog::TrajectoryLog(double frame_rate_hz) : rate_(frame_rate_hz) {
  if (!(rate_ > 0.0) || !std::isfinite(rate_))
    throw ValidationError("trajectory frame rate must be positive");
}

void TrajectoryLog::add_sample(int id, AgentKind kind, long frame, const Vec2& position) {
  if (!is_finite(position))
    throw ValidationError("trajectory sample for agent " + std::to_string(id) +
                          " must be finite");
  Track& t = agents_[id];
  if (t.samples.empty()) {
    t.kind = kind;
  } else {
    const TrajectorySample& prev = t.samples.back();
    if (frame <= prev.frame)
      throw ValidationError("trajectory frames for agent " + std::to_string(id) +
                            " must be strictly increasing");
    double dt = static_cast<double>(frame - prev.frame) / rate_;
    double speed = dist(position, prev.position) / dt;
    if (speed > kMaxSpeed)
      throw ValidationError("trajectory for agent " + std::to_string(id) + " jumps at " +
                            std::to_string(speed) + " m/s near frame " +
                            std::to_string(frame) + "; data is implausible");
  }
  t.samples.push_back({frame, position});
}

std::vector<int> TrajectoryLog::agent_ids() const {
  std::vector<int> ids;
  ids.reserve(agents_.size());
  for (const auto& [id, _] : agents_) ids.push_back(id);
  return ids;
}

bool TrajectoryLog::has_agent(int id) const { return agents_.count(id) != 0; }

const TrajectoryLog::Track& TrajectoryLog::track(int id) const {
  auto it = agents_.find(id);
  if (it == agents_.end() || it->second.samples.empty())
    throw ValidationError("no samples for agent " + std::to_string(id));
  return it->second;
}

AgentKind TrajectoryLog::kind(int id) const { return track(id).kind; }
long TrajectoryLog::first_frame(int id) const { return track(id).samples.front().frame; }
long TrajectoryLog::last_frame(int id) const { return track(id).samples.back().frame; }
size_t TrajectoryLog::sample_count(int id) const { return track(id).samples.size(); }
const std::vector<TrajectorySample>& TrajectoryLog::samples(int id) const {
  return track(id).samples;
}

bool TrajectoryLog::active_at(int id, double frame) const {
  auto it = agents_.find(id);
  if (it == agents_.end() || it->second.samples.empty()) return false;
  return frame >= static_cast<double>(it->second.samples.front().frame) &&
         frame <= static_cast<double>(it->second.samples.back().frame);
}

Vec2 TrajectoryLog::position_at(int id, double frame) const {
  const Track& t = track(id);
  const auto& s = t.samples;
  if (!active_at(id, frame))
    throw ValidationError("agent " + std::to_string(id) + " is not active at frame " +
                          std::to_string(frame));
  // First sample with sample.frame >= frame.
  auto it = std::lower_bound(s.begin(), s.end(), frame,
                             [](const TrajectorySample& a, double f) {
                               return static_cast<double>(a.frame) < f;
                             });
  if (it == s.begin()) return it->position;
  if (static_cast<double>(it->frame) == frame) return it->position;
  const TrajectorySample& hi = *it;
  const TrajectorySample& lo = *(it - 1);
  double u = (frame - static_cast<double>(lo.frame)) /
             static_cast<double>(hi.frame - lo.frame);
  return lo.position + (hi.position - lo.position) * u;
}

Vec2 TrajectoryLog::history_mean_velocity(int id, long frame, int window) const {
  const Track& t = track(id);
  const auto& s = t.samples;
  // Last sample at or before `frame`.
  auto it = std::upper_bound(s.begin(), s.end(), frame,
                             [](long f, const TrajectorySample& a) { return f < a.frame; });
  if (it == s.begin())
    throw ValidationError("agent " + std::to_string(id) + " has no samples at or before frame " +
                          std::to_string(frame));
  size_t end = static_cast<size_t>(it - s.begin());  // samples [0, end) usable
  size_t diffs = std::min<size_t>(static_cast<size_t>(std::max(window, 0)), end - 1);
  if (diffs == 0) return {0.0, 0.0};
  Vec2 sum;
  for (size_t k = end - diffs; k < end; ++k) {
    double dt = static_cast<double>(s[k].frame - s[k - 1].frame) / rate_;
    sum += (s[k].position - s[k - 1].position) / dt;
  }
  return sum / static_cast<double>(diffs);
}

double TrajectoryLog::history_mean_speed(int id, long frame, int window) const {
  const Track& t = track(id);
  const auto& s = t.samples;
  auto it = std::upper_bound(s.begin(), s.end(), frame,
                             [](long f, const TrajectorySample& a) { return f < a.frame; });
  if (it == s.begin())
    throw ValidationError("agent " + std::to_string(id) + " has no samples at or before frame " +
                          std::to_string(frame));
  size_t end = static_cast<size_t>(it - s.begin());
  size_t diffs = std::min<size_t>(static_cast<size_t>(std::max(window, 0)), end - 1);
  if (diffs == 0) return 0.0;
  double sum = 0.0;
  for (size_t k = end - diffs; k < end; ++k) {
    double dt = static_cast<double>(s[k].frame - s[k - 1].frame) / rate_;
    sum += dist(s[k].position, s[k - 1].position) / dt;
  }
  return sum / static_cast<double>(diffs);
}

bool TrajectoryLog::operator==(const TrajectoryLog& o) const {
  if (rate_ != o.rate_ || agents_.size() != o.agents_.size()) return false;
  for (const auto& [id, t] : agents_) {
    auto it = o.agents_.find(id);
    if (it == o.agents_.end()) return false;
    if (it->second.kind != t.kind || it->second.samples != t.samples) return false;
  }
  return true;
}

Vec2 mean_recent_velocity(const std::vector<Vec2>& positions, double dt, int window) {
  size_t n = positions.size();
  size_t diffs = n > 0 ? std::min<size_t>(static_cast<size_t>(std::max(window, 0)), n - 1) : 0;
  if (diffs == 0) return {0.0, 0.0};
  Vec2 sum;
  for (size_t k = n - diffs; k < n; ++k) sum += (positions[k] - positions[k - 1]) / dt;
  return sum / static_cast<double>(diffs);
}

double mean_recent_speed(const std::vector<Vec2>& positions, double dt, int window) {
  size_t n = positions.size();
  size_t diffs = n > 0 ? std::min<size_t>(static_cast<size_t>(std::max(window, 0)), n - 1) : 0;
  if (diffs == 0) return 0.0;
  double sum = 0.0;
  for (size_t k = n - diffs; k < n; ++k) sum += dist(positions[k], positions[k - 1]) / dt;
  return sum / static_cast<double>(diffs);
}

}  // namespace follownav
