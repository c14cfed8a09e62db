#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "follownav/config.hpp"
#include "follownav/leader.hpp"
#include "follownav/scene.hpp"
#include "follownav/subgoal.hpp"
#include "follownav/trajectory.hpp"

namespace follownav {

enum class Mode { Framework, RawSf };

const char* to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& name);

enum class RunStatus { Reached, Timeout };

struct TickAgentRow {
  int id = 0;
  AgentState state;
  bool colliding = false;  // overlaps the robot disc at this tick (planning radii)
};

// Snapshot of one tick: the robot state, the decision taken at that state,
// and every active crowd member.
struct TickRow {
  long tick = 0;
  AgentState robot;
  std::optional<int> leader_id;  // agent actually followed (group-adjusted)
  Vec2 subgoal;
  double v_max = 0.0;
  bool robot_collision = false;  // any crowd overlap (planning radii)
  bool wall_contact = false;     // robot disc touches an obstacle segment
  std::vector<TickAgentRow> agents;  // ascending id

  bool operator==(const TickRow& o) const;
};

struct RunRecord {
  Mode mode = Mode::Framework;
  std::uint64_t seed = 0;
  double dt = 1.0 / 30.0;
  RunStatus status = RunStatus::Timeout;
  std::vector<Agent> agents;    // registry of everyone ever active, ascending id
  std::vector<TickRow> ticks;   // tick 0 .. final, length = final tick + 1
  std::vector<std::vector<LeaderScore>> score_history;  // optional, per tick

  bool operator==(const RunRecord& o) const;
};

// Live state between ticks. Crowd, histories and the incumbent leader are
// all snapshots at `tick`; step() never mutates its input.
struct SimulationState {
  long tick = 0;
  AgentState robot;
  Crowd crowd;                               // ascending id
  std::map<int, std::vector<Vec2>> histories;  // observed positions, oldest first
  std::optional<int> previous_leader;        // selection-level id for hysteresis
  bool finished = false;
  RunStatus status = RunStatus::Timeout;
};

// Crowd snapshot plus decision for the state's tick; what a TickRow records.
struct TickDecision {
  std::optional<int> leader_id;        // group-adjusted, the agent followed
  std::optional<int> selected_leader;  // raw selection, carries hysteresis
  Vec2 subgoal;
  double v_max = 0.0;
  std::vector<LeaderScore> scores;
};

SimulationState init_state(const Scene& scene, const TrajectoryLog& log,
                           const FrameworkConfig& config, std::mt19937_64& rng);

// Decision the robot takes from this state (pure; also used to fill rows).
TickDecision decide_tick(const SimulationState& state, const Scene& scene,
                         const FrameworkConfig& config, Mode mode);

// Advances one tick: applies `decision` to move the robot, advances the
// playback crowd to tick+1 (drawing noise from rng), and sets finished on
// goal arrival or timeout.
SimulationState step(const SimulationState& state, const TickDecision& decision,
                     const Scene& scene, const TrajectoryLog& log,
                     const FrameworkConfig& config, std::mt19937_64& rng,
                     long max_ticks);

// Runs a single seeded episode until arrival or timeout. The only random
// element is the optional playback position noise; sigma zero makes the
// result independent of the seed.
RunRecord run(const Scene& scene, const TrajectoryLog& log, const FrameworkConfig& config,
              Mode mode, std::uint64_t seed, bool keep_scores = false);

// Trials k = 0..n-1 run with seed base_seed + k. Results are ordered by
// trial index and identical whether trials execute sequentially or on
// worker threads (jobs 0 = one per hardware thread).
std::vector<RunRecord> run_batch(const Scene& scene, const TrajectoryLog& log,
                                 const FrameworkConfig& config, Mode mode, int trials,
                                 std::uint64_t base_seed, int jobs = 0);

// Effective tick budget: explicit max_ticks, or three times the
// straight-line optimistic time when unset.
long effective_max_ticks(const Scene& scene, const FrameworkConfig& config);

}  // namespace follownav
