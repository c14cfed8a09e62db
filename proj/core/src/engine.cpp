#include "follownav/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "follownav/groups.hpp"
#include "follownav/social_force.hpp"

namespace follownav {

const char* to_string(Mode mode) {
  return mode == Mode::Framework ? "framework" : "raw-sf";
}

std::optional<Mode> mode_from_string(const std::string& name) {
  if (name == "framework") return Mode::Framework;
  if (name == "raw-sf") return Mode::RawSf;
  return std::nullopt;
}

bool TickRow::operator==(const TickRow& o) const {
  auto agents_equal = [](const std::vector<TickAgentRow>& a,
                         const std::vector<TickAgentRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].id != b[i].id || !(a[i].state.position == b[i].state.position) ||
          !(a[i].state.velocity == b[i].state.velocity) ||
          a[i].colliding != b[i].colliding)
        return false;
    return true;
  };
  return tick == o.tick && robot.position == o.robot.position &&
         robot.velocity == o.robot.velocity && leader_id == o.leader_id &&
         subgoal == o.subgoal && v_max == o.v_max &&
         robot_collision == o.robot_collision && wall_contact == o.wall_contact &&
         agents_equal(agents, o.agents);
}

bool RunRecord::operator==(const RunRecord& o) const {
  auto reg_equal = [](const std::vector<Agent>& a, const std::vector<Agent>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].id != b[i].id || a[i].kind != b[i].kind || a[i].radius != b[i].radius)
        return false;
    return true;
  };
  return mode == o.mode && seed == o.seed && dt == o.dt && status == o.status &&
         reg_equal(agents, o.agents) && ticks == o.ticks;
}

long effective_max_ticks(const Scene& scene, const FrameworkConfig& config) {
  if (config.max_ticks > 0) return config.max_ticks;
  double optimistic = dist(scene.robot_start, scene.goal) / config.robot_speed_limit;
  long ticks = static_cast<long>(std::ceil(3.0 * optimistic / config.dt));
  return std::max<long>(ticks, 1);
}

namespace {

// Playback runs at one log frame per simulation tick; ingestion resamples
// to the tick rate, so anything else here is a wiring mistake.
void check_rates(const TrajectoryLog& log, const FrameworkConfig& config) {
  if (log.empty()) return;
  if (std::abs(log.frame_rate() * config.dt - 1.0) > 1e-9)
    throw ValidationError("trajectory log rate does not match the simulation rate; "
                          "resample on ingestion");
}

struct ReactiveTargets {
  std::map<int, Vec2> goal;
  std::map<int, double> speed;
};

ReactiveTargets reactive_targets(const TrajectoryLog& log, const FrameworkConfig& config) {
  ReactiveTargets t;
  for (int id : log.agent_ids()) {
    const auto& samples = log.samples(id);
    t.goal[id] = samples.back().position;
    double speed = log.history_mean_speed(id, samples.back().frame,
                                          static_cast<int>(samples.size()));
    t.speed[id] = speed > 0.05 ? speed : config.v_pref;
  }
  return t;
}

void trim_history(std::vector<Vec2>& h, int window) {
  size_t keep = static_cast<size_t>(window) + 1;
  if (h.size() > keep) h.erase(h.begin(), h.end() - static_cast<long>(keep));
}

// Builds the crowd for `tick` from playback (or carries reactive agents
// forward), updating histories in place. Noise draws are ordered by agent
// id, so equal seeds give equal crowds.
Crowd advance_crowd(const SimulationState& prev, long tick, const Scene& scene,
                    const TrajectoryLog& log, const FrameworkConfig& config,
                    std::mt19937_64& rng) {
  Crowd crowd;
  if (log.empty()) return crowd;
  double frame = static_cast<double>(tick);

  if (config.reactive_humans) {
    ReactiveTargets targets = reactive_targets(log, config);
    for (int id : log.agent_ids()) {
      if (static_cast<double>(log.first_frame(id)) > frame) continue;
      const TrackedAgent* before = nullptr;
      for (const TrackedAgent& a : prev.crowd)
        if (a.agent.id == id) { before = &a; break; }
      TrackedAgent agent;
      agent.agent = {id, log.kind(id), config.agent_radius};
      if (!before) {
        agent.state.position = log.position_at(id, static_cast<double>(log.first_frame(id)));
        agent.state.velocity = {0.0, 0.0};
      } else if (dist(before->state.position, targets.goal[id]) <= kGoalDeadzone) {
        agent.state.position = before->state.position;  // parked at its goal
        agent.state.velocity = {0.0, 0.0};
      } else {
        std::vector<SfNeighbor> neighbors;
        neighbors.push_back({prev.robot.position, config.agent_radius});
        for (const TrackedAgent& other : prev.crowd)
          if (other.agent.id != id)
            neighbors.push_back({other.state.position, other.agent.radius});
        agent.state = sf_step(before->state, config.agent_radius, targets.goal[id],
                              targets.speed[id], neighbors, scene.obstacles, config.sf,
                              config.dt);
      }
      crowd.push_back(std::move(agent));
    }
    return crowd;
  }

  std::normal_distribution<double> noise(0.0, config.playback_noise_sigma);
  for (int id : log.agent_ids()) {
    if (!log.active_at(id, frame)) continue;
    TrackedAgent agent;
    agent.agent = {id, log.kind(id), config.agent_radius};
    Vec2 clean = log.position_at(id, frame);
    Vec2 before = log.active_at(id, frame - 1.0) ? log.position_at(id, frame - 1.0) : clean;
    agent.state.velocity = (clean - before) / config.dt;
    agent.state.position = clean;
    if (config.playback_noise_sigma > 0.0) {
      agent.state.position.x += noise(rng);
      agent.state.position.y += noise(rng);
    }
    crowd.push_back(std::move(agent));
  }
  return crowd;
}

void update_histories(std::map<int, std::vector<Vec2>>& histories, Crowd& crowd,
                      const FrameworkConfig& config) {
  std::map<int, std::vector<Vec2>> next;
  for (TrackedAgent& agent : crowd) {
    std::vector<Vec2>& h = next[agent.agent.id];
    auto it = histories.find(agent.agent.id);
    if (it != histories.end()) h = std::move(it->second);
    h.push_back(agent.state.position);
    trim_history(h, config.history_window);
    agent.recent_positions = h;
  }
  histories = std::move(next);
}

bool robot_hits_agent(const AgentState& robot, const TrackedAgent& agent, double robot_radius) {
  return dist(robot.position, agent.state.position) < robot_radius + agent.agent.radius;
}

bool robot_hits_wall(const AgentState& robot, const Scene& scene, double robot_radius) {
  for (const Segment& wall : scene.obstacles)
    if (dist_point_segment(robot.position, wall) < robot_radius) return true;
  return false;
}

TickRow make_row(const SimulationState& state, const TickDecision& decision,
                 const Scene& scene, const FrameworkConfig& config) {
  TickRow row;
  row.tick = state.tick;
  row.robot = state.robot;
  row.leader_id = decision.leader_id;
  row.subgoal = decision.subgoal;
  row.v_max = decision.v_max;
  row.wall_contact = robot_hits_wall(state.robot, scene, config.agent_radius);
  for (const TrackedAgent& agent : state.crowd) {
    TickAgentRow ar;
    ar.id = agent.agent.id;
    ar.state = agent.state;
    ar.colliding = robot_hits_agent(state.robot, agent, config.agent_radius);
    row.robot_collision = row.robot_collision || ar.colliding;
    row.agents.push_back(ar);
  }
  return row;
}

bool crossed_goal(const Vec2& from, const Vec2& to, const Vec2& goal, double radius) {
  return dist_point_segment(goal, Segment{from, to}) <= radius;
}

}  // namespace

SimulationState init_state(const Scene& scene, const TrajectoryLog& log,
                           const FrameworkConfig& config, std::mt19937_64& rng) {
  check_rates(log, config);
  SimulationState state;
  state.tick = 0;
  state.robot = {scene.robot_start, scene.robot_start_velocity};
  SimulationState empty;
  empty.robot = state.robot;
  state.crowd = advance_crowd(empty, 0, scene, log, config, rng);
  update_histories(state.histories, state.crowd, config);
  if (dist(state.robot.position, scene.goal) <= config.arrival_radius) {
    state.finished = true;
    state.status = RunStatus::Reached;
  }
  return state;
}

TickDecision decide_tick(const SimulationState& state, const Scene& scene,
                         const FrameworkConfig& config, Mode mode) {
  TickDecision out;
  if (mode == Mode::RawSf || state.crowd.empty()) {
    out.subgoal = scene.goal;
    out.v_max = config.robot_speed_limit;
    if (mode == Mode::Framework) {
      // Keep the score table shape in framework mode even with no crowd.
      SelectionResult sel = select_leader(state.robot, state.crowd, scene,
                                          state.previous_leader, config);
      out.scores = std::move(sel.scores);
    }
    return out;
  }
  GroupAssignment groups = detect_groups(state.crowd, config);
  SelectionResult sel = select_leader(state.robot, state.crowd, scene,
                                      state.previous_leader, config);
  LeaderDecision decision = decide(state.robot, sel.leader, groups, state.crowd,
                                   config, scene.goal);
  out.leader_id = decision.leader_id;
  out.subgoal = decision.subgoal;
  out.v_max = decision.speed_limit;
  out.scores = std::move(sel.scores);
  // Hysteresis tracks the *selected* leader, before group adjustment.
  out.selected_leader = sel.leader;
  return out;
}

SimulationState step(const SimulationState& state, const TickDecision& decision,
                     const Scene& scene, const TrajectoryLog& log,
                     const FrameworkConfig& config, std::mt19937_64& rng,
                     long max_ticks) {
  SimulationState next;
  next.tick = state.tick + 1;
  next.previous_leader = decision.selected_leader;

  std::vector<SfNeighbor> neighbors;
  neighbors.reserve(state.crowd.size());
  for (const TrackedAgent& agent : state.crowd)
    neighbors.push_back({agent.state.position, agent.agent.radius});
  next.robot = sf_step(state.robot, config.agent_radius, decision.subgoal,
                       decision.v_max, neighbors, scene.obstacles, config.sf,
                       config.dt);

  next.crowd = advance_crowd(state, next.tick, scene, log, config, rng);
  next.histories = state.histories;
  update_histories(next.histories, next.crowd, config);

  if (crossed_goal(state.robot.position, next.robot.position, scene.goal,
                   config.arrival_radius)) {
    next.finished = true;
    next.status = RunStatus::Reached;
  } else if (next.tick >= max_ticks) {
    next.finished = true;
    next.status = RunStatus::Timeout;
  }
  return next;
}

RunRecord run(const Scene& scene, const TrajectoryLog& log, const FrameworkConfig& config,
              Mode mode, std::uint64_t seed, bool keep_scores) {
  config.validate();
  scene.validate();
  long max_ticks = effective_max_ticks(scene, config);

  std::mt19937_64 rng(seed);
  RunRecord record;
  record.mode = mode;
  record.seed = seed;
  record.dt = config.dt;

  std::map<int, Agent> registry;
  SimulationState state = init_state(scene, log, config, rng);
  while (true) {
    TickDecision decision = decide_tick(state, scene, config, mode);
    TickRow row = make_row(state, decision, scene, config);
    for (const TrackedAgent& agent : state.crowd) registry.emplace(agent.agent.id, agent.agent);
    record.ticks.push_back(std::move(row));
    if (keep_scores) record.score_history.push_back(decision.scores);
    if (state.finished) break;
    state = step(state, decision, scene, log, config, rng, max_ticks);
  }
  record.status = state.status;
  for (const auto& [id, agent] : registry) record.agents.push_back(agent);
  return record;
}

std::vector<RunRecord> run_batch(const Scene& scene, const TrajectoryLog& log,
                                 const FrameworkConfig& config, Mode mode, int trials,
                                 std::uint64_t base_seed, int jobs) {
  if (trials < 0) throw ValidationError("trial count must be non-negative");
  std::vector<RunRecord> records(static_cast<size_t>(trials));
  if (trials == 0) return records;

  unsigned hw = std::thread::hardware_concurrency();
  int workers = jobs > 0 ? jobs : static_cast<int>(hw ? hw : 1);
  workers = std::min<int>(workers, trials);

  if (workers <= 1) {
    for (int k = 0; k < trials; ++k)
      records[static_cast<size_t>(k)] =
          run(scene, log, config, mode, base_seed + static_cast<std::uint64_t>(k));
    return records;
  }

  std::atomic<int> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      int k = cursor.fetch_add(1);
      if (k >= trials) return;
      try {
        records[static_cast<size_t>(k)] =
            run(scene, log, config, mode, base_seed + static_cast<std::uint64_t>(k));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace follownav
