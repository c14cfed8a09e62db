// Microbenchmarks for the hot paths: visibility region construction, one
// social-force integration step, one full leader-selection pass, and an
// end-to-end episode.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "follownav/engine.hpp"
#include "follownav/groups.hpp"
#include "follownav/leader.hpp"
#include "follownav/social_force.hpp"
#include "follownav/visibility.hpp"

namespace {

using namespace follownav;

Crowd make_crowd(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pos(-8.0, 8.0);
  std::uniform_real_distribution<double> vel(-1.5, 1.5);
  Crowd crowd;
  for (int i = 0; i < n; ++i) {
    TrackedAgent t;
    t.agent.id = i;
    t.agent.kind = AgentKind::Pedestrian;
    t.state.position = {pos(rng), pos(rng)};
    if (norm(t.state.position) < 1.5) t.state.position.x += 3.0;  // keep the origin clear
    t.state.velocity = {vel(rng), vel(rng)};
    for (int k = 30; k >= 0; --k) {
      t.recent_positions.push_back(t.state.position - t.state.velocity * (k / 30.0));
    }
    crowd.push_back(t);
  }
  return crowd;
}

void BM_VisibleRegion(benchmark::State& state) {
  const Crowd crowd = make_crowd(static_cast<int>(state.range(0)), 7);
  std::vector<OccluderDisc> discs;
  for (const auto& t : crowd) discs.push_back({t.state.position, t.agent.radius});
  std::vector<Segment> walls{{{-9.0, -9.0}, {9.0, -9.0}}, {{-9.0, 9.0}, {9.0, 9.0}}};
  for (auto _ : state) {
    auto region = build_visible_region({0.0, 0.0}, discs, walls, 10.0, 720);
    benchmark::DoNotOptimize(region);
  }
}
BENCHMARK(BM_VisibleRegion)->Arg(5)->Arg(20)->Arg(50);

void BM_SfStep(benchmark::State& state) {
  const Crowd crowd = make_crowd(static_cast<int>(state.range(0)), 11);
  std::vector<SfNeighbor> neighbors;
  for (const auto& t : crowd) neighbors.push_back({t.state.position, t.agent.radius});
  std::vector<Segment> walls{{{-9.0, -9.0}, {9.0, -9.0}}};
  AgentState robot;
  robot.position = {0.0, 0.0};
  SfParams params;
  for (auto _ : state) {
    auto next = sf_step(robot, 0.5, {9.0, 0.0}, 2.0, neighbors, walls, params, 1.0 / 30.0);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_SfStep)->Arg(5)->Arg(20)->Arg(50);

void BM_SelectLeader(benchmark::State& state) {
  const Crowd crowd = make_crowd(static_cast<int>(state.range(0)), 13);
  Scene scene;
  scene.robot_start = {0.0, 0.0};
  scene.goal = {20.0, 0.0};
  FrameworkConfig config;
  AgentState robot;
  for (auto _ : state) {
    auto result = select_leader(robot, crowd, scene, std::nullopt, config);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SelectLeader)->Arg(5)->Arg(20)->Arg(50);

void BM_FullRun(benchmark::State& state) {
  Scene scene;
  scene.robot_start = {0.0, 0.0};
  scene.goal = {15.0, 0.0};
  TrajectoryLog log(30.0);
  for (int id = 0; id < 6; ++id) {
    const double y = -2.5 + id;
    for (long f = 0; f <= 400; ++f) {
      log.add_sample(id, AgentKind::Pedestrian, f, {1.0 + 1.2 * f / 30.0, y});
    }
  }
  FrameworkConfig config;
  config.playback_noise_sigma = 0.0;
  for (auto _ : state) {
    auto record = run(scene, log, config, Mode::Framework, 0);
    benchmark::DoNotOptimize(record);
  }
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
