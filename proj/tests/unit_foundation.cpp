// Foundations: vector/segment/rectangle geometry, the key-value document
// parser, configuration loading, and agent kind mapping.

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "follownav/agents.hpp"
#include "follownav/config.hpp"
#include "follownav/geometry.hpp"
#include "follownav/kv.hpp"

using namespace follownav;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("vector operations") {
  Vec2 a{3.0, 4.0};
  CHECK(norm(a) == doctest::Approx(5.0));
  CHECK(dot(a, {1.0, 2.0}) == doctest::Approx(11.0));
  CHECK(cross({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(normalized(Vec2{0.0, 0.0}) == Vec2{0.0, 0.0});
  CHECK(norm(normalized(a)) == doctest::Approx(1.0));

  // Counterclockwise convention: +x rotated by pi/2 lands on +y.
  Vec2 r = rotated({1.0, 0.0}, kPi / 2.0);
  CHECK(r.x == doctest::Approx(0.0));
  CHECK(r.y == doctest::Approx(1.0));
}

TEST_CASE("point-segment distance") {
  Segment s{{0.0, 0.0}, {10.0, 0.0}};
  CHECK(dist_point_segment({5.0, 3.0}, s) == doctest::Approx(3.0));
  CHECK(dist_point_segment({-4.0, 3.0}, s) == doctest::Approx(5.0));
  CHECK(dist_point_segment({12.0, 0.0}, s) == doctest::Approx(2.0));
  CHECK(dist_point_segment({7.0, 0.0}, s) == doctest::Approx(0.0));

  // Degenerate segment behaves as a point.
  Segment pt{{1.0, 1.0}, {1.0, 1.0}};
  CHECK(dist_point_segment({4.0, 5.0}, pt) == doctest::Approx(5.0));
}

TEST_CASE("oriented rectangle distance") {
  // 4.5 x 1.9 rectangle centered at (3,0), long axis +x: the near face is
  // at x = 0.75, so the origin is 0.75 away.
  OrientedRect car;
  car.center = {3.0, 0.0};
  car.half_length = 2.25;
  car.half_width = 0.95;
  car.axis = {1.0, 0.0};
  CHECK(dist_point_rect({0.0, 0.0}, car) == doctest::Approx(0.75));

  // Robot at (2,0) is inside the rectangle: distance zero.
  CHECK(dist_point_rect({2.0, 0.0}, car) == doctest::Approx(0.0));

  // Corner distance.
  CHECK(dist_point_rect({6.25, 1.95}, car) == doctest::Approx(std::sqrt(2.0)));

  // Rotated 90 degrees the long axis lies along y.
  car.axis = {0.0, 1.0};
  CHECK(dist_point_rect({3.0, 3.0}, car) == doctest::Approx(0.75));
  CHECK(dist_point_rect({0.0, 0.0}, car) == doctest::Approx(3.0 - 0.95).epsilon(1e-9));
}

TEST_CASE("ray-circle first hit") {
  // From the origin toward +x against a disc at (3,0) r=0.5: enters at 2.5.
  auto t = ray_circle_first_hit({0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}, 0.5);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(2.5));

  // Miss.
  CHECK(!ray_circle_first_hit({0.0, 0.0}, {1.0, 0.0}, {3.0, 2.0}, 0.5).has_value());

  // Behind the origin only.
  CHECK(!ray_circle_first_hit({0.0, 0.0}, {1.0, 0.0}, {-3.0, 0.0}, 0.5).has_value());

  // Origin inside the circle: the exit crossing counts.
  auto exit = ray_circle_first_hit({0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, 2.0);
  REQUIRE(exit.has_value());
  CHECK(*exit == doctest::Approx(2.0));
}

TEST_CASE("ray-segment first hit") {
  Segment wall{{5.0, -20.0}, {5.0, 20.0}};
  auto t = ray_segment_first_hit({0.0, 0.0}, {1.0, 0.0}, wall);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(5.0));

  // 60 degrees off-axis still hits the infinite-looking wall: t = 5 / cos.
  Vec2 dir{std::cos(1.0), std::sin(1.0)};
  auto slanted = ray_segment_first_hit({0.0, 0.0}, dir, wall);
  REQUIRE(slanted.has_value());
  CHECK(*slanted == doctest::Approx(5.0 / std::cos(1.0)));

  // Pointing away.
  CHECK(!ray_segment_first_hit({0.0, 0.0}, {-1.0, 0.0}, wall).has_value());

  // Parallel, offset: no hit.
  CHECK(!ray_segment_first_hit({0.0, 1.0}, {0.0, 1.0}, Segment{{5.0, -1.0}, {5.0, 1.0}})
             .has_value());
}

TEST_CASE("segment intersection and disc penetration") {
  CHECK(segments_intersect({{0.0, -1.0}, {0.0, 1.0}}, {{-1.0, 0.0}, {1.0, 0.0}}));
  CHECK(!segments_intersect({{0.0, -1.0}, {0.0, 1.0}}, {{1.0, -1.0}, {1.0, 1.0}}));
  // Shared endpoint counts as touching.
  CHECK(segments_intersect({{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {2.0, 1.0}}));

  CHECK(segment_hits_disc({0.0, 0.0}, {10.0, 0.0}, {5.0, 0.3}, 0.5));
  CHECK(!segment_hits_disc({0.0, 0.0}, {10.0, 0.0}, {5.0, 0.6}, 0.5));
  // Tangency is not a hit (strict penetration).
  CHECK(!segment_hits_disc({0.0, 0.0}, {10.0, 0.0}, {5.0, 0.5}, 0.5));
}

TEST_CASE("kv parser handles scalars, lists, grids, sections") {
  const char* text = R"(
# comment line
alpha = 1.5
flag = true
name = "hello # not a comment"
coords = [1, 2]
rows = [[1, 2, 3, 4], [5, 6, 7, 8]]   # trailing comment

[section]
inner = 2
)";
  kv::Document doc = kv::parse(text);
  CHECK(kv::get_number(doc.at("alpha"), "alpha") == doctest::Approx(1.5));
  CHECK(kv::get_bool(doc.at("flag"), "flag"));
  CHECK(kv::get_string(doc.at("name"), "name") == "hello # not a comment");
  auto coords = kv::get_list(doc.at("coords"), "coords", 2);
  CHECK(coords[1] == doctest::Approx(2.0));
  auto rows = kv::get_grid(doc.at("rows"), "rows", 4);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][3] == doctest::Approx(8.0));
  CHECK(kv::get_number(doc.at("section.inner"), "section.inner") == doctest::Approx(2.0));
}

TEST_CASE("kv parser error cases") {
  CHECK_THROWS_AS(kv::parse("a = 1\na = 2\n"), ParseError);  // duplicate key
  CHECK_THROWS_AS(kv::parse("no_equals_here\n"), ParseError);
  CHECK_THROWS_AS(kv::parse("bad key = 1\n"), ParseError);
  CHECK_THROWS_AS(kv::parse("x = [1, oops]\n"), ParseError);

  kv::Document doc = kv::parse("x = 1\n");
  CHECK_THROWS_AS(kv::get_string(doc.at("x"), "x"), ParseError);   // type mismatch
  CHECK_THROWS_AS(kv::get_list(doc.at("x"), "x", 2), ParseError);
}

TEST_CASE("format_double round-trips exactly") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> uni(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double v = uni(rng);
    kv::Document doc = kv::parse("x = " + kv::format_double(v) + "\n");
    CHECK(kv::get_number(doc.at("x"), "x") == v);
  }
  for (double v : {0.0, 1.0 / 3.0, 0.1, 1e300, 1e-300, std::numbers::pi, 2.0 / 3.0}) {
    kv::Document doc = kv::parse("x = " + kv::format_double(v) + "\n");
    CHECK(kv::get_number(doc.at("x"), "x") == v);
  }
}

TEST_CASE("config defaults") {
  FrameworkConfig cfg = load_config("");
  CHECK(cfg.v_pref == doctest::Approx(1.4));
  CHECK(cfg.observable_range == doctest::Approx(10.0));
  CHECK(cfg.follow_distance == doctest::Approx(0.8));
  CHECK(cfg.robot_speed_limit == doctest::Approx(2.0));
  CHECK(cfg.dt == doctest::Approx(1.0 / 30.0));
  CHECK(cfg.history_window == 30);
  CHECK(cfg.agent_radius == doctest::Approx(0.5));
  CHECK(cfg.tau_group_dis == doctest::Approx(1.5));
  CHECK(cfg.tau_group_vel == doctest::Approx(0.5));
  CHECK(cfg.tau_reach == doctest::Approx(0.5));
  CHECK(cfg.tau_leader == doctest::Approx(0.2));
  CHECK(cfg.tau_catchup == doctest::Approx(2.0));
  CHECK(cfg.v_catchup == doctest::Approx(1.8));
  CHECK(cfg.leader_bonus == doctest::Approx(0.1));
  CHECK(cfg.w_head == doctest::Approx(0.5));
  CHECK(cfg.w_vel == doctest::Approx(0.25));
  CHECK(cfg.w_pos == doctest::Approx(0.25));
  CHECK(cfg.delta_theta == doctest::Approx(kPi / 8.0));
  CHECK(cfg.ray_count == 720);
  CHECK(cfg.sf.relaxation_time == doctest::Approx(0.5));
  CHECK(cfg.sf.repulsion_strength == doctest::Approx(2.0));
  CHECK(cfg.sf.repulsion_range == doctest::Approx(0.35));
  CHECK(cfg.sf.obstacle_strength == doctest::Approx(3.0));
  CHECK(cfg.sf.obstacle_range == doctest::Approx(0.25));
  CHECK(cfg.arrival_radius == doctest::Approx(0.05));
  CHECK(cfg.playback_noise_sigma == doctest::Approx(0.02));
  CHECK(cfg.max_ticks == 0);
  CHECK(!cfg.reactive_humans);
}

TEST_CASE("config validation names the offending key") {
  CHECK_THROWS_WITH_AS(load_config("v_pref = -1\n"), "v_pref must be positive",
                       ValidationError);
  CHECK_THROWS_AS(load_config("history_window = 0\n"), ValidationError);
  CHECK_THROWS_AS(load_config("history_window = 2.5\n"), ValidationError);
  CHECK_THROWS_AS(load_config("made_up_key = 3\n"), ValidationError);
  CHECK_THROWS_AS(load_config("delta_theta = 2.0\n"), ValidationError);  // > pi/2
}

TEST_CASE("weights normalize to unit sum") {
  FrameworkConfig cfg = load_config("w_head = 2\nw_vel = 1\nw_pos = 1\n");
  CHECK(cfg.w_head == doctest::Approx(0.5));
  CHECK(cfg.w_vel == doctest::Approx(0.25));
  CHECK(cfg.w_pos == doctest::Approx(0.25));
}

TEST_CASE("config serialize/load round-trip is the identity") {
  FrameworkConfig base = load_config("");
  CHECK(load_config(serialize_config(base)) == base);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.01, 5.0);
  for (int i = 0; i < 50; ++i) {
    FrameworkConfig cfg;
    cfg.v_pref = uni(rng);
    cfg.observable_range = uni(rng) + 5.0;
    cfg.follow_distance = uni(rng);
    cfg.robot_speed_limit = uni(rng);
    cfg.dt = uni(rng) / 30.0;
    cfg.history_window = 1 + static_cast<int>(uni(rng) * 10);
    cfg.agent_radius = uni(rng);
    cfg.tau_group_dis = uni(rng);
    cfg.tau_group_vel = uni(rng);
    cfg.tau_reach = uni(rng);
    cfg.tau_leader = uni(rng) - 2.5;
    cfg.tau_catchup = uni(rng);
    cfg.v_catchup = uni(rng);
    cfg.leader_bonus = uni(rng);
    cfg.w_head = uni(rng);
    cfg.w_vel = uni(rng);
    cfg.w_pos = uni(rng);
    cfg.delta_theta = 0.01 + uni(rng) / 5.0;
    cfg.ray_count = 8 + static_cast<int>(uni(rng) * 100);
    cfg.sf.relaxation_time = uni(rng);
    cfg.sf.repulsion_strength = uni(rng);
    cfg.sf.repulsion_range = uni(rng);
    cfg.sf.obstacle_strength = uni(rng);
    cfg.sf.obstacle_range = uni(rng);
    cfg.arrival_radius = uni(rng) / 10.0;
    cfg.playback_noise_sigma = uni(rng) / 100.0;
    cfg.max_ticks = static_cast<long>(uni(rng) * 100);
    cfg.reactive_humans = (i % 2) == 0;
    cfg.normalize_weights();
    CHECK(load_config(serialize_config(cfg)) == cfg);
  }
}

TEST_CASE("normalizing already-normalized weights changes nothing") {
  FrameworkConfig cfg = load_config("w_head = 3\nw_vel = 2\nw_pos = 2\n");
  FrameworkConfig again = cfg;
  again.normalize_weights();
  CHECK(again == cfg);
}

TEST_CASE("kind labels map with approximate fallbacks") {
  bool approx = false;
  CHECK(kind_from_label("pedestrian", &approx) == AgentKind::Pedestrian);
  CHECK(!approx);
  CHECK(kind_from_label("Biker", &approx) == AgentKind::Bicycle);
  CHECK(!approx);
  CHECK(kind_from_label("Skater", &approx) == AgentKind::Pedestrian);
  CHECK(!approx);
  CHECK(kind_from_label("Bus", &approx) == AgentKind::Car);
  CHECK(!approx);
  CHECK(kind_from_label("Car", &approx) == AgentKind::Car);
  CHECK(!approx);

  CHECK(kind_from_label("Cart", &approx) == AgentKind::Bicycle);
  CHECK(approx);
  approx = false;
  CHECK(kind_from_label("unicycle", &approx) == AgentKind::Bicycle);
  CHECK(approx);
}

TEST_CASE("realistic footprints") {
  Footprint bike = realistic_footprint(AgentKind::Bicycle, 0.5);
  CHECK(bike.shape == Footprint::Shape::Rect);
  CHECK(bike.length == doctest::Approx(1.9));
  CHECK(bike.width == doctest::Approx(1.0));

  Footprint car = realistic_footprint(AgentKind::Car, 0.5);
  CHECK(car.length == doctest::Approx(4.5));
  CHECK(car.width == doctest::Approx(1.9));

  Footprint ped = realistic_footprint(AgentKind::Pedestrian, 0.5);
  CHECK(ped.shape == Footprint::Shape::Disc);
  CHECK(ped.radius == doctest::Approx(0.5));
}
