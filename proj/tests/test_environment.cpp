#include <queue>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "rrts/environment.hpp"

using namespace rrts;

TEST_SUITE_BEGIN("environment");

namespace {

Environment unit_square() {
  Environment env;
  env.dim = 2;
  env.bounds = {{0, 0}, {1, 1}};
  env.start = {0.1, 0.1};
  env.goal = {{0.9, 0.9}, 0.05};
  return env;
}

// Coarse grid BFS between free cells; a positive answer certifies feasibility.
bool grid_feasible(const Environment& env, int cells_per_axis) {
  const int n = env.dim;
  std::vector<double> step(n);
  for (int k = 0; k < n; ++k) {
    step[k] = (env.bounds.hi[k] - env.bounds.lo[k]) / cells_per_axis;
  }
  auto cell_center = [&](const std::vector<int>& cell) {
    Config x(n);
    for (int k = 0; k < n; ++k) x[k] = env.bounds.lo[k] + (cell[k] + 0.5) * step[k];
    return x;
  };
  auto cell_of = [&](const Config& x) {
    std::vector<int> cell(n);
    for (int k = 0; k < n; ++k) {
      cell[k] = std::min(cells_per_axis - 1,
                         std::max(0, static_cast<int>((x[k] - env.bounds.lo[k]) / step[k])));
    }
    return cell;
  };

  const std::vector<int> start = cell_of(env.start);
  std::set<std::vector<int>> seen{start};
  std::queue<std::vector<int>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    const std::vector<int> cell = frontier.front();
    frontier.pop();
    const Config center = cell_center(cell);
    if (!point_free(env, center) && cell != start) continue;
    if (in_goal(env, center)) return true;
    for (int k = 0; k < n; ++k) {
      for (int d : {-1, 1}) {
        std::vector<int> next = cell;
        next[k] += d;
        if (next[k] < 0 || next[k] >= cells_per_axis) continue;
        if (seen.insert(next).second) frontier.push(next);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("sample_free uniform mean on the empty unit square") {
  const Environment env = unit_square();
  SeededRng rng(7);
  double sx = 0.0, sy = 0.0;
  const int draws = 100'000;
  for (int i = 0; i < draws; ++i) {
    const Config x = sample_free(env, rng);
    CHECK(in_bounds(env, x));
    sx += x[0];
    sy += x[1];
  }
  CHECK(sx / draws == doctest::Approx(0.5).epsilon(0.02));
  CHECK(sy / draws == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("sample_free rejection confines samples to the free corner") {
  Environment env = unit_square();
  env.start = {0.05, 0.05};
  env.goal = {{0.05, 0.05}, 0.01};
  // everything blocked except a 0.1 x 0.1 corner
  env.obstacles = {Box{{0.1, 0.0}, {1.0, 1.0}}, Box{{0.0, 0.1}, {0.1, 1.0}}};
  SeededRng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Config x = sample_free(env, rng);
    CHECK(x[0] < 0.1);
    CHECK(x[1] < 0.1);
  }
}

TEST_CASE("sample_free determinism") {
  const Environment env = unit_square();
  SeededRng rng1(99), rng2(99);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_free(env, rng1) == sample_free(env, rng2));
  }
}

TEST_CASE("sample_free exhausts its budget in a fully blocked space") {
  Environment env = unit_square();
  env.obstacles = {Box{{-1, -1}, {2, 2}}};
  SeededRng rng(1);
  CHECK_THROWS_AS(sample_free(env, rng, nullptr, 1000), std::runtime_error);
}

TEST_CASE("obstacle_free_path") {
  Environment env = unit_square();
  CHECK(obstacle_free_path(env, {0.1, 0.1}, {0.9, 0.9}));

  env.obstacles = {Box{{0.4, 0.4}, {0.6, 0.6}}};
  CHECK_FALSE(obstacle_free_path(env, {0.1, 0.5}, {0.9, 0.5}));  // through box center
  CHECK(obstacle_free_path(env, {0.1, 0.7}, {0.9, 0.7}));

  env.obstacles = {Ball{{0.5, 0.5}, 0.2}};
  CHECK(obstacle_free_path(env, {0.0, 0.71}, {1.0, 0.71}));       // clearance 0.01
  CHECK_FALSE(obstacle_free_path(env, {0.0, 0.69}, {1.0, 0.69}));

  // counters tick once per call
  OpCounters ops;
  obstacle_free_path(env, {0, 0}, {1, 0}, &ops);
  obstacle_free_path(env, {0, 0}, {0, 1}, &ops);
  CHECK(ops.collision == 2);
}

TEST_CASE("obstacle_free_path is symmetric on random pairs") {
  const Environment env = builtin_scenario("cluttered2d_a");
  SeededRng rng(5);
  for (int i = 0; i < 300; ++i) {
    Config a = {rng.next_unit(), rng.next_unit()};
    Config b = {rng.next_unit(), rng.next_unit()};
    CHECK(obstacle_free_path(env, a, b) == obstacle_free_path(env, b, a));
  }
}

TEST_CASE("in_goal closed-ball convention") {
  Environment env = unit_square();
  CHECK(in_goal(env, env.goal.center));
  // dyadic coordinates so the boundary distance is exact
  env.goal = {{0.5, 0.5}, 0.25};
  CHECK(in_goal(env, {0.5, 0.25}));           // distance exactly the radius
  CHECK_FALSE(in_goal(env, {0.5, 0.25 - 1e-9}));
}

TEST_CASE("load_environment minimal document") {
  const std::string doc = R"({
    "dim": 2,
    "bounds": {"lo": [0, 0], "hi": [1, 1]},
    "start": [0.1, 0.1],
    "goal": {"center": [0.9, 0.9], "radius": 0.05}
  })";
  const Environment env = load_environment(doc);
  CHECK(env.dim == 2);
  CHECK(env.obstacles.empty());
  CHECK(env.goal.radius == 0.05);
  CHECK(env.cc_step == 0.0);
  CHECK(env.resolved_cc_step() == doctest::Approx(env.diagonal() / 200.0));
}

TEST_CASE("load_environment rejects bad documents") {
  CHECK_THROWS_WITH_AS(load_environment(R"({
    "dim": 2,
    "bounds": {"lo": [0, 0], "hi": [1, 1]},
    "start": [0.5, 0.5],
    "goal": {"center": [0.9, 0.9], "radius": 0.05},
    "obstacles": [{"type": "aabb", "min": [0.4, 0.4], "max": [0.6, 0.6]}]
  })"),
                       doctest::Contains("start"), std::invalid_argument);

  CHECK_THROWS_WITH_AS(load_environment(R"({
    "dim": 3,
    "bounds": {"lo": [0, 0, 0], "hi": [1, 1, 1]},
    "start": [0.1, 0.1, 0.1],
    "goal": {"center": [0.9, 0.9, 0.9], "radius": 0.05},
    "obstacles": [{"type": "aabb", "min": [0.4, 0.4], "max": [0.6, 0.6, 0.6]}]
  })"),
                       doctest::Contains("obstacles[0]"), std::invalid_argument);

  CHECK_THROWS_WITH_AS(load_environment(R"({
    "dim": 2,
    "bounds": {"lo": [0, 0], "hi": [1, 1]},
    "start": [0.1, 0.1],
    "goal": {"center": [0.9, 0.9], "radius": -1}
  })"),
                       doctest::Contains("goal.radius"), std::invalid_argument);

  // unknown fields are rejected
  CHECK_THROWS_AS(load_environment(R"({
    "dim": 2,
    "bounds": {"lo": [0, 0], "hi": [1, 1]},
    "start": [0.1, 0.1],
    "goal": {"center": [0.9, 0.9], "radius": 0.05},
    "surprise": true
  })"),
                  std::invalid_argument);

  CHECK_THROWS_AS(load_environment("not json at all"), std::invalid_argument);
}

TEST_CASE("builtin empty2d matches its definition") {
  const Environment env = builtin_scenario("empty2d");
  CHECK(env.dim == 2);
  CHECK(env.bounds.lo == Config{0, 0});
  CHECK(env.bounds.hi == Config{1, 1});
  CHECK(env.start == Config{0.1, 0.1});
  CHECK(env.goal.center == Config{0.9, 0.9});
  CHECK(env.goal.radius == 0.05);
  CHECK(env.obstacles.empty());
}

TEST_CASE("builtin narrow3d blocks the straight segment") {
  const Environment env = builtin_scenario("narrow3d", 0.05);
  CHECK(env.dim == 3);
  CHECK_FALSE(obstacle_free_path(env, env.start, env.goal.center));
  CHECK(grid_feasible(env, 50));
}

TEST_CASE("builtin scenarios validate, sample free, and are feasible") {
  for (const std::string& name : builtin_scenario_names()) {
    CAPTURE(name);
    const Environment env = builtin_scenario(name);
    CHECK_NOTHROW(validate_environment(env));

    SeededRng rng(11);
    const int draws = env.dim == 2 ? 100'000 : 20'000;
    for (int i = 0; i < draws; ++i) {
      const Config x = sample_free(env, rng);
      CHECK(point_free(env, x));
    }
    CHECK(grid_feasible(env, env.dim == 2 ? 100 : 50));
  }
  CHECK_THROWS_AS(builtin_scenario("no-such-place"), std::invalid_argument);
}

TEST_CASE("scale_environment scales everything uniformly") {
  const Environment env = builtin_scenario("cluttered2d_b");
  const Environment big = scale_environment(env, 3.0);
  CHECK(big.diagonal() == doctest::Approx(3.0 * env.diagonal()));
  CHECK(big.goal.radius == doctest::Approx(3.0 * env.goal.radius));
  CHECK_NOTHROW(validate_environment(big));
  // free/blocked structure is preserved
  SeededRng rng(2);
  for (int i = 0; i < 200; ++i) {
    Config a = {rng.next_unit(), rng.next_unit()};
    Config b = {rng.next_unit(), rng.next_unit()};
    Config a3 = {3 * a[0], 3 * a[1]};
    Config b3 = {3 * b[0], 3 * b[1]};
    CHECK(obstacle_free_path(env, a, b) == obstacle_free_path(big, a3, b3));
  }
}

TEST_SUITE_END();
