#include <stdexcept>

#include "rrts/environment.hpp"

namespace rrts {

namespace {

Box box2(double x0, double y0, double x1, double y1) { return Box{{x0, y0}, {x1, y1}}; }

Box box3(double x0, double y0, double z0, double x1, double y1, double z1) {
  return Box{{x0, y0, z0}, {x1, y1, z1}};
}

// Slab normal to the x axis with one rectangular window cut out, realized as
// four boxes around the window.
void add_x_slab_with_window(Environment& env, double x0, double x1, double wy0, double wy1,
                            double wz0, double wz1) {
  env.obstacles.emplace_back(box3(x0, 0.0, 0.0, x1, wy0, 1.0));
  env.obstacles.emplace_back(box3(x0, wy1, 0.0, x1, 1.0, 1.0));
  env.obstacles.emplace_back(box3(x0, wy0, 0.0, x1, wy1, wz0));
  env.obstacles.emplace_back(box3(x0, wy0, wz1, x1, wy1, 1.0));
}

void add_y_slab_with_window(Environment& env, double y0, double y1, double wx0, double wx1,
                            double wz0, double wz1) {
  env.obstacles.emplace_back(box3(0.0, y0, 0.0, wx0, y1, 1.0));
  env.obstacles.emplace_back(box3(wx1, y0, 0.0, 1.0, y1, 1.0));
  env.obstacles.emplace_back(box3(wx0, y0, 0.0, wx1, y1, wz0));
  env.obstacles.emplace_back(box3(wx0, y0, wz1, wx1, y1, 1.0));
}

Environment unit_env(int dim) {
  Environment env;
  env.dim = dim;
  env.bounds.lo.assign(dim, 0.0);
  env.bounds.hi.assign(dim, 1.0);
  return env;
}

Environment make_empty2d() {
  Environment env = unit_env(2);
  env.start = {0.1, 0.1};
  env.goal = {{0.9, 0.9}, 0.05};
  return env;
}

Environment make_cluttered2d_a() {
  Environment env = unit_env(2);
  env.start = {0.1, 0.1};
  env.goal = {{0.9, 0.9}, 0.05};
  env.obstacles = {
      box2(0.15, 0.25, 0.30, 0.40), box2(0.40, 0.10, 0.50, 0.35),
      box2(0.25, 0.55, 0.40, 0.70), box2(0.55, 0.45, 0.70, 0.60),
      box2(0.75, 0.30, 0.90, 0.45), box2(0.10, 0.75, 0.25, 0.90),
      box2(0.45, 0.75, 0.60, 0.92), box2(0.60, 0.60, 0.72, 0.72),
      Ball{{0.50, 0.50}, 0.07},     Ball{{0.70, 0.75}, 0.06},
      Ball{{0.30, 0.08}, 0.05},     Ball{{0.85, 0.60}, 0.06},
  };
  return env;
}

// Start and goal sit close together near the bottom edge but a tall dividing
// wall forces a long detour over the top, with clutter slowing exploration on
// both sides.
Environment make_cluttered2d_b() {
  Environment env = unit_env(2);
  env.start = {0.40, 0.10};
  env.goal = {{0.60, 0.10}, 0.04};
  env.obstacles = {
      box2(0.49, 0.00, 0.51, 0.78),
      box2(0.10, 0.30, 0.25, 0.45),
      box2(0.70, 0.25, 0.85, 0.40),
      box2(0.15, 0.55, 0.30, 0.68),
      box2(0.68, 0.55, 0.83, 0.68),
      Ball{{0.25, 0.15}, 0.05},
      Ball{{0.78, 0.12}, 0.05},
      Ball{{0.35, 0.45}, 0.05},
      Ball{{0.63, 0.45}, 0.05},
  };
  return env;
}

// Serpentine corridor: horizontal walls with alternating gaps.
Environment make_maze2d() {
  Environment env = unit_env(2);
  env.start = {0.1, 0.1};
  env.goal = {{0.1, 0.9}, 0.05};
  env.obstacles = {
      box2(0.00, 0.19, 0.86, 0.21),
      box2(0.14, 0.39, 1.00, 0.41),
      box2(0.00, 0.59, 0.86, 0.61),
      box2(0.14, 0.79, 1.00, 0.81),
  };
  return env;
}

Environment make_barriers3d() {
  Environment env = unit_env(3);
  env.start = {0.1, 0.1, 0.1};
  env.goal = {{0.9, 0.9, 0.9}, 0.07};
  add_x_slab_with_window(env, 0.28, 0.32, 0.60, 0.90, 0.10, 0.40);
  add_x_slab_with_window(env, 0.48, 0.52, 0.10, 0.40, 0.55, 0.90);
  add_x_slab_with_window(env, 0.68, 0.72, 0.55, 0.90, 0.55, 0.90);
  return env;
}

// Three slabs whose windows are passage_width wide and mutually offset, so the
// straight start-goal segment is always blocked.
Environment make_narrow3d(double passage_width) {
  Environment env = unit_env(3);
  env.start = {0.1, 0.5, 0.5};
  env.goal = {{0.9, 0.5, 0.5}, 0.06};
  const double w = passage_width / 2.0;
  auto window = [&](double cy, double cz, double x0, double x1) {
    add_x_slab_with_window(env, x0, x1, cy - w, cy + w, cz - w, cz + w);
  };
  window(0.30, 0.30, 0.24, 0.27);
  window(0.70, 0.70, 0.49, 0.52);
  window(0.30, 0.70, 0.73, 0.76);
  return env;
}

Environment make_maze3d() {
  Environment env = unit_env(3);
  env.start = {0.1, 0.1, 0.1};
  env.goal = {{0.9, 0.9, 0.9}, 0.07};
  add_x_slab_with_window(env, 0.31, 0.35, 0.10, 0.35, 0.10, 0.35);
  add_x_slab_with_window(env, 0.65, 0.69, 0.10, 0.35, 0.65, 0.90);
  add_y_slab_with_window(env, 0.48, 0.52, 0.69, 0.90, 0.65, 0.90);
  return env;
}

void scale_in_place(Config& c, double k) {
  for (double& x : c) x *= k;
}

}  // namespace

Environment scale_environment(const Environment& env, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scale_environment: factor must be positive");
  Environment out = env;
  scale_in_place(out.bounds.lo, factor);
  scale_in_place(out.bounds.hi, factor);
  scale_in_place(out.start, factor);
  scale_in_place(out.goal.center, factor);
  out.goal.radius *= factor;
  if (out.cc_step > 0.0) out.cc_step *= factor;
  for (Obstacle& obstacle : out.obstacles) {
    if (Box* box = std::get_if<Box>(&obstacle)) {
      scale_in_place(box->lo, factor);
      scale_in_place(box->hi, factor);
    } else {
      Ball& ball = std::get<Ball>(obstacle);
      scale_in_place(ball.center, factor);
      ball.radius *= factor;
    }
  }
  return out;
}

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {
      "empty2d", "cluttered2d_a", "cluttered2d_b", "maze2d",
      "barriers3d", "narrow3d", "maze3d"};
  return names;
}

Environment builtin_scenario(std::string_view name, double scale) {
  Environment env;
  if (name == "empty2d") {
    env = make_empty2d();
  } else if (name == "cluttered2d_a") {
    env = make_cluttered2d_a();
  } else if (name == "cluttered2d_b") {
    env = make_cluttered2d_b();
  } else if (name == "maze2d") {
    env = make_maze2d();
  } else if (name == "barriers3d") {
    env = make_barriers3d();
  } else if (name == "narrow3d") {
    env = make_narrow3d(scale > 0.0 ? scale : 0.05);
  } else if (name == "maze3d") {
    env = make_maze3d();
  } else {
    throw std::invalid_argument("builtin_scenario: unknown scenario '" + std::string(name) + "'");
  }
  if (name != "narrow3d" && scale > 0.0 && scale != 1.0) {
    env = scale_environment(env, scale);
  }
  validate_environment(env);
  return env;
}

}  // namespace rrts
