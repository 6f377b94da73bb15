#include "rrts/environment.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace rrts {

double Environment::diagonal() const { return distance(bounds.lo, bounds.hi); }

double Environment::bounds_volume() const {
  double v = 1.0;
  for (int k = 0; k < dim; ++k) v *= bounds.hi[k] - bounds.lo[k];
  return v;
}

double Environment::resolved_cc_step() const {
  return cc_step > 0.0 ? cc_step : diagonal() / 200.0;
}

bool point_in_obstacle(const Config& x, const Obstacle& obstacle) {
  if (const Box* box = std::get_if<Box>(&obstacle)) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < box->lo[k] || x[k] > box->hi[k]) return false;
    }
    return true;
  }
  const Ball& ball = std::get<Ball>(obstacle);
  return distance(x, ball.center) <= ball.radius;
}

bool in_bounds(const Environment& env, const Config& x) {
  for (int k = 0; k < env.dim; ++k) {
    if (x[k] < env.bounds.lo[k] || x[k] > env.bounds.hi[k]) return false;
  }
  return true;
}

bool point_free(const Environment& env, const Config& x) {
  if (!in_bounds(env, x)) return false;
  for (const Obstacle& obstacle : env.obstacles) {
    if (point_in_obstacle(x, obstacle)) return false;
  }
  return true;
}

Config sample_free(const Environment& env, SeededRng& rng, OpCounters* ops,
                   std::uint64_t rejection_budget) {
  if (ops) ++ops->sample;
  Config x(env.dim);
  for (std::uint64_t rejected = 0; rejected <= rejection_budget; ++rejected) {
    for (int k = 0; k < env.dim; ++k) {
      x[k] = rng.next_in(env.bounds.lo[k], env.bounds.hi[k]);
    }
    bool free = true;
    for (const Obstacle& obstacle : env.obstacles) {
      if (point_in_obstacle(x, obstacle)) {
        free = false;
        break;
      }
    }
    if (free) return x;
  }
  throw std::runtime_error("sample_free: rejection budget exhausted; free space appears degenerate");
}

bool obstacle_free_path(const Environment& env, const Config& a, const Config& b,
                        OpCounters* ops) {
  if (ops) ++ops->collision;
  for (const Obstacle& obstacle : env.obstacles) {
    if (const Box* box = std::get_if<Box>(&obstacle)) {
      if (segment_hits_box(a, b, *box)) return false;
    } else if (segment_hits_ball(a, b, std::get<Ball>(obstacle))) {
      return false;
    }
  }
  return true;
}

bool in_goal(const Environment& env, const Config& x) {
  return distance(x, env.goal.center) <= env.goal.radius;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw std::invalid_argument(field + ": " + message);
}

Config parse_vector(const json& node, int dim, const std::string& field) {
  if (!node.is_array()) fail(field, "expected an array of numbers");
  if (dim >= 0 && static_cast<int>(node.size()) != dim) {
    fail(field, "expected " + std::to_string(dim) + " coordinates, got " +
                    std::to_string(node.size()));
  }
  Config out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) fail(field, "expected numeric coordinates");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(field, "coordinates must be finite");
    out.push_back(x);
  }
  return out;
}

void reject_unknown_fields(const json& node, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (const auto& item : node.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (item.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) fail(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
  }
}

}  // namespace

void validate_environment(const Environment& env) {
  if (env.dim < 2) fail("dim", "dimension must be at least 2");
  if (static_cast<int>(env.bounds.lo.size()) != env.dim ||
      static_cast<int>(env.bounds.hi.size()) != env.dim) {
    fail("bounds", "lo/hi must have dim coordinates");
  }
  for (int k = 0; k < env.dim; ++k) {
    if (!(env.bounds.lo[k] <= env.bounds.hi[k])) fail("bounds", "lo must not exceed hi");
  }
  if (static_cast<int>(env.start.size()) != env.dim) fail("start", "wrong dimension");
  if (static_cast<int>(env.goal.center.size()) != env.dim) fail("goal.center", "wrong dimension");
  if (!(env.goal.radius > 0.0)) fail("goal.radius", "must be positive");
  if (env.cc_step < 0.0) fail("cc_step", "must be positive when given");
  std::size_t idx = 0;
  for (const Obstacle& obstacle : env.obstacles) {
    const std::string field = "obstacles[" + std::to_string(idx++) + "]";
    if (const Box* box = std::get_if<Box>(&obstacle)) {
      if (static_cast<int>(box->lo.size()) != env.dim ||
          static_cast<int>(box->hi.size()) != env.dim) {
        fail(field, "corner dimension mismatch");
      }
      for (int k = 0; k < env.dim; ++k) {
        if (!(box->lo[k] <= box->hi[k])) fail(field, "min must not exceed max");
      }
    } else {
      const Ball& ball = std::get<Ball>(obstacle);
      if (static_cast<int>(ball.center.size()) != env.dim) fail(field, "center dimension mismatch");
      if (!(ball.radius > 0.0)) fail(field, "radius must be positive");
    }
  }
  if (!point_free(env, env.start)) fail("start", "not in free space");
  if (!point_free(env, env.goal.center)) fail("goal.center", "not in free space");
  for (int k = 0; k < env.dim; ++k) {
    if (env.goal.center[k] - env.goal.radius < env.bounds.lo[k] ||
        env.goal.center[k] + env.goal.radius > env.bounds.hi[k]) {
      fail("goal", "goal ball must lie inside bounds");
    }
  }
}

Environment load_environment(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("parse error: document must be an object");
  reject_unknown_fields(doc, {"dim", "bounds", "start", "goal", "obstacles", "cc_step"}, "");

  Environment env;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) fail("dim", "missing or not an integer");
  env.dim = doc["dim"].get<int>();
  if (env.dim < 2) fail("dim", "dimension must be at least 2");

  if (!doc.contains("bounds") || !doc["bounds"].is_object()) fail("bounds", "missing or not an object");
  reject_unknown_fields(doc["bounds"], {"lo", "hi"}, "bounds");
  if (!doc["bounds"].contains("lo") || !doc["bounds"].contains("hi")) fail("bounds", "needs lo and hi");
  env.bounds.lo = parse_vector(doc["bounds"]["lo"], env.dim, "bounds.lo");
  env.bounds.hi = parse_vector(doc["bounds"]["hi"], env.dim, "bounds.hi");

  if (!doc.contains("start")) fail("start", "missing");
  env.start = parse_vector(doc["start"], env.dim, "start");

  if (!doc.contains("goal") || !doc["goal"].is_object()) fail("goal", "missing or not an object");
  reject_unknown_fields(doc["goal"], {"center", "radius"}, "goal");
  if (!doc["goal"].contains("center")) fail("goal.center", "missing");
  env.goal.center = parse_vector(doc["goal"]["center"], env.dim, "goal.center");
  if (!doc["goal"].contains("radius") || !doc["goal"]["radius"].is_number()) {
    fail("goal.radius", "missing or not a number");
  }
  env.goal.radius = doc["goal"]["radius"].get<double>();

  if (doc.contains("obstacles")) {
    if (!doc["obstacles"].is_array()) fail("obstacles", "expected an array");
    std::size_t idx = 0;
    for (const json& node : doc["obstacles"]) {
      const std::string field = "obstacles[" + std::to_string(idx++) + "]";
      if (!node.is_object() || !node.contains("type") || !node["type"].is_string()) {
        fail(field, "expected an object with a type");
      }
      const std::string type = node["type"].get<std::string>();
      if (type == "aabb") {
        reject_unknown_fields(node, {"type", "min", "max"}, field);
        if (!node.contains("min") || !node.contains("max")) fail(field, "aabb needs min and max");
        Box box;
        box.lo = parse_vector(node["min"], env.dim, field + ".min");
        box.hi = parse_vector(node["max"], env.dim, field + ".max");
        env.obstacles.emplace_back(box);
      } else if (type == "sphere") {
        reject_unknown_fields(node, {"type", "center", "radius"}, field);
        if (!node.contains("center") || !node.contains("radius") || !node["radius"].is_number()) {
          fail(field, "sphere needs center and radius");
        }
        Ball ball;
        ball.center = parse_vector(node["center"], env.dim, field + ".center");
        ball.radius = node["radius"].get<double>();
        env.obstacles.emplace_back(ball);
      } else {
        fail(field + ".type", "unknown obstacle type '" + type + "'");
      }
    }
  }

  if (doc.contains("cc_step")) {
    if (!doc["cc_step"].is_number()) fail("cc_step", "not a number");
    env.cc_step = doc["cc_step"].get<double>();
    if (env.cc_step <= 0.0) fail("cc_step", "must be positive when given");
  }

  validate_environment(env);
  return env;
}

}  // namespace rrts
