#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rrts/geometry.hpp"
#include "rrts/op_counters.hpp"

namespace rrts {

// Obstacles are axis-aligned boxes or spheres. They may extend beyond the
// environment bounds; only the part inside matters.
using Obstacle = std::variant<Box, Ball>;

struct Environment {
  int dim = 0;
  Box bounds;                       // the configuration space X
  std::vector<Obstacle> obstacles;  // X_obs
  Config start;                     // root of tree a
  Ball goal;                        // goal region; its center roots tree b
  double cc_step = 0.0;             // collision-check resolution (0 = diagonal/200)

  double diagonal() const;
  double bounds_volume() const;
  double resolved_cc_step() const;
};

// Deterministic, platform-independent random stream. The generator is the
// standard-specified mt19937_64; doubles are derived from the top 53 bits so
// the stream does not depend on the C++ library's distribution internals.
class SeededRng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/u53";

  explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

bool point_in_obstacle(const Config& x, const Obstacle& obstacle);
bool in_bounds(const Environment& env, const Config& x);

// True iff x is inside bounds and outside every obstacle (closed obstacles:
// boundary contact counts as a collision).
bool point_free(const Environment& env, const Config& x);

// Uniform sample over free space by rejection over the bounds box. Throws
// std::runtime_error after `rejection_budget` consecutive rejections.
Config sample_free(const Environment& env, SeededRng& rng, OpCounters* ops = nullptr,
                   std::uint64_t rejection_budget = 1'000'000);

// True iff the closed segment [a,b] stays in free space. Box and sphere
// obstacles get exact segment tests, so the answer does not depend on cc_step.
bool obstacle_free_path(const Environment& env, const Config& a, const Config& b,
                        OpCounters* ops = nullptr);

// Closed goal ball membership.
bool in_goal(const Environment& env, const Config& x);

// Parses and validates a JSON environment document. Unknown fields are
// rejected; validation failures name the offending field.
Environment load_environment(const std::string& text);

// Checks every Environment invariant, throwing std::invalid_argument with a
// field-level message on the first violation.
void validate_environment(const Environment& env);

// Deterministic desk-scale scenarios. `scale` multiplies the bound extent,
// except for narrow3d where it sets the passage width as a fraction of the
// extent; scale <= 0 selects the per-scenario default.
Environment builtin_scenario(std::string_view name, double scale = 0.0);
const std::vector<std::string>& builtin_scenario_names();

// Uniformly rescales every extent (bounds, start, goal, obstacles, cc_step).
Environment scale_environment(const Environment& env, double factor);

}  // namespace rrts
