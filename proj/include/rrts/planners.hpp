#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "rrts/tree.hpp"

namespace rrts {

enum class PlannerKind { kRrtStar, kBRrtStar, kIbRrtStar, kBiRrt };

// Wire identifiers: rrt-star, b-rrt-star, ib-rrt-star, birrt.
std::string_view to_string(PlannerKind kind);
PlannerKind planner_kind_from_string(std::string_view name);
const std::vector<PlannerKind>& all_planner_kinds();

struct PlannerConfig {
  double gamma = 0.0;                    // <= 0: derived from the bounds volume
  double eta = 0.0;                      // <= 0: 5% of the bounds diagonal
  std::uint64_t max_iterations = 50'000;
  std::uint64_t max_nodes = 5'000'000;
  std::uint64_t seed = 0;
};

// Snapshot taken when the incumbent solution changes for the first time or
// converges. elapsed_seconds is wall-clock and machine-dependent; the op
// counters are the reproducible part.
struct SolutionEvent {
  std::uint64_t iteration = 0;
  double cost = 0.0;
  double elapsed_seconds = 0.0;
  OpCounters ops;
};

struct IterationOutcome {
  bool inserted = false;
  std::uint32_t rewired_count = 0;
  bool connection_attempted = false;
  bool new_best = false;
};

class Planner;

// Returning true stops the run after the current iteration.
using StepObserver = std::function<bool(const Planner&, const IterationOutcome&)>;

struct PlannerState {
  std::vector<Tree> trees;                // one (RRT*) or two (bidirectional)
  std::optional<PathSolution> sigma_f;    // best end-to-end path, start to goal
  std::uint64_t iteration = 0;
  OpCounters ops;
  std::optional<SolutionEvent> first_solution;
  std::vector<double> cost_trace;         // best-so-far cost per iteration
  std::vector<std::uint32_t> ops_trace;   // primitive calls per iteration
  double elapsed_seconds = 0.0;
  bool capped = false;

  std::uint64_t node_count() const;
  double best_cost() const;  // +infinity until a solution exists
};

class Planner {
 public:
  static std::unique_ptr<Planner> make(PlannerKind kind, const Environment& env,
                                       const PlannerConfig& config);
  virtual ~Planner() = default;

  IterationOutcome step();

  const PlannerState& state() const { return state_; }
  const Environment& environment() const { return env_; }
  PlannerKind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  double eta() const { return eta_; }

  // Index of the tree the next iteration operates on; bidirectional planners
  // alternate, the others always report 0.
  virtual std::size_t active_tree() const { return 0; }

 protected:
  Planner(PlannerKind kind, const Environment& env, const PlannerConfig& config);

  virtual IterationOutcome do_step() = 0;

  // Replaces sigma_f when `path` is strictly cheaper (or none exists yet).
  bool adopt_solution(PathSolution path);

  // Records the first-solution event the moment sigma_f first exists.
  void mark_improvement();

  friend PlannerState run(PlannerKind, const PlannerConfig&, const Environment&,
                          const StepObserver&);

  PlannerKind kind_;
  Environment env_;
  PlannerConfig config_;
  double gamma_ = 0.0;
  double eta_ = 0.0;
  SeededRng rng_;
  PlannerState state_;
  std::chrono::steady_clock::time_point started_;
  // query/list scratch reused across iterations
  std::vector<VertexId> near_a_, near_b_;
  std::vector<Candidate> list_a_, list_b_;
};

// Steering step: `to` itself when within eta, else the point at distance eta
// from `from` along the segment.
Config extend(const Config& from, const Config& to, double eta);

// Local vertex density: |near(x, r)| / measure of the r-ball.
double intensity_at(const Tree& tree, const Config& x, double r);

struct BestTreeParent {
  std::optional<VertexId> vertex;   // best feasible parent across both trees
  bool use_tree_a = true;           // which tree the sample joins (ties pick a)
  bool connection_attempted = false;  // both trees offered a feasible minimum
};

// Picks the cheaper feasible parent between the two per-tree candidate lists
// and, when `connection` holds and both trees reach x_rand, offers the
// concatenated end-to-end path as a replacement for sigma_f.
BestTreeParent get_best_tree_parent(const Tree& tree_a, const Tree& tree_b,
                                    std::span<const Candidate> list_a,
                                    std::span<const Candidate> list_b, bool connection,
                                    const Config& x_rand, std::optional<PathSolution>& sigma_f,
                                    const Environment& env, OpCounters* ops = nullptr);

// Keeps the cheaper of sigma_f and sigma_a|reverse(sigma_b). Both inputs must
// terminate at the same junction state.
PathSolution connect_trees(const PathSolution& sigma_a, const PathSolution& sigma_b,
                           const std::optional<PathSolution>& sigma_f);

// Greedy-but-sorted bridge between the trees: extends from x_conn toward
// x_new, gathers near vertices of `other` around the extension, and links the
// best collision-free one directly to x_new. Returns the end-to-end path
// oriented current-root -> other-root, or nullopt when every bridge is
// blocked.
std::optional<PathSolution> brrt_connect(const Tree& current, VertexId x_new, const Tree& other,
                                         VertexId x_conn, double eta, double gamma,
                                         const Environment& env, OpCounters* ops = nullptr);

// Steps until max_iterations, the node cap (marks the state capped), or the
// observer requests a stop.
PlannerState run(PlannerKind kind, const PlannerConfig& config, const Environment& env,
                 const StepObserver& observer = {});

double default_gamma(const Environment& env);
double default_eta(const Environment& env);

}  // namespace rrts
