#include "rrts/planners.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rrts {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string_view to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::kRrtStar: return "rrt-star";
    case PlannerKind::kBRrtStar: return "b-rrt-star";
    case PlannerKind::kIbRrtStar: return "ib-rrt-star";
    case PlannerKind::kBiRrt: return "birrt";
  }
  throw std::logic_error("to_string: bad planner kind");
}

PlannerKind planner_kind_from_string(std::string_view name) {
  for (PlannerKind kind : all_planner_kinds()) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown planner '" + std::string(name) + "'");
}

const std::vector<PlannerKind>& all_planner_kinds() {
  static const std::vector<PlannerKind> kinds = {
      PlannerKind::kRrtStar, PlannerKind::kBRrtStar, PlannerKind::kIbRrtStar,
      PlannerKind::kBiRrt};
  return kinds;
}

double default_gamma(const Environment& env) {
  const double n = env.dim;
  return 2.0 * std::pow(1.0 + 1.0 / n, 1.0 / n) *
         std::pow(env.bounds_volume() / unit_ball_measure(env.dim), 1.0 / n);
}

double default_eta(const Environment& env) { return 0.05 * env.diagonal(); }

Config extend(const Config& from, const Config& to, double eta) {
  const double d = distance(from, to);
  if (d <= eta) return to;
  Config out(from.size());
  const double s = eta / d;
  for (std::size_t k = 0; k < from.size(); ++k) {
    out[k] = from[k] + s * (to[k] - from[k]);
  }
  return out;
}

double intensity_at(const Tree& tree, const Config& x, double r) {
  const std::size_t count = tree.index().near(x, r).size();
  return static_cast<double>(count) / ball_measure(r, tree.dim());
}

std::uint64_t PlannerState::node_count() const {
  std::uint64_t total = 0;
  for (const Tree& tree : trees) total += tree.size();
  return total;
}

double PlannerState::best_cost() const { return sigma_f ? sigma_f->cost : kInf; }

Planner::Planner(PlannerKind kind, const Environment& env, const PlannerConfig& config)
    : kind_(kind),
      env_(env),
      config_(config),
      gamma_(config.gamma > 0.0 ? config.gamma : default_gamma(env)),
      eta_(config.eta > 0.0 ? config.eta : default_eta(env)),
      rng_(config.seed),
      started_(std::chrono::steady_clock::now()) {}

bool Planner::adopt_solution(PathSolution path) {
  if (state_.sigma_f && path.cost >= state_.sigma_f->cost) return false;
  state_.sigma_f = std::move(path);
  mark_improvement();
  return true;
}

void Planner::mark_improvement() {
  if (state_.first_solution) return;
  const auto elapsed = std::chrono::steady_clock::now() - started_;
  state_.first_solution =
      SolutionEvent{state_.iteration, state_.sigma_f->cost,
                    std::chrono::duration<double>(elapsed).count(), state_.ops};
}

IterationOutcome Planner::step() {
  ++state_.iteration;
  const std::uint64_t ops_before = state_.ops.total();
  IterationOutcome outcome = do_step();
  state_.ops_trace.push_back(static_cast<std::uint32_t>(state_.ops.total() - ops_before));
  state_.cost_trace.push_back(state_.best_cost());
  return outcome;
}

PathSolution connect_trees(const PathSolution& sigma_a, const PathSolution& sigma_b,
                           const std::optional<PathSolution>& sigma_f) {
  PathSolution joined = concat_paths(sigma_a, reversed(sigma_b));
  if (sigma_f && sigma_f->cost < joined.cost) return *sigma_f;
  return joined;
}

BestTreeParent get_best_tree_parent(const Tree& tree_a, const Tree& tree_b,
                                    std::span<const Candidate> list_a,
                                    std::span<const Candidate> list_b, bool connection,
                                    const Config& x_rand, std::optional<PathSolution>& sigma_f,
                                    const Environment& env, OpCounters* ops) {
  std::optional<VertexId> min_a, min_b;
  double cost_a = kInf;
  double cost_b = kInf;
  if (auto v = choose_best_parent(tree_a, x_rand, list_a, env, ops)) {
    min_a = *v;
    cost_a = tree_a.cost(*v) + distance(tree_a.config(*v), x_rand);
  }
  if (auto v = choose_best_parent(tree_b, x_rand, list_b, env, ops)) {
    min_b = *v;
    cost_b = tree_b.cost(*v) + distance(tree_b.config(*v), x_rand);
  }

  BestTreeParent result;
  result.use_tree_a = cost_a <= cost_b;
  result.vertex = result.use_tree_a ? min_a : min_b;

  if (connection && min_a && min_b) {
    result.connection_attempted = true;
    sigma_f = connect_trees(path_through(tree_a, *min_a, x_rand),
                            path_through(tree_b, *min_b, x_rand), sigma_f);
  }
  return result;
}

std::optional<PathSolution> brrt_connect(const Tree& current, VertexId x_new, const Tree& other,
                                         VertexId x_conn, double eta, double gamma,
                                         const Environment& env, OpCounters* ops) {
  const Config& target = current.config(x_new);
  Config probe = extend(other.config(x_conn), target, eta);
  if (ops) ++ops->steer;

  const double radius = near_radius(other.size(), other.dim(), gamma, eta);
  std::vector<VertexId> near = other.index().near(probe, radius);
  if (ops) ++ops->near;
  if (near.empty()) {
    near.push_back(other.index().nearest(probe));
    if (ops) ++ops->nearest;
  }

  std::vector<Candidate> list = get_sorted_list(other, target, near, ops);
  const auto best = choose_best_parent(other, target, list, env, ops);
  if (!best) return std::nullopt;

  PathSolution bridge = path_through(other, *best, target);
  return concat_paths(current.extract_path(x_new), reversed(bridge));
}

namespace {

class RrtStarPlanner final : public Planner {
 public:
  RrtStarPlanner(const Environment& env, const PlannerConfig& config)
      : Planner(PlannerKind::kRrtStar, env, config) {
    state_.trees.emplace_back(env.dim, env.start);
  }

 private:
  IterationOutcome do_step() override {
    IterationOutcome out;
    Tree& tree = state_.trees[0];
    const Config x_rand = sample_free(env_, rng_, &state_.ops);

    const double radius = near_radius(tree.size(), env_.dim, gamma_);
    tree.index().near(x_rand, radius, near_a_);
    ++state_.ops.near;
    if (near_a_.empty()) {
      near_a_.push_back(tree.index().nearest(x_rand));
      ++state_.ops.nearest;
    }

    get_sorted_list(tree, x_rand, near_a_, list_a_, &state_.ops);
    const auto best = choose_best_parent(tree, x_rand, list_a_, env_, &state_.ops);
    if (!best) return out;

    const VertexId vid = tree.insert_vertex(x_rand, *best);
    out.inserted = true;
    out.rewired_count = tree.rewire_vertices(vid, list_a_, env_, &state_.ops);
    if (in_goal(env_, x_rand)) {
      out.new_best = adopt_solution(tree.extract_path(vid));
    }
    return out;
  }
};

class BRrtStarPlanner final : public Planner {
 public:
  BRrtStarPlanner(const Environment& env, const PlannerConfig& config)
      : Planner(PlannerKind::kBRrtStar, env, config) {
    state_.trees.emplace_back(env.dim, env.start);
    state_.trees.emplace_back(env.dim, env.goal.center);
  }

  std::size_t active_tree() const override { return current_; }

 private:
  IterationOutcome do_step() override {
    IterationOutcome out;
    Tree& tree = state_.trees[current_];
    Tree& other = state_.trees[1 - current_];

    const Config x_rand = sample_free(env_, rng_, &state_.ops);
    const VertexId nearest = tree.index().nearest(x_rand);
    ++state_.ops.nearest;
    const Config x_new = extend(tree.config(nearest), x_rand, eta_);
    ++state_.ops.steer;

    const double radius = near_radius(tree.size(), env_.dim, gamma_, eta_);
    tree.index().near(x_new, radius, near_a_);
    ++state_.ops.near;
    get_sorted_list(tree, x_new, near_a_, list_a_, &state_.ops);
    const auto best = choose_best_parent(tree, x_new, list_a_, env_, &state_.ops);

    if (best) {
      const VertexId vid = tree.insert_vertex(x_new, *best);
      out.inserted = true;
      out.rewired_count = tree.rewire_vertices(vid, list_a_, env_, &state_.ops);

      const VertexId x_conn = other.index().nearest(x_new);
      ++state_.ops.nearest;
      out.connection_attempted = true;
      auto bridged = brrt_connect(tree, vid, other, x_conn, eta_, gamma_, env_, &state_.ops);
      if (bridged) {
        if (current_ == 1) *bridged = reversed(*bridged);
        out.new_best = adopt_solution(std::move(*bridged));
      }
    }
    current_ = 1 - current_;
    return out;
  }

  std::size_t current_ = 0;
};

class IbRrtStarPlanner final : public Planner {
 public:
  IbRrtStarPlanner(const Environment& env, const PlannerConfig& config)
      : Planner(PlannerKind::kIbRrtStar, env, config) {
    state_.trees.emplace_back(env.dim, env.start);
    state_.trees.emplace_back(env.dim, env.goal.center);
  }

 private:
  IterationOutcome do_step() override {
    IterationOutcome out;
    Tree& tree_a = state_.trees[0];
    Tree& tree_b = state_.trees[1];

    const Config x_rand = sample_free(env_, rng_, &state_.ops);

    // One ball spans both trees; the vertex count is the bidirectional total.
    const double radius = near_radius(tree_a.size() + tree_b.size(), env_.dim, gamma_);
    tree_a.index().near(x_rand, radius, near_a_);
    ++state_.ops.near;
    tree_b.index().near(x_rand, radius, near_b_);
    ++state_.ops.near;

    bool connection = true;
    if (near_a_.empty() && near_b_.empty()) {
      near_a_.push_back(tree_a.index().nearest(x_rand));
      ++state_.ops.nearest;
      near_b_.push_back(tree_b.index().nearest(x_rand));
      ++state_.ops.nearest;
      connection = false;
    }

    get_sorted_list(tree_a, x_rand, near_a_, list_a_, &state_.ops);
    get_sorted_list(tree_b, x_rand, near_b_, list_b_, &state_.ops);

    const double before = state_.best_cost();
    const BestTreeParent pick = get_best_tree_parent(
        tree_a, tree_b, list_a_, list_b_, connection, x_rand, state_.sigma_f, env_, &state_.ops);
    out.connection_attempted = pick.connection_attempted;
    if (state_.best_cost() < before) {
      out.new_best = true;
      mark_improvement();
    }

    if (pick.vertex) {
      Tree& chosen = pick.use_tree_a ? tree_a : tree_b;
      const auto& list = pick.use_tree_a ? list_a_ : list_b_;
      const VertexId vid = chosen.insert_vertex(x_rand, *pick.vertex);
      out.inserted = true;
      out.rewired_count = chosen.rewire_vertices(vid, list, env_, &state_.ops);
    }
    return out;
  }
};

class BiRrtPlanner final : public Planner {
 public:
  BiRrtPlanner(const Environment& env, const PlannerConfig& config)
      : Planner(PlannerKind::kBiRrt, env, config) {
    state_.trees.emplace_back(env.dim, env.start);
    state_.trees.emplace_back(env.dim, env.goal.center);
  }

  std::size_t active_tree() const override { return current_; }

 private:
  IterationOutcome do_step() override {
    IterationOutcome out;
    Tree& tree = state_.trees[current_];
    Tree& other = state_.trees[1 - current_];

    const Config x_rand = sample_free(env_, rng_, &state_.ops);
    const VertexId nearest = tree.index().nearest(x_rand);
    ++state_.ops.nearest;
    const Config x_new = extend(tree.config(nearest), x_rand, eta_);
    ++state_.ops.steer;

    if (obstacle_free_path(env_, tree.config(nearest), x_new, &state_.ops)) {
      const VertexId vid = tree.insert_vertex(x_new, nearest);
      out.inserted = true;
      if (!state_.sigma_f) {
        // Feasibility baseline: one greedy bridge attempt, and the first
        // connection is final.
        const VertexId closest = other.index().nearest(x_new);
        ++state_.ops.nearest;
        out.connection_attempted = true;
        if (obstacle_free_path(env_, x_new, other.config(closest), &state_.ops)) {
          PathSolution bridge = path_through(other, closest, x_new);
          PathSolution joined = concat_paths(tree.extract_path(vid), reversed(bridge));
          if (current_ == 1) joined = reversed(joined);
          out.new_best = adopt_solution(std::move(joined));
        }
      }
    }
    current_ = 1 - current_;
    return out;
  }

  std::size_t current_ = 0;
};

}  // namespace

std::unique_ptr<Planner> Planner::make(PlannerKind kind, const Environment& env,
                                       const PlannerConfig& config) {
  validate_environment(env);
  if (config.max_nodes < 1) throw std::invalid_argument("PlannerConfig: max_nodes must be >= 1");
  switch (kind) {
    case PlannerKind::kRrtStar: return std::make_unique<RrtStarPlanner>(env, config);
    case PlannerKind::kBRrtStar: return std::make_unique<BRrtStarPlanner>(env, config);
    case PlannerKind::kIbRrtStar: return std::make_unique<IbRrtStarPlanner>(env, config);
    case PlannerKind::kBiRrt: return std::make_unique<BiRrtPlanner>(env, config);
  }
  throw std::logic_error("Planner::make: bad planner kind");
}

PlannerState run(PlannerKind kind, const PlannerConfig& config, const Environment& env,
                 const StepObserver& observer) {
  auto planner = Planner::make(kind, env, config);
  const auto started = std::chrono::steady_clock::now();
  PlannerState& state = planner->state_;
  for (std::uint64_t i = 0; i < config.max_iterations; ++i) {
    if (state.node_count() >= config.max_nodes) {
      state.capped = true;
      break;
    }
    const IterationOutcome outcome = planner->step();
    if (observer && observer(*planner, outcome)) break;
  }
  state.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return std::move(state);
}

}  // namespace rrts
