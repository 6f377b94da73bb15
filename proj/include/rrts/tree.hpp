#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrts/environment.hpp"
#include "rrts/nn_index.hpp"

namespace rrts {

// One entry of a sorted candidate-parent list: reaching `target` through
// vertex `id` costs total_cost = cost-to-root(id) + distance(id, target).
struct Candidate {
  VertexId id = 0;
  double total_cost = 0.0;
};

// A concrete state sequence with its summed Euclidean cost.
struct PathSolution {
  std::vector<Config> states;
  double cost = 0.0;
};

// Rooted search tree with parent links, cached cost-to-root, and an exact
// nearest-neighbor index. Costs stay exact under rewiring because deltas are
// propagated through the whole affected subtree.
class Tree {
 public:
  struct SnapshotRow {
    VertexId id;
    Config coords;
    VertexId parent;
    double cost;
  };

  Tree(int dim, Config root);

  // Caller guarantees the parent edge is collision-free.
  VertexId insert_vertex(const Config& x, VertexId parent);

  // Reparents every candidate that becomes cheaper through new_id (and whose
  // segment is collision-free), skipping new_id's own parent. Returns the
  // number of vertices reparented.
  std::uint32_t rewire_vertices(VertexId new_id, std::span<const Candidate> sorted,
                                const Environment& env, OpCounters* ops = nullptr);

  PathSolution extract_path(VertexId v) const;

  const Config& config(VertexId v) const { return configs_[v]; }
  double cost(VertexId v) const { return cost_[v]; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  VertexId root() const { return 0; }
  std::size_t size() const { return configs_.size(); }
  int dim() const { return dim_; }
  const NnIndex& index() const { return index_; }

  std::vector<SnapshotRow> snapshot() const;

 private:
  void propagate_cost_delta(VertexId v, double delta);

  int dim_;
  std::vector<Config> configs_;
  std::vector<VertexId> parent_;
  std::vector<double> cost_;
  std::vector<std::vector<VertexId>> children_;
  NnIndex index_;
  std::vector<VertexId> dfs_scratch_;
};

// One candidate per near vertex, ascending by total cost (ties by smaller id).
// No collision checks happen here; they are deferred to choose_best_parent.
void get_sorted_list(const Tree& tree, const Config& target, std::span<const VertexId> near,
                     std::vector<Candidate>& out, OpCounters* ops = nullptr);
std::vector<Candidate> get_sorted_list(const Tree& tree, const Config& target,
                                       std::span<const VertexId> near, OpCounters* ops = nullptr);

// First candidate whose segment to `target` is collision-free; nullopt when
// every candidate is blocked. Stops checking at the first success.
std::optional<VertexId> choose_best_parent(const Tree& tree, const Config& target,
                                           std::span<const Candidate> sorted,
                                           const Environment& env, OpCounters* ops = nullptr);

// Joins two paths sharing an endpoint: a.states.back() must equal
// b.states.front() exactly, else std::invalid_argument. The junction state
// appears once; costs add.
PathSolution concat_paths(const PathSolution& a, const PathSolution& b);

// Same states in reverse order, same cost.
PathSolution reversed(const PathSolution& p);

// Root-to-v path extended by the segment v -> tip (skipped when tip equals
// the vertex configuration exactly).
PathSolution path_through(const Tree& tree, VertexId v, const Config& tip);

}  // namespace rrts
