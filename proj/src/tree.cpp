#include "rrts/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrts {

Tree::Tree(int dim, Config root) : dim_(dim), index_(dim) {
  if (static_cast<int>(root.size()) != dim) {
    throw std::invalid_argument("Tree: root dimension mismatch");
  }
  index_.insert(root, 0);
  configs_.push_back(std::move(root));
  parent_.push_back(0);
  cost_.push_back(0.0);
  children_.emplace_back();
}

VertexId Tree::insert_vertex(const Config& x, VertexId parent) {
  if (parent >= configs_.size()) throw std::invalid_argument("insert_vertex: unknown parent");
  const auto id = static_cast<VertexId>(configs_.size());
  index_.insert(x, id);
  configs_.push_back(x);
  parent_.push_back(parent);
  cost_.push_back(cost_[parent] + distance(configs_[parent], x));
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

void Tree::propagate_cost_delta(VertexId v, double delta) {
  dfs_scratch_.clear();
  dfs_scratch_.push_back(v);
  while (!dfs_scratch_.empty()) {
    const VertexId cur = dfs_scratch_.back();
    dfs_scratch_.pop_back();
    cost_[cur] += delta;
    dfs_scratch_.insert(dfs_scratch_.end(), children_[cur].begin(), children_[cur].end());
  }
}

std::uint32_t Tree::rewire_vertices(VertexId new_id, std::span<const Candidate> sorted,
                                    const Environment& env, OpCounters* ops) {
  std::uint32_t rewired = 0;
  const Config& x_new = configs_[new_id];
  const VertexId own_parent = parent_[new_id];
  for (const Candidate& candidate : sorted) {
    const VertexId v = candidate.id;
    if (v == own_parent || v == new_id) continue;
    const double through_new = cost_[new_id] + distance(x_new, configs_[v]);
    if (through_new < cost_[v] && obstacle_free_path(env, x_new, configs_[v], ops)) {
      auto& siblings = children_[parent_[v]];
      siblings.erase(std::find(siblings.begin(), siblings.end(), v));
      parent_[v] = new_id;
      children_[new_id].push_back(v);
      propagate_cost_delta(v, through_new - cost_[v]);
      ++rewired;
    }
  }
  return rewired;
}

PathSolution Tree::extract_path(VertexId v) const {
  if (v >= configs_.size()) throw std::invalid_argument("extract_path: unknown vertex");
  PathSolution path;
  path.cost = cost_[v];
  VertexId cur = v;
  for (;;) {
    path.states.push_back(configs_[cur]);
    if (cur == 0) break;
    cur = parent_[cur];
  }
  std::reverse(path.states.begin(), path.states.end());
  return path;
}

std::vector<Tree::SnapshotRow> Tree::snapshot() const {
  std::vector<SnapshotRow> rows;
  rows.reserve(configs_.size());
  for (VertexId v = 0; v < configs_.size(); ++v) {
    rows.push_back({v, configs_[v], parent_[v], cost_[v]});
  }
  return rows;
}

void get_sorted_list(const Tree& tree, const Config& target, std::span<const VertexId> near,
                     std::vector<Candidate>& out, OpCounters* ops) {
  out.clear();
  out.reserve(near.size());
  for (const VertexId v : near) {
    out.push_back({v, tree.cost(v) + distance(tree.config(v), target)});
  }
  if (ops) ops->steer += near.size();
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.total_cost != b.total_cost ? a.total_cost < b.total_cost : a.id < b.id;
  });
}

std::vector<Candidate> get_sorted_list(const Tree& tree, const Config& target,
                                       std::span<const VertexId> near, OpCounters* ops) {
  std::vector<Candidate> out;
  get_sorted_list(tree, target, near, out, ops);
  return out;
}

std::optional<VertexId> choose_best_parent(const Tree& tree, const Config& target,
                                           std::span<const Candidate> sorted,
                                           const Environment& env, OpCounters* ops) {
  for (const Candidate& candidate : sorted) {
    if (obstacle_free_path(env, tree.config(candidate.id), target, ops)) {
      return candidate.id;
    }
  }
  return std::nullopt;
}

PathSolution concat_paths(const PathSolution& a, const PathSolution& b) {
  if (a.states.empty() || b.states.empty()) {
    throw std::invalid_argument("concat_paths: empty path");
  }
  if (a.states.back() != b.states.front()) {
    throw std::invalid_argument("concat_paths: junction states differ");
  }
  PathSolution out;
  out.cost = a.cost + b.cost;
  out.states.reserve(a.states.size() + b.states.size() - 1);
  out.states = a.states;
  out.states.insert(out.states.end(), b.states.begin() + 1, b.states.end());
  return out;
}

PathSolution reversed(const PathSolution& p) {
  PathSolution out;
  out.cost = p.cost;
  out.states.assign(p.states.rbegin(), p.states.rend());
  return out;
}

PathSolution path_through(const Tree& tree, VertexId v, const Config& tip) {
  PathSolution path = tree.extract_path(v);
  if (path.states.back() != tip) {
    path.cost += distance(path.states.back(), tip);
    path.states.push_back(tip);
  }
  return path;
}

}  // namespace rrts
