#include "rrts/nn_index.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rrts {

namespace {
// Axis-gap pruning is conservative by this factor so a point whose computed
// distance rounds just inside the bound is never lost to the subtree cut.
constexpr double kPruneSlack = 1.0 - 1e-12;
}  // namespace

NnIndex::NnIndex(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("NnIndex: dim must be >= 1");
}

double NnIndex::point_distance(std::uint32_t node, const Config& q) const {
  const double* p = &coords_[static_cast<std::size_t>(node) * dim_];
  double sq = 0.0;
  for (int k = 0; k < dim_; ++k) {
    const double d = q[k] - p[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

void NnIndex::insert(const Config& x, VertexId id) {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("NnIndex::insert: dimension mismatch");
  }
  if (id < id_seen_.size() && id_seen_[id]) {
    throw std::invalid_argument("NnIndex::insert: duplicate id " + std::to_string(id));
  }
  if (id >= id_seen_.size()) id_seen_.resize(static_cast<std::size_t>(id) + 1, false);
  id_seen_[id] = true;

  const auto fresh = static_cast<std::uint32_t>(nodes_.size());
  coords_.insert(coords_.end(), x.begin(), x.end());
  ids_.push_back(id);
  nodes_.emplace_back();
  if (fresh == 0) return;

  std::uint32_t cur = 0;
  int axis = 0;
  for (;;) {
    std::uint32_t& next = x[axis] < coord(cur, axis) ? nodes_[cur].left : nodes_[cur].right;
    if (next == kNone) {
      next = fresh;
      return;
    }
    cur = next;
    axis = (axis + 1) % dim_;
  }
}

void NnIndex::nearest_descend(std::uint32_t node, int axis, const Config& q, double& best_dist,
                              VertexId& best_id) const {
  const double d = point_distance(node, q);
  if (d < best_dist || (d == best_dist && ids_[node] < best_id)) {
    best_dist = d;
    best_id = ids_[node];
  }
  const double gap = q[axis] - coord(node, axis);
  const int next_axis = (axis + 1) % dim_;
  const std::uint32_t first = gap < 0.0 ? nodes_[node].left : nodes_[node].right;
  const std::uint32_t second = gap < 0.0 ? nodes_[node].right : nodes_[node].left;
  if (first != kNone) nearest_descend(first, next_axis, q, best_dist, best_id);
  if (second != kNone && std::abs(gap) * kPruneSlack <= best_dist) {
    nearest_descend(second, next_axis, q, best_dist, best_id);
  }
}

VertexId NnIndex::nearest(const Config& q) const {
  if (nodes_.empty()) throw std::logic_error("NnIndex::nearest: empty index");
  if (static_cast<int>(q.size()) != dim_) {
    throw std::invalid_argument("NnIndex::nearest: dimension mismatch");
  }
  double best_dist = std::numeric_limits<double>::infinity();
  VertexId best_id = 0;
  nearest_descend(0, 0, q, best_dist, best_id);
  return best_id;
}

void NnIndex::near_descend(std::uint32_t node, int axis, const Config& q, double r,
                           std::vector<VertexId>& out) const {
  if (point_distance(node, q) <= r) out.push_back(ids_[node]);
  const double gap = q[axis] - coord(node, axis);
  const int next_axis = (axis + 1) % dim_;
  if (nodes_[node].left != kNone && (gap < 0.0 || gap * kPruneSlack <= r)) {
    near_descend(nodes_[node].left, next_axis, q, r, out);
  }
  if (nodes_[node].right != kNone && (gap >= 0.0 || -gap * kPruneSlack <= r)) {
    near_descend(nodes_[node].right, next_axis, q, r, out);
  }
}

void NnIndex::near(const Config& q, double r, std::vector<VertexId>& out) const {
  out.clear();
  if (!(r > 0.0)) throw std::invalid_argument("NnIndex::near: radius must be positive");
  if (static_cast<int>(q.size()) != dim_) {
    throw std::invalid_argument("NnIndex::near: dimension mismatch");
  }
  if (nodes_.empty()) return;
  near_descend(0, 0, q, r, out);
}

std::vector<VertexId> NnIndex::near(const Config& q, double r) const {
  std::vector<VertexId> out;
  near(q, r, out);
  return out;
}

}  // namespace rrts
