#pragma once

#include <cstdint>
#include <vector>

#include "rrts/geometry.hpp"

namespace rrts {

// Handle for a vertex within one tree. Dense, stable, never recycled.
using VertexId = std::uint32_t;

// Incremental kd-tree over (Config, VertexId) pairs. Queries are exact: they
// return precisely what a linear scan using `distance` would, with distance
// ties broken by the smaller id. Points are never removed.
class NnIndex {
 public:
  explicit NnIndex(int dim);

  // Throws std::invalid_argument on duplicate id or dimension mismatch.
  void insert(const Config& x, VertexId id);

  // Throws std::logic_error when the index is empty.
  VertexId nearest(const Config& q) const;

  // All ids within the closed ball of radius r around q, in unspecified order.
  void near(const Config& q, double r, std::vector<VertexId>& out) const;
  std::vector<VertexId> near(const Config& q, double r) const;

  std::size_t size() const { return ids_.size(); }
  int dim() const { return dim_; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffff;

  struct Node {
    std::uint32_t left = kNone;
    std::uint32_t right = kNone;
  };

  double coord(std::uint32_t node, int axis) const {
    return coords_[static_cast<std::size_t>(node) * dim_ + axis];
  }
  double point_distance(std::uint32_t node, const Config& q) const;

  void nearest_descend(std::uint32_t node, int axis, const Config& q, double& best_dist,
                       VertexId& best_id) const;
  void near_descend(std::uint32_t node, int axis, const Config& q, double r,
                    std::vector<VertexId>& out) const;

  int dim_;
  std::vector<double> coords_;  // flattened, dim_ per node
  std::vector<VertexId> ids_;
  std::vector<Node> nodes_;
  std::vector<bool> id_seen_;
};

}  // namespace rrts
