#pragma once

#include <optional>
#include <span>
#include <string>

#include "rrts/tree.hpp"

namespace rrts {

// Deterministic SVG picture of a planar run: obstacles filled, each tree's
// edges in its own color, the solution path highlighted, iteration and cost
// annotated. Only 2-D environments render; anything else is a usage error.
std::string render_2d(const Environment& env,
                      std::span<const std::vector<Tree::SnapshotRow>> trees,
                      const PathSolution* sigma_f, std::uint64_t iteration,
                      std::optional<double> cost);

}  // namespace rrts
