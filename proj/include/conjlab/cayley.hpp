#pragma once

#include <cstdint>
#include <vector>

#include "conjlab/bound.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

/// {g : |g| <= radius} in breadth-first order. Elements of the sphere of
/// radius r occupy [sphere_start[r], sphere_start[r + 1]).
struct CayleyBall {
  std::uint64_t radius = 0;
  std::vector<GroupElement> elements;
  std::vector<std::size_t> sphere_start;

  std::size_t size() const { return elements.size(); }
};

/// Throws ResourceError (with the count reached so far) once more than
/// node_budget elements would be stored.
CayleyBall cayley_ball(const GroupModel& model, std::uint64_t radius,
                       std::uint64_t node_budget = kDefaultNodeBudget);

/// Geodesic length over the model's alphabet. Exact when it is at most
/// budget; otherwise AtLeast(budget + 1), or AtLeast of the first unexplored
/// radius if node_budget runs out.
Bound word_length(const GroupModel& model, const GroupElement& g, std::uint64_t budget,
                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace conjlab
