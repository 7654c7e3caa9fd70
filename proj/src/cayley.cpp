#include "conjlab/cayley.hpp"

#include <unordered_set>

#include "conjlab/errors.hpp"

namespace conjlab {

CayleyBall cayley_ball(const GroupModel& model, std::uint64_t radius, std::uint64_t node_budget) {
  CayleyBall ball;
  ball.radius = radius;
  std::unordered_set<GroupElement, ElementHash> seen;
  ball.elements.push_back(model.identity());
  seen.insert(ball.elements.front());
  ball.sphere_start = {0, 1};
  for (std::uint64_t r = 1; r <= radius; ++r) {
    const std::size_t begin = ball.sphere_start[r - 1];
    const std::size_t end = ball.sphere_start[r];
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& letter : model.alphabet()) {
        GroupElement next = model.multiply(ball.elements[i], letter.element);
        if (seen.insert(next).second) {
          if (ball.elements.size() >= node_budget) {
            throw ResourceError("cayley ball exceeded node budget of " +
                                    std::to_string(node_budget),
                                ball.elements.size());
          }
          ball.elements.push_back(std::move(next));
        }
      }
    }
    ball.sphere_start.push_back(ball.elements.size());
  }
  return ball;
}

Bound word_length(const GroupModel& model, const GroupElement& g, std::uint64_t budget,
                  std::uint64_t node_budget) {
  model.require(g);
  if (auto closed = model.geodesic_length(g)) {
    return *closed <= budget ? Bound::Exact(*closed) : Bound::AtLeast(budget + 1);
  }
  std::unordered_set<GroupElement, ElementHash> seen{model.identity()};
  std::vector<GroupElement> frontier{model.identity()};
  for (std::uint64_t r = 0;; ++r) {
    for (const auto& x : frontier) {
      if (x == g) return Bound::Exact(r);
    }
    if (r == budget) return Bound::AtLeast(budget + 1);
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& letter : model.alphabet()) {
        GroupElement y = model.multiply(x, letter.element);
        if (seen.insert(y).second) {
          if (seen.size() > node_budget) return Bound::AtLeast(r + 1);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace conjlab
