#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "conjlab/bound.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/derivation.hpp"

namespace conjlab {

struct BoundednessProbe {
  double max_norm = 0.0;
  GroupElement argmax;
  /// False when the derivation was evaluated with a truncated tail.
  bool exact = true;
  /// Bound on the truncation error of every sampled ||d(g)||_p.
  double tail_bound = 0.0;
  std::size_t ball_size = 0;
  /// Number of distinct inner automorphisms actually evaluated.
  std::size_t distinct_actions = 0;
};

/// max ||d(g)||_p over the Cayley ball of the given radius. ||d(g)||_p
/// depends only on how g acts by conjugation, so conjugators are grouped by
/// their action on the generators.
BoundednessProbe g_boundedness_probe(const Derivation& d, std::uint64_t radius, double p,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

/// For each r: sup |phi(g)| over vertices of the ball with dist > r
/// (candidate limit 0).
std::vector<std::pair<std::uint64_t, Rational>> stabilisation_probe(
    const Potential& phi, const ConjGraphBall& ball, std::span<const std::uint64_t> radii);

struct EdgeJumpReport {
  /// Unordered pairs of distinct adjacent vertices with |phi(u) - phi(v)| >= eps.
  std::size_t count = 0;
  /// One representative edge per pair, ordered by encoding.
  std::vector<ConjEdge> witnesses;
};

EdgeJumpReport edge_jump_probe(const Potential& phi, const ConjGraphBall& ball,
                               const Rational& epsilon);

}  // namespace conjlab
