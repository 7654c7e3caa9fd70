#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "conjlab/bound.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

/// Edge of the conjugacy graph: dst = label * src * label^-1.
struct ConjEdge {
  GroupElement src;
  Generator label;
  GroupElement dst;
};

struct ConjNeighbor {
  Generator label;
  GroupElement element;
};

/// One entry per alphabet symbol, loops included.
std::vector<ConjNeighbor> conj_neighbors(const GroupModel& model, const GroupElement& h);

/// Breadth-first fragment of the conjugacy graph around a base vertex.
struct ConjGraphBall {
  GroupElement base;
  std::uint64_t radius = 0;
  /// Breadth-first order; vertices.front() == base.
  std::vector<GroupElement> vertices;
  /// Every edge (loops included) whose endpoints are both in the ball.
  std::vector<ConjEdge> edges;
  std::unordered_map<GroupElement, std::uint64_t, ElementHash> dist;
  /// The whole connected component fits inside the ball.
  bool component_exhausted = false;
  /// node_budget stopped the search before the requested radius.
  bool budget_exhausted = false;

  bool contains(const GroupElement& g) const { return dist.contains(g); }
};

ConjGraphBall explore_component(const GroupModel& model, const GroupElement& base,
                                std::uint64_t radius,
                                std::uint64_t node_budget = kDefaultNodeBudget);

/// Conjugation distance rho(h1, h2). Exact when below budget; otherwise
/// AtLeast(budget), which also covers elements of different components.
/// If node_budget runs out first the result is AtLeast of the first radius
/// not fully searched.
Bound conj_distance(const GroupModel& model, const GroupElement& h1, const GroupElement& h2,
                    std::uint64_t budget, std::uint64_t node_budget = kDefaultNodeBudget);

/// Deterministic DOT digraph: nodes sorted by canonical encoding, edges
/// sorted by (source, label, target).
std::string export_dot(const GroupModel& model, const ConjGraphBall& ball, bool suppress_loops);

// --- bounded-conjugation probe ---

struct BCShell {
  std::uint64_t cayley_radius = 0;
  Bound max_diam;
};

struct BCVerdict {
  enum class Kind { kPlateau, kGrowing, kInconclusive };
  Kind kind = Kind::kInconclusive;
  std::uint64_t constant = 0;  // meaningful for kPlateau

  /// "Plateau(C)", "Growing" or "Inconclusive".
  std::string to_string() const;
  friend bool operator==(const BCVerdict&, const BCVerdict&) = default;
};

struct BCReport {
  std::vector<std::string> base_set;  // canonical encodings of K
  std::vector<BCShell> shells;
  BCVerdict verdict;
};

/// Text describing the fixed window rules used by classify_shells.
extern const char* const kBCVerdictRules;

/// Plateau(C) when the last max(1, ceil(R/2)) shells all equal C exactly;
/// otherwise Growing when the last three shells are exact and strictly
/// increasing; otherwise Inconclusive. Any inexact shell makes the verdict
/// Inconclusive.
BCVerdict classify_shells(std::span<const BCShell> shells);

/// For each r <= max_cayley_radius: max over |g| <= r of the conjugation
/// diameter of g K g^-1. Conjugators with identical action on K share one
/// diameter computation.
BCReport bc_probe(const GroupModel& model, std::span<const GroupElement> base_set,
                  std::uint64_t max_cayley_radius, std::uint64_t diam_budget,
                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace conjlab
