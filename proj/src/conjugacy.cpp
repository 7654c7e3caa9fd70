#include "conjlab/conjugacy.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "conjlab/errors.hpp"

namespace conjlab {

std::vector<ConjNeighbor> conj_neighbors(const GroupModel& model, const GroupElement& h) {
  model.require(h);
  std::vector<ConjNeighbor> out;
  out.reserve(model.alphabet().size());
  for (const auto& letter : model.alphabet()) {
    out.push_back({letter.generator, model.conjugate(letter.element, h)});
  }
  return out;
}

ConjGraphBall explore_component(const GroupModel& model, const GroupElement& base,
                                std::uint64_t radius, std::uint64_t node_budget) {
  model.require(base);
  ConjGraphBall ball;
  ball.base = base;
  ball.radius = radius;
  ball.vertices.push_back(base);
  ball.dist.emplace(base, 0);

  // Neighbour lists are kept so that edges can be filtered once membership is final.
  std::vector<std::vector<ConjNeighbor>> neighbors;
  bool frontier_escapes = false;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const std::uint64_t d = ball.dist.at(ball.vertices[i]);
    neighbors.push_back(conj_neighbors(model, ball.vertices[i]));
    for (const auto& n : neighbors.back()) {
      if (ball.dist.contains(n.element)) continue;
      if (d == radius || ball.budget_exhausted) {
        frontier_escapes = true;
        continue;
      }
      if (ball.vertices.size() >= node_budget) {
        ball.budget_exhausted = true;
        frontier_escapes = true;
        continue;
      }
      ball.dist.emplace(n.element, d + 1);
      ball.vertices.push_back(n.element);
    }
  }
  ball.component_exhausted = !frontier_escapes;

  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    for (auto& n : neighbors[i]) {
      if (ball.dist.contains(n.element)) {
        ball.edges.push_back({ball.vertices[i], std::move(n.label), std::move(n.element)});
      }
    }
  }
  return ball;
}

Bound conj_distance(const GroupModel& model, const GroupElement& h1, const GroupElement& h2,
                    std::uint64_t budget, std::uint64_t node_budget) {
  model.require(h1);
  model.require(h2);
  if (budget == 0) return Bound::AtLeast(0);
  if (h1 == h2) return Bound::Exact(0);
  std::unordered_set<GroupElement, ElementHash> seen{h1};
  std::vector<GroupElement> frontier{h1};
  for (std::uint64_t r = 1; r < budget && !frontier.empty(); ++r) {
    std::vector<GroupElement> next;
    for (const auto& v : frontier) {
      for (const auto& letter : model.alphabet()) {
        GroupElement w = model.conjugate(letter.element, v);
        if (w == h2) return Bound::Exact(r);
        if (seen.insert(w).second) {
          if (seen.size() > node_budget) return Bound::AtLeast(r);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return Bound::AtLeast(budget);
}

std::string export_dot(const GroupModel& model, const ConjGraphBall& ball, bool suppress_loops) {
  std::vector<std::string> nodes;
  nodes.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) nodes.push_back(model.encode(v));
  std::sort(nodes.begin(), nodes.end());

  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : ball.edges) {
    if (suppress_loops && e.src == e.dst) continue;
    edges.emplace_back(model.encode(e.src), e.label.display(), model.encode(e.dst));
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph sk {\n";
  for (const auto& n : nodes) out << "  \"" << n << "\";\n";
  for (const auto& [src, label, dst] : edges) {
    out << "  \"" << src << "\" -> \"" << dst << "\" [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace conjlab
