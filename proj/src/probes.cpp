#include "conjlab/probes.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "conjlab/cayley.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

struct ActionHash {
  std::size_t operator()(const std::vector<GroupElement>& images) const {
    std::size_t seed = images.size();
    for (const auto& g : images) seed ^= g.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace

BoundednessProbe g_boundedness_probe(const Derivation& d, std::uint64_t radius, double p,
                                     std::uint64_t node_budget) {
  if (!(p >= 1.0)) throw UsageError("g_boundedness_probe needs p >= 1");
  const GroupModel& model = d.model();
  const CayleyBall ball = cayley_ball(model, radius, node_budget);

  BoundednessProbe out;
  out.argmax = model.identity();
  out.exact = !d.truncated();
  out.tail_bound = d.tail_bound(p);
  out.ball_size = ball.size();

  std::unordered_map<std::vector<GroupElement>, double, ActionHash> norm_of_action;
  for (const auto& g : ball.elements) {
    std::vector<GroupElement> action;
    for (const auto& id : model.generator_ids()) {
      action.push_back(model.conjugate(g, model.generator({id})));
    }
    auto it = norm_of_action.find(action);
    if (it == norm_of_action.end()) {
      const double norm = lp_norm(derivation_apply(d, g).value, p);
      it = norm_of_action.emplace(std::move(action), norm).first;
    }
    if (it->second > out.max_norm) {
      out.max_norm = it->second;
      out.argmax = g;
    }
  }
  out.distinct_actions = norm_of_action.size();
  return out;
}

std::vector<std::pair<std::uint64_t, Rational>> stabilisation_probe(
    const Potential& phi, const ConjGraphBall& ball, std::span<const std::uint64_t> radii) {
  if (!std::is_sorted(radii.begin(), radii.end())) {
    throw UsageError("stabilisation_probe radii must be increasing");
  }
  std::vector<std::pair<std::uint64_t, Rational>> out;
  for (auto r : radii) {
    Rational sup = 0;
    for (const auto& v : ball.vertices) {
      if (ball.dist.at(v) > r) sup = std::max(sup, Rational(abs(phi(v))));
    }
    out.emplace_back(r, sup);
  }
  return out;
}

EdgeJumpReport edge_jump_probe(const Potential& phi, const ConjGraphBall& ball,
                               const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw UsageError("edge_jump_probe needs epsilon > 0");
  const GroupModel& model = phi.model();
  // One entry per unordered pair; the representative is the edge with the
  // smallest (source, label, target) encoding.
  using Rank = std::tuple<std::string, std::string, std::string>;
  std::map<std::pair<std::string, std::string>, std::pair<Rank, ConjEdge>> jumps;
  for (const auto& e : ball.edges) {
    if (e.src == e.dst) continue;
    if (abs(phi(e.src) - phi(e.dst)) < epsilon) continue;
    std::string a = model.encode(e.src), b = model.encode(e.dst);
    Rank rank{a, e.label.display(), b};
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = jumps.find(key);
    if (it == jumps.end()) {
      jumps.emplace(std::move(key), std::make_pair(std::move(rank), e));
    } else if (rank < it->second.first) {
      it->second = {std::move(rank), e};
    }
  }
  EdgeJumpReport out;
  out.count = jumps.size();
  for (auto& [key, entry] : jumps) out.witnesses.push_back(std::move(entry.second));
  return out;
}

}  // namespace conjlab
