#include <unordered_map>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

const char* const kBCVerdictRules =
    "Plateau(C): the last max(1, ceil(R/2)) shells all equal C; "
    "Growing: the last 3 shells strictly increase; "
    "Inconclusive: otherwise, or whenever a shell is only a lower bound";

std::string BCVerdict::to_string() const {
  switch (kind) {
    case Kind::kPlateau:
      return "Plateau(" + std::to_string(constant) + ")";
    case Kind::kGrowing:
      return "Growing";
    case Kind::kInconclusive:
      break;
  }
  return "Inconclusive";
}

BCVerdict classify_shells(std::span<const BCShell> shells) {
  if (shells.empty()) return {};
  for (const auto& s : shells) {
    if (!s.max_diam.exact) return {};
  }
  const std::size_t max_radius = shells.size() - 1;
  const std::size_t window = std::max<std::size_t>(1, (max_radius + 1) / 2);
  const auto tail = shells.last(std::min(window, shells.size()));
  const std::uint64_t c = tail.front().max_diam.value;
  bool flat = true;
  for (const auto& s : tail) flat = flat && s.max_diam.value == c;
  if (flat) return {BCVerdict::Kind::kPlateau, c};

  if (shells.size() >= 3) {
    const auto last = shells.last(3);
    if (last[0].max_diam.value < last[1].max_diam.value &&
        last[1].max_diam.value < last[2].max_diam.value) {
      return {BCVerdict::Kind::kGrowing, 0};
    }
  }
  return {};
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<GroupElement>& images) const {
    std::size_t seed = images.size();
    for (const auto& g : images) seed ^= g.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace

BCReport bc_probe(const GroupModel& model, std::span<const GroupElement> base_set,
                  std::uint64_t max_cayley_radius, std::uint64_t diam_budget,
                  std::uint64_t node_budget) {
  if (base_set.empty()) throw UsageError("bc_probe needs a nonempty set K");
  BCReport report;
  for (const auto& k : base_set) {
    model.require(k);
    report.base_set.push_back(model.encode(k));
  }

  const CayleyBall ball = cayley_ball(model, max_cayley_radius, node_budget);
  std::unordered_map<std::vector<GroupElement>, Bound, ImageHash> diameter_of;
  std::unordered_map<std::vector<GroupElement>, Bound, ImageHash> distance_of;

  auto pair_distance = [&](const GroupElement& x, const GroupElement& y) {
    std::vector<GroupElement> key{x, y};
    if (auto it = distance_of.find(key); it != distance_of.end()) return it->second;
    const Bound d = conj_distance(model, x, y, diam_budget, node_budget);
    distance_of.emplace(std::move(key), d);
    distance_of.emplace(std::vector<GroupElement>{y, x}, d);
    return d;
  };

  Bound running = Bound::Exact(0);
  for (std::uint64_t r = 0; r <= max_cayley_radius; ++r) {
    for (std::size_t i = ball.sphere_start[r]; i < ball.sphere_start[r + 1]; ++i) {
      const GroupElement& g = ball.elements[i];
      std::vector<GroupElement> images;
      images.reserve(base_set.size());
      for (const auto& k : base_set) images.push_back(model.conjugate(g, k));
      auto it = diameter_of.find(images);
      if (it == diameter_of.end()) {
        Bound diam = Bound::Exact(0);
        for (std::size_t a = 0; a < images.size(); ++a) {
          for (std::size_t b = a + 1; b < images.size(); ++b) {
            diam = max_bound(diam, pair_distance(images[a], images[b]));
          }
        }
        it = diameter_of.emplace(std::move(images), diam).first;
      }
      running = max_bound(running, it->second);
    }
    report.shells.push_back({r, running});
  }
  report.verdict = classify_shells(report.shells);
  return report;
}

}  // namespace conjlab
