#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "conjlab/coefficient.hpp"
#include "conjlab/group.hpp"
#include "conjlab/group_ring.hpp"

namespace conjlab {

/// Infinite-support rules a potential may carry besides its finite table.
enum class ClosedForm {
  kNone,
  /// On H3: phi(A_p A_x^-k) = 1/k for k >= 1, zero elsewhere.
  kAppendixHarmonic,
};

/// Total function G -> Q: a finite table plus an optional closed-form rule
/// with disjoint support.
class Potential {
 public:
  using Table = std::unordered_map<GroupElement, Rational, ElementHash>;

  explicit Potential(ModelPtr model, Table table = {}, ClosedForm closed_form = ClosedForm::kNone);

  static Potential delta(ModelPtr model, const GroupElement& g, Rational value = 1);
  static Potential appendix_harmonic();
  /// The k-th support point A_p A_x^-k = H3(1,-k,-k) of the harmonic rule.
  static GroupElement harmonic_point(std::uint64_t k);

  const GroupModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const Table& table() const { return table_; }
  ClosedForm closed_form() const { return closed_form_; }
  bool finite_support() const { return closed_form_ == ClosedForm::kNone; }

  Rational operator()(const GroupElement& g) const;
  /// Index k when g lies on the closed-form support.
  std::optional<Integer> closed_form_index(const GroupElement& g) const;
  /// Value of the potential with the closed-form rule cut off after max_index.
  Rational truncated(const GroupElement& g, std::uint64_t max_index) const;
  /// Nonzero points of the truncated potential.
  std::vector<std::pair<GroupElement, Rational>> support(std::uint64_t max_index) const;
  /// sum over the closed-form tail k > max_index of |phi|^p, bounded above
  /// (integral test); +inf when the tail diverges. Zero without a rule.
  double tail_mass_bound(std::uint64_t max_index, double p) const;

 private:
  ModelPtr model_;
  Table table_;
  ClosedForm closed_form_;
};

/// Groupoid arrow stored as the pair (h, g) of chi(h, g); it runs from
/// g^-1 h to h g^-1.
struct Morphism {
  GroupElement h;
  GroupElement g;

  GroupElement source(const GroupModel& m) const { return m.multiply(m.invert(g), h); }
  GroupElement target(const GroupModel& m) const { return m.multiply(h, m.invert(g)); }
  /// hg = gh.
  bool is_loop(const GroupModel& m) const { return m.multiply(h, g) == m.multiply(g, h); }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// The identity arrow at object x is (x, e).
Morphism identity_morphism(const GroupModel& model, const GroupElement& object);

/// psi o phi = (g2 h1, g2 g1) for phi = (h1, g1), psi = (h2, g2).
/// Throws UsageError unless h1 g1^-1 = g2^-1 h2.
Morphism compose_morphisms(const GroupModel& model, const Morphism& psi, const Morphism& phi);

struct TruncationPolicy {
  std::uint64_t max_index = 10'000;
};

/// Either d = [a, .] with a = sum phi(t) t given by a potential, or the
/// inner derivation D_x(a) = xa - ax of an explicit vector.
class Derivation {
 public:
  static Derivation from_potential(Potential potential, TruncationPolicy policy = {});
  static Derivation inner(GroupRingVector x);

  const GroupModel& model() const;
  const ModelPtr& model_ptr() const;
  bool is_inner() const { return std::holds_alternative<GroupRingVector>(kind_); }
  /// nullptr for inner derivations.
  const Potential* potential() const { return std::get_if<Potential>(&kind_); }
  /// nullptr for potential-defined derivations.
  const GroupRingVector* inner_element() const { return std::get_if<GroupRingVector>(&kind_); }
  const TruncationPolicy& truncation() const { return policy_; }
  /// True when evaluation drops the closed-form tail beyond the cutoff.
  bool truncated() const { return potential() && !potential()->finite_support(); }

  /// Bound on ||d(g) - d_K(g)||_p uniformly in g, where d_K is the evaluated
  /// (truncated) derivation: 2 (tail mass)^(1/p). Zero when exact.
  double tail_bound(double p) const;

 private:
  Derivation(std::variant<Potential, GroupRingVector> kind, TruncationPolicy policy)
      : kind_(std::move(kind)), policy_(policy) {}

  std::variant<Potential, GroupRingVector> kind_;
  TruncationPolicy policy_;
};

struct Evaluation {
  GroupRingVector value;
  /// False when a closed-form tail was cut off at `cutoff`.
  bool exact = true;
  std::uint64_t cutoff = 0;
};

/// d(g) = sum over t of (phi(g t g^-1) - phi(t)) g t; only t in S ∪ g^-1 S g
/// contribute, S the support of phi. Inner derivations evaluate x g - g x.
Evaluation derivation_apply(const Derivation& d, const GroupElement& g);
/// Linear extension over the support of a.
Evaluation derivation_apply_linear(const Derivation& d, const GroupRingVector& a);

/// chi(h, g) = phi(h g^-1) - phi(g^-1 h), using the untruncated potential.
Coefficient character_from_potential(const Potential& phi, const Morphism& mor);

struct CharacterValue {
  Coefficient value;
  /// False when the coefficient may differ from the untruncated one.
  bool exact = true;
};

/// delta_h(d(g)) read off derivation_apply.
CharacterValue character_from_derivation(const Derivation& d, const Morphism& mor);

struct LeibnizResidual {
  /// ||d(gh) - d(g) h - g d(h)||_1.
  double l1 = 0.0;
  bool vanishes = true;
  bool exact = true;
  /// Bound on how far the untruncated residual can be from `l1`.
  double tail_bound = 0.0;
};

LeibnizResidual leibniz_check(const Derivation& d, const GroupElement& g, const GroupElement& h);

using Character = std::function<Coefficient(const Morphism&)>;

struct QuasiInnerResult {
  bool holds = true;
  std::optional<Morphism> witness;
  Coefficient witness_value;
};

/// True iff chi vanishes on every listed loop; the first violation is
/// returned as witness. Throws UsageError if a listed morphism is not a loop.
QuasiInnerResult quasi_inner_check(const GroupModel& model, const Character& chi,
                                   std::span<const Morphism> loops);
QuasiInnerResult quasi_inner_check(const Derivation& d, std::span<const Morphism> loops);
QuasiInnerResult quasi_inner_check(const Potential& phi, std::span<const Morphism> loops);

}  // namespace conjlab
