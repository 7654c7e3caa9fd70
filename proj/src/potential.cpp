#include <cmath>
#include <limits>

#include "conjlab/derivation.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

Potential::Potential(ModelPtr model, Table table, ClosedForm closed_form)
    : model_(std::move(model)), closed_form_(closed_form) {
  if (!model_) throw UsageError("potential needs a model");
  if (closed_form_ == ClosedForm::kAppendixHarmonic && model_->name() != "h3") {
    throw UsageError("the appendix_harmonic rule is defined on h3 only");
  }
  for (auto& [g, value] : table) {
    model_->require(g);
    if (closed_form_index(g)) {
      throw UsageError("table entry " + model_->encode(g) + " overlaps the closed-form support");
    }
    if (sgn(value) != 0) table_.emplace(g, std::move(value));
  }
}

Potential Potential::delta(ModelPtr model, const GroupElement& g, Rational value) {
  Table table;
  table.emplace(g, std::move(value));
  return Potential(std::move(model), std::move(table));
}

Potential Potential::appendix_harmonic() {
  return Potential(heisenberg(), {}, ClosedForm::kAppendixHarmonic);
}

GroupElement Potential::harmonic_point(std::uint64_t k) {
  const Integer minus_k = -Integer(static_cast<unsigned long>(k));
  return GroupElement(HeisenbergTriple{Integer(1), minus_k, minus_k});
}

std::optional<Integer> Potential::closed_form_index(const GroupElement& g) const {
  if (closed_form_ != ClosedForm::kAppendixHarmonic || !g.holds<HeisenbergTriple>()) {
    return std::nullopt;
  }
  const auto& t = g.as<HeisenbergTriple>();
  if (t.a == 1 && t.b == t.c && sgn(t.b) < 0) return Integer(-t.b);
  return std::nullopt;
}

Rational Potential::operator()(const GroupElement& g) const {
  if (auto it = table_.find(g); it != table_.end()) return it->second;
  if (auto k = closed_form_index(g)) return Rational(Integer(1), *k);
  return 0;
}

Rational Potential::truncated(const GroupElement& g, std::uint64_t max_index) const {
  if (auto it = table_.find(g); it != table_.end()) return it->second;
  if (auto k = closed_form_index(g); k && *k <= Integer(static_cast<unsigned long>(max_index))) {
    return Rational(Integer(1), *k);
  }
  return 0;
}

std::vector<std::pair<GroupElement, Rational>> Potential::support(std::uint64_t max_index) const {
  std::vector<std::pair<GroupElement, Rational>> out(table_.begin(), table_.end());
  if (closed_form_ == ClosedForm::kAppendixHarmonic) {
    out.reserve(out.size() + max_index);
    for (std::uint64_t k = 1; k <= max_index; ++k) {
      out.emplace_back(harmonic_point(k), Rational(Integer(1), Integer(static_cast<unsigned long>(k))));
    }
  }
  return out;
}

// sum_{k > K} k^-p <= integral_K^inf x^-p dx = K^(1-p) / (p-1).
double Potential::tail_mass_bound(std::uint64_t max_index, double p) const {
  if (closed_form_ == ClosedForm::kNone) return 0.0;
  if (p <= 1.0 || max_index == 0) return std::numeric_limits<double>::infinity();
  return std::pow(static_cast<double>(max_index), 1.0 - p) / (p - 1.0);
}

}  // namespace conjlab
