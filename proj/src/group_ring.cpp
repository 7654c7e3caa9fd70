#include "conjlab/group_ring.hpp"

#include <algorithm>
#include <cmath>

#include "conjlab/errors.hpp"

namespace conjlab {

GroupRingVector::GroupRingVector(ModelPtr model) : model_(std::move(model)) {
  if (!model_) throw UsageError("group ring vector needs a model");
}

GroupRingVector GroupRingVector::basis(ModelPtr model, const GroupElement& g, Coefficient c) {
  GroupRingVector v(std::move(model));
  v.add(g, c);
  return v;
}

void GroupRingVector::add(const GroupElement& g, const Coefficient& c) {
  if (c.is_zero()) return;
  model_->require(g);
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient GroupRingVector::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Coefficient{} : it->second;
}

std::vector<std::pair<std::string, Coefficient>> GroupRingVector::sorted_terms() const {
  std::vector<std::pair<std::string, Coefficient>> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_) out.emplace_back(model_->encode(g), c);
  std::sort(out.begin(), out.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  return out;
}

void GroupRingVector::require_same_model(const GroupRingVector& other) const {
  if (model_ != other.model_ && model_->name() != other.model_->name()) {
    throw UsageError("group ring vectors over different models: " + model_->name() + " vs " +
                     other.model_->name());
  }
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& other) {
  require_same_model(other);
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

GroupRingVector& GroupRingVector::operator-=(const GroupRingVector& other) {
  require_same_model(other);
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

GroupRingVector GroupRingVector::scaled(const Coefficient& c) const {
  GroupRingVector out(model_);
  if (c.is_zero()) return out;
  for (const auto& [g, a] : terms_) out.terms_.emplace(g, a * c);
  return out;
}

GroupRingVector GroupRingVector::left_multiply(const GroupElement& g) const {
  GroupRingVector out(model_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(model_->multiply(g, h), c);
  return out;
}

GroupRingVector GroupRingVector::right_multiply(const GroupElement& g) const {
  GroupRingVector out(model_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(model_->multiply(h, g), c);
  return out;
}

GroupRingVector operator*(const GroupRingVector& a, const GroupRingVector& b) {
  a.require_same_model(b);
  GroupRingVector out(a.model_);
  for (const auto& [g, x] : a.terms_) {
    for (const auto& [h, y] : b.terms_) out.add(a.model_->multiply(g, h), x * y);
  }
  return out;
}

bool operator==(const GroupRingVector& a, const GroupRingVector& b) {
  if (a.model_->name() != b.model_->name() || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [g, c] : a.terms_) {
    auto it = b.terms_.find(g);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

std::optional<Rational> lp_norm_power(const GroupRingVector& v, unsigned q) {
  Rational total = 0;
  for (const auto& [g, c] : v.terms()) {
    Rational term = 1;
    if (c.is_real()) {
      const Rational magnitude = abs(c.re);
      for (unsigned i = 0; i < q; ++i) term *= magnitude;
    } else if (q % 2 == 0) {
      const Rational squared = c.norm_squared();
      for (unsigned i = 0; i < q / 2; ++i) term *= squared;
    } else {
      return std::nullopt;
    }
    total += term;
  }
  return total;
}

double lp_norm(const GroupRingVector& v, double p) {
  if (!(p >= 1.0)) throw UsageError("lp_norm needs p >= 1");
  if (v.is_zero()) return 0.0;
  const double rounded = std::round(p);
  if (rounded == p && p <= 64.0) {
    if (auto exact = lp_norm_power(v, static_cast<unsigned>(rounded))) {
      return std::pow(exact->get_d(), 1.0 / p);
    }
  }
  double total = 0.0;
  for (const auto& [g, c] : v.terms()) total += std::pow(c.norm_squared().get_d(), p / 2.0);
  return std::pow(total, 1.0 / p);
}

double sup_norm(const GroupRingVector& v) {
  double best = 0.0;
  for (const auto& [g, c] : v.terms()) best = std::max(best, c.modulus());
  return best;
}

}  // namespace conjlab
