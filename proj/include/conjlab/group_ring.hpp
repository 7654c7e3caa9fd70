#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conjlab/coefficient.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

/// Finitely supported formal sum of group elements with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class GroupRingVector {
 public:
  using Terms = std::unordered_map<GroupElement, Coefficient, ElementHash>;

  explicit GroupRingVector(ModelPtr model);
  static GroupRingVector basis(ModelPtr model, const GroupElement& g, Coefficient c = 1L);

  const GroupModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of g.
  void add(const GroupElement& g, const Coefficient& c);
  /// delta_g of the vector.
  Coefficient coefficient(const GroupElement& g) const;
  /// Terms ordered by canonical encoding.
  std::vector<std::pair<std::string, Coefficient>> sorted_terms() const;

  GroupRingVector& operator+=(const GroupRingVector& other);
  GroupRingVector& operator-=(const GroupRingVector& other);
  GroupRingVector scaled(const Coefficient& c) const;
  /// g * v.
  GroupRingVector left_multiply(const GroupElement& g) const;
  /// v * g.
  GroupRingVector right_multiply(const GroupElement& g) const;

  friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
  friend GroupRingVector operator-(GroupRingVector a, const GroupRingVector& b) { return a -= b; }
  /// Convolution product.
  friend GroupRingVector operator*(const GroupRingVector& a, const GroupRingVector& b);
  friend bool operator==(const GroupRingVector& a, const GroupRingVector& b);

 private:
  void require_same_model(const GroupRingVector& other) const;

  ModelPtr model_;
  Terms terms_;
};

/// (sum |alpha(g)|^p)^(1/p). Throws UsageError for p < 1.
double lp_norm(const GroupRingVector& v, double p);
/// max |alpha(g)|.
double sup_norm(const GroupRingVector& v);
/// sum |alpha(g)|^q as an exact rational; empty when that is irrational
/// (odd q with a non-real coefficient).
std::optional<Rational> lp_norm_power(const GroupRingVector& v, unsigned q);

}  // namespace conjlab
