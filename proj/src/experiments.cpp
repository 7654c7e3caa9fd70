#include "conjlab/experiments.hpp"

#include <cmath>
#include <unordered_set>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

GroupElement evaluate_word(const GroupModel& model, const Word& word) {
  GroupElement out = model.identity();
  for (const auto& letter : word) out = model.multiply(out, model.generator(letter));
  return out;
}

GroupElement power(const GroupModel& model, const GroupElement& g, std::uint64_t k) {
  GroupElement out = model.identity();
  for (std::uint64_t i = 0; i < k; ++i) out = model.multiply(out, g);
  return out;
}

std::optional<unsigned> integral_exponent(double q) {
  const double rounded = std::round(q);
  if (rounded != q || q < 1.0 || q > 64.0) return std::nullopt;
  return static_cast<unsigned>(rounded);
}

}  // namespace

Rational harmonic_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t skip) {
  Rational total = 0;
  for (std::uint64_t j = std::max<std::uint64_t>(lo, 1); j <= hi; ++j) {
    if (j != skip) total += Rational(Integer(1), to_integer(j));
  }
  return total;
}

AppendixReport run_appendix(std::uint64_t m_max, std::uint64_t n_max) {
  if (m_max == 0) throw UsageError("appendix needs m_max >= 1");
  AppendixReport report{m_max, n_max, m_max + n_max, {}};
  // Every coefficient at H3(1,-n,-n) in d(A_x^j) reads phi at index n + j at most.
  const Derivation d =
      Derivation::from_potential(Potential::appendix_harmonic(), {report.cutoff});
  const ModelPtr& model = d.model_ptr();
  const GroupElement ax = model->generator(Generator{"Ax", false});
  const GroupElement ax_inv = model->invert(ax);

  for (std::uint64_t m = 1; m <= m_max; ++m) {
    GroupRingVector a_m = GroupRingVector::basis(model, model->identity());
    GroupElement up = model->identity();
    GroupElement down = model->identity();
    for (std::uint64_t k = 1; k <= m; ++k) {
      up = model->multiply(up, ax);
      down = model->multiply(down, ax_inv);
      a_m.add(up, Coefficient(1));
      a_m.add(down, Coefficient(1));
    }
    const Evaluation image = derivation_apply_linear(d, a_m);

    AppendixRow row;
    row.m = m;
    Rational squares = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      AppendixCoefficient c;
      c.n = n;
      const Coefficient engine = image.value.coefficient(Potential::harmonic_point(n));
      if (!engine.is_real()) throw ConsistencyError("imaginary appendix coefficient");
      c.engine = engine.re;
      const std::uint64_t lo = n > m ? n - m : 1;
      c.closed_form = harmonic_sum(lo, m + n, n);
      c.short_form = harmonic_sum(1, m + n, n);
      c.short_form_applies = n <= m + 1;
      if (c.engine != c.closed_form) {
        throw ConsistencyError("appendix coefficient mismatch at m=" + std::to_string(m) +
                               ", n=" + std::to_string(n) + ": engine " +
                               format_rational(c.engine) + ", closed form " +
                               format_rational(c.closed_form));
      }
      if (c.short_form_applies && c.short_form != c.closed_form) {
        throw ConsistencyError("short form disagrees at m=" + std::to_string(m) +
                               ", n=" + std::to_string(n));
      }
      if (n <= m) squares += c.engine * c.engine;
      row.coefficients.push_back(std::move(c));
    }
    row.harmonic_tail = harmonic_sum(2, m);
    row.norm_lower_bound = std::sqrt(static_cast<double>(m)) * row.harmonic_tail.get_d();
    row.ratio_lower_bound = row.norm_lower_bound / std::sqrt(static_cast<double>(2 * m + 1));
    row.coefficient_norm = std::sqrt(squares.get_d());
    report.rows.push_back(std::move(row));
  }
  return report;
}

LimitReport run_limit_experiment(const Potential& phi, const Word& conjugator, double q,
                                 std::uint64_t k_max, std::uint64_t node_budget) {
  if (!phi.finite_support()) throw UsageError("the limit experiment needs a finite-support potential");
  if (!(q >= 1.0)) throw UsageError("the limit experiment needs q >= 1");
  const GroupModel& model = phi.model();

  constexpr std::uint64_t kComponentProbeRadius = 64;
  constexpr std::uint64_t kComponentProbeNodes = 4096;
  for (const auto& [s, value] : phi.table()) {
    const ConjGraphBall ball = explore_component(model, s, kComponentProbeRadius,
                                                 std::min(node_budget, kComponentProbeNodes));
    if (ball.component_exhausted) {
      throw UsageError("support point " + model.encode(s) + " lies on a finite conjugacy component");
    }
  }

  LimitReport report;
  report.q = q;
  const auto exponent = integral_exponent(q);
  GroupRingVector phi_vector(phi.model_ptr());
  for (const auto& [s, value] : phi.table()) phi_vector.add(s, Coefficient(value));
  report.potential_norm = lp_norm(phi_vector, q);
  report.limit_value = std::pow(2.0, 1.0 / q) * report.potential_norm;
  if (exponent) {
    report.potential_norm_power = lp_norm_power(phi_vector, *exponent);
    if (report.potential_norm_power) report.limit_power = 2 * *report.potential_norm_power;
  }

  const GroupElement a = evaluate_word(model, conjugator);
  const GroupElement a_inv = model.invert(a);
  const Derivation d = Derivation::from_potential(phi);
  std::unordered_set<GroupElement, ElementHash> support;
  for (const auto& [s, value] : phi.table()) support.insert(s);

  GroupElement a_k = model.identity();
  GroupElement a_k_inv = model.identity();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    a_k = model.multiply(a_k, a);
    a_k_inv = model.multiply(a_inv, a_k_inv);
    const Evaluation image = derivation_apply(d, a_k);
    LimitSample sample;
    sample.k = k;
    sample.norm = lp_norm(image.value, q);
    if (exponent) sample.norm_power = lp_norm_power(image.value, *exponent);
    sample.disjoint = true;
    for (const auto& s : support) {
      if (support.contains(model.conjugate(a_k_inv, s))) {
        sample.disjoint = false;
        break;
      }
    }
    if (sample.disjoint && !report.separation_index) report.separation_index = k;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

std::vector<InverseSequenceRow> run_inverse_sequence_check(
    const GroupModel& model, const GroupElement& u, const Word& conjugator, std::uint64_t k_max,
    std::uint64_t budget, const Word& suffix, std::uint64_t node_budget) {
  model.require(u);
  const GroupElement a = evaluate_word(model, conjugator);
  const GroupElement tail = evaluate_word(model, suffix);
  std::vector<InverseSequenceRow> rows;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const GroupElement a_k = model.multiply(power(model, a, k), tail);
    const GroupElement a_k_inv = model.invert(a_k);
    InverseSequenceRow row;
    row.k = k;
    row.forward = conj_distance(model, u, model.conjugate(a_k, u), budget, node_budget);
    row.backward = conj_distance(model, u, model.conjugate(a_k_inv, u), budget, node_budget);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace conjlab
