#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conjlab/bound.hpp"
#include "conjlab/derivation.hpp"

namespace conjlab {

// --- unbounded inner derivation on H3 ---

struct AppendixCoefficient {
  std::uint64_t n = 0;
  /// Coefficient of A_x^-n A_p A_1^-n in d(a_m), read off the derivation engine.
  Rational engine;
  /// sum_{i = max(1, n-m), i != n}^{m+n} 1/i, valid for every n.
  Rational closed_form;
  /// sum_{j = 1, j != n}^{m+n} 1/j, which equals closed_form iff n <= m + 1.
  Rational short_form;
  bool short_form_applies = false;
};

struct AppendixRow {
  std::uint64_t m = 0;
  std::vector<AppendixCoefficient> coefficients;  // n = 0..n_max
  /// sum_{j=2}^m 1/j.
  Rational harmonic_tail;
  /// sqrt(m) * harmonic_tail.
  double norm_lower_bound = 0.0;
  /// norm_lower_bound / ||a_m||_2 with ||a_m||_2 = sqrt(2m + 1).
  double ratio_lower_bound = 0.0;
  /// (sum_{n=0}^{min(m, n_max)} coeff^2)^(1/2), itself a lower bound on ||d(a_m)||_2.
  double coefficient_norm = 0.0;
};

struct AppendixReport {
  std::uint64_t m_max = 0;
  std::uint64_t n_max = 0;
  std::uint64_t cutoff = 0;
  std::vector<AppendixRow> rows;  // m = 1..m_max
};

/// a_m = sum_{k=-m}^{m} A_x^k under the harmonic potential. Engine and closed
/// form are compared exactly; a mismatch throws ConsistencyError.
AppendixReport run_appendix(std::uint64_t m_max, std::uint64_t n_max);

/// sum_{j=lo}^{hi} 1/j, skipping `skip` (0 skips nothing).
Rational harmonic_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t skip = 0);

// --- norm limit along a conjugating sequence ---

struct LimitSample {
  std::uint64_t k = 0;
  double norm = 0.0;
  /// ||d(a_k)||_q^q when q is an integer.
  std::optional<Rational> norm_power;
  /// supp(phi) ∩ a_k^-1 supp(phi) a_k is empty.
  bool disjoint = false;
};

struct LimitReport {
  double q = 2.0;
  double potential_norm = 0.0;
  std::optional<Rational> potential_norm_power;
  /// 2^(1/q) ||phi||_q.
  double limit_value = 0.0;
  /// 2 ||phi||_q^q when q is an integer.
  std::optional<Rational> limit_power;
  std::vector<LimitSample> samples;  // k = 1..k_max
  /// First k whose conjugated support is disjoint from the support.
  std::optional<std::uint64_t> separation_index;
};

/// a_k = conjugator^k. Requires a finite-support potential none of whose
/// support points lies on a finite conjugacy component (UsageError otherwise).
LimitReport run_limit_experiment(const Potential& phi, const Word& conjugator, double q,
                                 std::uint64_t k_max,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// --- forward vs backward conjugation distances ---

struct InverseSequenceRow {
  std::uint64_t k = 0;
  Bound forward;   // rho(u, a_k u a_k^-1)
  Bound backward;  // rho(u, a_k^-1 u a_k)
};

/// a_k = conjugator^k suffix for k = 1..k_max; distances searched up to budget.
std::vector<InverseSequenceRow> run_inverse_sequence_check(
    const GroupModel& model, const GroupElement& u, const Word& conjugator, std::uint64_t k_max,
    std::uint64_t budget, const Word& suffix = {},
    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace conjlab
