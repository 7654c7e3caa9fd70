#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace conjlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// A distance or length that is either known exactly or only bounded below
/// (the search budget ran out first, or the target is unreachable).
struct Bound {
  std::uint64_t value = 0;
  bool exact = true;

  static Bound Exact(std::uint64_t v) { return {v, true}; }
  static Bound AtLeast(std::uint64_t v) { return {v, false}; }

  /// "7" or "≥7".
  std::string to_string() const {
    return exact ? std::to_string(value) : "≥" + std::to_string(value);
  }

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Upper envelope of two bounds. Any inexact operand makes the result inexact.
inline Bound max_bound(const Bound& lhs, const Bound& rhs) {
  return {std::max(lhs.value, rhs.value), lhs.exact && rhs.exact};
}

}  // namespace conjlab
