#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conjlab {

/// Malformed input or a violated precondition (bad encoding, model mismatch,
/// non-composable morphisms, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A node budget ran out before the requested object was complete.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  /// Number of items produced before the budget was hit.
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

/// Two independent evaluations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace conjlab
