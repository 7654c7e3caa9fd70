#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "conjlab/conjugacy.hpp"
#include "conjlab/derivation.hpp"
#include "conjlab/experiments.hpp"
#include "conjlab/probes.hpp"

namespace conjlab {

using Json = nlohmann::json;

/// printf("%.12g"); non-finite values become "inf", "-inf" or "nan".
std::string format_double(double x);
/// Number rounded to 12 significant digits, or the string form when non-finite.
Json json_double(double x);
/// Exact values as integers, lower bounds as "≥B".
Json to_json(const Bound& b);
/// Sorted list of [element, "re", "im"].
Json to_json(const GroupRingVector& v);

Json to_json(const GroupModel& model, const ConjGraphBall& ball);
Json to_json(const BCReport& report);
Json to_json(const AppendixReport& report);
Json to_json(const LimitReport& report);
Json to_json(const GroupModel& model, const BoundednessProbe& probe);
Json to_json(const std::vector<InverseSequenceRow>& rows);

struct PotentialSpec {
  Potential potential;
  TruncationPolicy truncation;
};

/// {"model", "table": [[element, "p/q"], ...], "closed_form": "appendix_harmonic" | null,
/// "truncation": K}. Throws UsageError on malformed input.
PotentialSpec potential_from_json(const Json& j);
Json to_json(const PotentialSpec& spec);

/// Left-aligned plain-text columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row);
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string to_table(const GroupModel& model, const ConjGraphBall& ball);
std::string to_table(const BCReport& report);
std::string to_table(const AppendixReport& report);
std::string to_table(const LimitReport& report);
std::string to_table(const GroupModel& model, const BoundednessProbe& probe);
std::string to_table(const std::vector<InverseSequenceRow>& rows);

}  // namespace conjlab
