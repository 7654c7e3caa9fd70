#include "conjlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <tuple>

#include "conjlab/errors.hpp"

namespace conjlab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json json_double(double x) {
  if (!std::isfinite(x)) return format_double(x);
  return std::strtod(format_double(x).c_str(), nullptr);
}

Json to_json(const Bound& b) {
  if (b.exact) return b.value;
  return b.to_string();
}

Json to_json(const GroupRingVector& v) {
  Json out = Json::array();
  for (const auto& [enc, c] : v.sorted_terms()) {
    out.push_back({enc, format_rational(c.re), format_rational(c.im)});
  }
  return out;
}

namespace {

using EdgeKey = std::tuple<std::string, std::string, std::string>;

std::vector<EdgeKey> sorted_edges(const GroupModel& model, const ConjGraphBall& ball) {
  std::vector<EdgeKey> edges;
  edges.reserve(ball.edges.size());
  for (const auto& e : ball.edges) {
    edges.emplace_back(model.encode(e.src), e.label.display(), model.encode(e.dst));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::pair<std::string, std::uint64_t>> sorted_vertices(const GroupModel& model,
                                                                   const ConjGraphBall& ball) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  out.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) out.emplace_back(model.encode(v), ball.dist.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(format_rational(*r)) : Json(nullptr);
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

}  // namespace

Json to_json(const GroupModel& model, const ConjGraphBall& ball) {
  Json vertices = Json::array();
  for (const auto& [enc, d] : sorted_vertices(model, ball)) vertices.push_back({enc, d});
  Json edges = Json::array();
  for (const auto& [src, label, dst] : sorted_edges(model, ball)) edges.push_back({src, label, dst});
  return {{"model", model.name()},
          {"base", model.encode(ball.base)},
          {"radius", ball.radius},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"component_exhausted", ball.component_exhausted},
          {"budget_exhausted", ball.budget_exhausted}};
}

Json to_json(const BCReport& report) {
  Json shells = Json::array();
  for (const auto& s : report.shells) shells.push_back({s.cayley_radius, to_json(s.max_diam)});
  return {{"K", report.base_set}, {"shells", std::move(shells)},
          {"verdict", report.verdict.to_string()}};
}

Json to_json(const AppendixReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json coefficients = Json::array();
    for (const auto& c : row.coefficients) {
      coefficients.push_back({c.n, format_rational(c.engine)});
    }
    rows.push_back({{"m", row.m},
                    {"coefficients", std::move(coefficients)},
                    {"short_form_valid_up_to_n", row.m + 1},
                    {"harmonic_tail", format_rational(row.harmonic_tail)},
                    {"norm_lower_bound", json_double(row.norm_lower_bound)},
                    {"ratio_lower_bound", json_double(row.ratio_lower_bound)},
                    {"coefficient_norm", json_double(row.coefficient_norm)}});
  }
  return {{"m_max", report.m_max}, {"n_max", report.n_max}, {"cutoff", report.cutoff},
          {"rows", std::move(rows)}};
}

Json to_json(const LimitReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"k", s.k},
                       {"norm", json_double(s.norm)},
                       {"norm_power", optional_rational(s.norm_power)},
                       {"disjoint", s.disjoint}});
  }
  return {{"q", json_double(report.q)},
          {"potential_norm", json_double(report.potential_norm)},
          {"potential_norm_power", optional_rational(report.potential_norm_power)},
          {"limit_value", json_double(report.limit_value)},
          {"limit_power", optional_rational(report.limit_power)},
          {"samples", std::move(samples)},
          {"separation_index",
           report.separation_index ? Json(*report.separation_index) : Json(nullptr)}};
}

Json to_json(const GroupModel& model, const BoundednessProbe& probe) {
  return {{"max_norm", json_double(probe.max_norm)},
          {"argmax", model.encode(probe.argmax)},
          {"exact", probe.exact},
          {"tail_bound", json_double(probe.tail_bound)},
          {"ball_size", probe.ball_size},
          {"distinct_actions", probe.distinct_actions}};
}

Json to_json(const std::vector<InverseSequenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"k", r.k}, {"forward", to_json(r.forward)}, {"backward", to_json(r.backward)}});
  }
  return out;
}

PotentialSpec potential_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw UsageError("potential file must hold a JSON object");
    const ModelPtr model = make_model(j.at("model").get<std::string>());
    Potential::Table table;
    for (const auto& entry : j.value("table", Json::array())) {
      if (!entry.is_array() || entry.size() != 2) {
        throw UsageError("potential table entries are [element, \"p/q\"] pairs");
      }
      GroupElement g = model->decode(entry[0].get<std::string>());
      Rational value = parse_rational(entry[1].get<std::string>());
      if (!table.emplace(g, std::move(value)).second) {
        throw UsageError("duplicate potential entry " + entry[0].get<std::string>());
      }
    }
    ClosedForm rule = ClosedForm::kNone;
    if (auto it = j.find("closed_form"); it != j.end() && !it->is_null()) {
      if (it->get<std::string>() != "appendix_harmonic") {
        throw UsageError("unknown closed form '" + it->get<std::string>() + "'");
      }
      rule = ClosedForm::kAppendixHarmonic;
    }
    TruncationPolicy policy;
    if (auto it = j.find("truncation"); it != j.end() && !it->is_null()) {
      const auto k = it->get<std::int64_t>();
      if (k <= 0) throw UsageError("truncation must be positive");
      policy.max_index = static_cast<std::uint64_t>(k);
    }
    return {Potential(model, std::move(table), rule), policy};
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed potential file: ") + e.what());
  }
}

Json to_json(const PotentialSpec& spec) {
  const Potential& phi = spec.potential;
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& [g, value] : phi.table()) {
    entries.emplace_back(phi.model().encode(g), format_rational(value));
  }
  std::sort(entries.begin(), entries.end());
  Json table = Json::array();
  for (const auto& [enc, value] : entries) table.push_back({enc, value});
  return {{"model", phi.model().name()},
          {"table", std::move(table)},
          {"closed_form",
           phi.closed_form() == ClosedForm::kAppendixHarmonic ? Json("appendix_harmonic")
                                                              : Json(nullptr)},
          {"truncation", spec.truncation.max_index}};
}

void TextTable::add_row(std::vector<std::string> row) {
  row.resize(header_.size());
  rows_.push_back(std::move(row));
}

std::string TextTable::render() const {
  std::vector<std::size_t> width(header_.size());
  for (std::size_t c = 0; c < header_.size(); ++c) width[c] = display_width(header_[c]);
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - display_width(row[c]) + 2, ' ');
    }
    out += line + "\n";
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  return out;
}

std::string to_table(const GroupModel& model, const ConjGraphBall& ball) {
  TextTable vertices({"vertex", "dist"});
  for (const auto& [enc, d] : sorted_vertices(model, ball)) vertices.add_row({enc, std::to_string(d)});
  TextTable edges({"source", "label", "target"});
  for (const auto& [src, label, dst] : sorted_edges(model, ball)) edges.add_row({src, label, dst});
  std::string out = vertices.render() + "\n" + edges.render();
  if (ball.component_exhausted) out += "\ncomponent fully explored\n";
  if (ball.budget_exhausted) out += "\nnode budget exhausted before radius " +
                                    std::to_string(ball.radius) + "\n";
  return out;
}

std::string to_table(const BCReport& report) {
  TextTable table({"r", "max_diam"});
  for (const auto& s : report.shells) {
    table.add_row({std::to_string(s.cayley_radius), s.max_diam.to_string()});
  }
  std::string k;
  for (const auto& e : report.base_set) k += (k.empty() ? "" : ", ") + e;
  return "K = {" + k + "}\n" + table.render() + "verdict: " + report.verdict.to_string() +
         "\nrules: " + kBCVerdictRules + "\n";
}

std::string to_table(const AppendixReport& report) {
  TextTable table({"m", "sum_{j=2}^m 1/j", "norm_lower_bound", "ratio_lower_bound",
                   "coefficient_norm"});
  for (const auto& row : report.rows) {
    table.add_row({std::to_string(row.m), format_rational(row.harmonic_tail),
                   format_double(row.norm_lower_bound), format_double(row.ratio_lower_bound),
                   format_double(row.coefficient_norm)});
  }
  return table.render() + "coefficients n = 0.." + std::to_string(report.n_max) +
         " agree with the closed form (cutoff K = " + std::to_string(report.cutoff) + ")\n";
}

std::string to_table(const LimitReport& report) {
  TextTable table({"k", "norm", "norm^q", "disjoint"});
  for (const auto& s : report.samples) {
    table.add_row({std::to_string(s.k), format_double(s.norm),
                   s.norm_power ? format_rational(*s.norm_power) : "-", s.disjoint ? "yes" : "no"});
  }
  std::string out = "q = " + format_double(report.q) +
                    ", ||phi||_q = " + format_double(report.potential_norm) +
                    ", limit 2^(1/q)||phi||_q = " + format_double(report.limit_value) + "\n";
  out += table.render();
  out += "separation index: " +
         (report.separation_index ? std::to_string(*report.separation_index) : std::string("none")) +
         "\n";
  return out;
}

std::string to_table(const GroupModel& model, const BoundednessProbe& probe) {
  TextTable table({"field", "value"});
  table.add_row({"max_norm", format_double(probe.max_norm)});
  table.add_row({"argmax", model.encode(probe.argmax)});
  table.add_row({"exact", probe.exact ? "true" : "false"});
  table.add_row({"tail_bound", format_double(probe.tail_bound)});
  table.add_row({"ball_size", std::to_string(probe.ball_size)});
  table.add_row({"distinct_actions", std::to_string(probe.distinct_actions)});
  return table.render();
}

std::string to_table(const std::vector<InverseSequenceRow>& rows) {
  TextTable table({"k", "rho(u, a_k u a_k^-1)", "rho(u, a_k^-1 u a_k)"});
  for (const auto& r : rows) {
    table.add_row({std::to_string(r.k), r.forward.to_string(), r.backward.to_string()});
  }
  return table.render();
}

}  // namespace conjlab
