#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/derivation.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/experiments.hpp"
#include "conjlab/probes.hpp"
#include "conjlab/report.hpp"

namespace conjlab {
namespace {

struct Globals {
  std::string model = "h3";
  bool model_given = false;
  std::uint64_t seed = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t diam_budget = 16;
  std::optional<std::uint64_t> trunc_k;
  std::string format;
  std::string output;
};

std::uint64_t env_node_budget() {
  const char* raw = std::getenv("CONJLAB_DEFAULT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || raw[0] == '-') {
    throw UsageError(std::string("CONJLAB_DEFAULT_BUDGET must be a positive integer, got '") +
                     raw + "'");
  }
  return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

GroupElement random_element(const GroupModel& model, std::mt19937_64& rng,
                            std::uint64_t max_length) {
  const auto& alphabet = model.alphabet();
  const std::uint64_t length = rng() % (max_length + 1);
  GroupElement g = model.identity();
  for (std::uint64_t i = 0; i < length; ++i) {
    g = model.multiply(g, alphabet[rng() % alphabet.size()].element);
  }
  return g;
}

class Session {
 public:
  explicit Session(const Globals& globals) : g_(globals) {}

  ModelPtr model() const { return make_model(g_.model); }

  PotentialSpec load_potential(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read potential file '" + path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("potential file '" + path + "' is not valid JSON: " + e.what());
    }
    PotentialSpec spec = potential_from_json(j);
    if (g_.model_given && make_model(g_.model)->name() != spec.potential.model().name()) {
      throw UsageError("--model " + g_.model + " conflicts with potential model " +
                       spec.potential.model().name());
    }
    if (g_.trunc_k) spec.truncation.max_index = *g_.trunc_k;
    return spec;
  }

  Derivation derivation(const PotentialSpec& spec) const {
    return Derivation::from_potential(spec.potential, spec.truncation);
  }

  std::string format(const std::string& fallback) const {
    return g_.format.empty() ? fallback : g_.format;
  }

  void require_format(const std::string& format, std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed) {
      if (format == f) return;
    }
    throw UsageError("format '" + format + "' is not available for this command");
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
};

// Each command returns its exit code and writes its report to `out`.
using Command = std::function<int(const Session&, std::ostream& out, std::ostream& err)>;

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Conjugacy graphs, potentials and derivations on concrete groups", "conjlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  try {
    g.node_budget = env_node_budget();
  } catch (const UsageError& e) {
    err << "conjlab: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* model_opt = app.add_option("--model", g.model, "Group model, e.g. h3, free2, dinf, "
                                                       "dsemi, h3semi, prod(h3,dinf)");
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--budget-nodes", g.node_budget, "Node budget for breadth-first searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-diam", g.diam_budget, "Radius budget for conjugation distances")
      ->check(CLI::PositiveNumber);
  app.add_option("--trunc-k", g.trunc_k, "Cutoff for closed-form potentials")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "dot, json or table")
      ->check(CLI::IsMember({"dot", "json", "table"}));
  app.add_option("--output", g.output, "Write the report here instead of stdout");

  std::map<CLI::App*, Command> commands;

  // graph
  {
    auto* sub = app.add_subcommand("graph", "Explore the conjugacy graph around an element");
    auto base = std::make_shared<std::string>();
    auto radius = std::make_shared<std::uint64_t>(3);
    auto no_loops = std::make_shared<bool>(false);
    sub->add_option("--base", *base, "Canonical encoding of the base vertex")->required();
    sub->add_option("--radius", *radius, "Search radius");
    sub->add_flag("--suppress-loops", *no_loops, "Omit loop edges");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream& e) {
      const ModelPtr m = s.model();
      ConjGraphBall ball =
          explore_component(*m, m->decode(*base), *radius, s.globals().node_budget);
      const std::string fmt = s.format("dot");
      if (fmt == "dot") {
        o << export_dot(*m, ball, *no_loops);
      } else {
        if (*no_loops) {
          std::erase_if(ball.edges, [](const ConjEdge& edge) { return edge.src == edge.dst; });
        }
        o << (fmt == "json" ? dump(to_json(*m, ball)) : to_table(*m, ball));
      }
      if (ball.budget_exhausted) {
        e << "conjlab: node budget exhausted before radius " << *radius << "\n";
        return static_cast<int>(kExitBudget);
      }
      return static_cast<int>(kExitOk);
    };
  }

  // bc
  {
    auto* sub = app.add_subcommand("bc", "Bounded-conjugation probe for a finite set K");
    auto elements = std::make_shared<std::vector<std::string>>();
    auto radius = std::make_shared<std::uint64_t>(6);
    sub->add_option("elements", *elements, "Canonical encodings of the elements of K")
        ->required();
    sub->add_option("--cayley-radius", *radius, "Largest conjugator length");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const ModelPtr m = s.model();
      std::vector<GroupElement> k;
      for (const auto& text : *elements) k.push_back(m->decode(text));
      const BCReport report =
          bc_probe(*m, k, *radius, s.globals().diam_budget, s.globals().node_budget);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      o << (fmt == "json" ? dump(to_json(report)) : to_table(report));
      return static_cast<int>(kExitOk);
    };
  }

  // derive
  {
    auto* sub = app.add_subcommand("derive", "Evaluate d(g) for a potential-defined derivation");
    auto file = std::make_shared<std::string>();
    auto element = std::make_shared<std::string>();
    auto p = std::make_shared<double>(2.0);
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--element", *element, "Canonical encoding of g")->required();
    sub->add_option("-p", *p, "Norm exponent (p >= 1)");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const PotentialSpec spec = s.load_potential(*file);
      const Derivation d = s.derivation(spec);
      const GroupModel& m = d.model();
      const Evaluation image = derivation_apply(d, m.decode(*element));
      const double norm = lp_norm(image.value, *p);
      const double tail = d.tail_bound(*p);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      if (fmt == "json") {
        o << dump({{"element", *element},
                   {"value", to_json(image.value)},
                   {"p", json_double(*p)},
                   {"norm", json_double(norm)},
                   {"exact", image.exact},
                   {"cutoff", image.cutoff},
                   {"tail_bound", json_double(tail)}});
      } else {
        TextTable table({"element", "re", "im"});
        for (const auto& [enc, c] : image.value.sorted_terms()) {
          table.add_row({enc, format_rational(c.re), format_rational(c.im)});
        }
        o << table.render() << "norm_p = " << format_double(norm) << " (p = " << format_double(*p)
          << ")\n";
        if (!image.exact) {
          o << "truncated at K = " << image.cutoff << ", tail bound " << format_double(tail)
            << "\n";
        }
      }
      return static_cast<int>(kExitOk);
    };
  }

  // leibniz
  {
    auto* sub = app.add_subcommand("leibniz", "Check d(gh) = d(g)h + g d(h) on random pairs");
    auto file = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(500);
    auto length = std::make_shared<std::uint64_t>(4);
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--samples", *samples, "Number of random pairs");
    sub->add_option("--word-length", *length, "Largest random word length");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream& e) {
      const PotentialSpec spec = s.load_potential(*file);
      const Derivation d = s.derivation(spec);
      const GroupModel& m = d.model();
      std::mt19937_64 rng(s.globals().seed);
      std::uint64_t violations = 0;
      double worst = 0.0;
      bool exact = true;
      std::optional<std::pair<std::string, std::string>> witness;
      for (std::uint64_t i = 0; i < *samples; ++i) {
        const GroupElement x = random_element(m, rng, *length);
        const GroupElement y = random_element(m, rng, *length);
        const LeibnizResidual r = leibniz_check(d, x, y);
        exact = exact && r.exact;
        worst = std::max(worst, r.l1);
        if (!r.vanishes) {
          ++violations;
          if (!witness) witness.emplace(m.encode(x), m.encode(y));
        }
      }
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      if (fmt == "json") {
        o << dump({{"samples", *samples},
                   {"violations", violations},
                   {"max_residual_l1", json_double(worst)},
                   {"exact", exact},
                   {"tail_bound", json_double(3.0 * d.tail_bound(1.0))},
                   {"witness", witness ? Json{witness->first, witness->second} : Json(nullptr)}});
      } else {
        o << violations << " violations in " << *samples << " samples\n";
      }
      if (violations != 0) {
        e << "conjlab: Leibniz rule violated at (" << witness->first << ", " << witness->second
          << ")\n";
        return static_cast<int>(kExitConsistency);
      }
      return static_cast<int>(kExitOk);
    };
  }

  // character
  {
    auto* sub = app.add_subcommand("character", "Evaluate chi(u, v) = phi(uv^-1) - phi(v^-1 u)");
    auto file = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto gg = std::make_shared<std::string>();
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--u", *h, "First component u of the morphism (u, v)")->required();
    sub->add_option("--v", *gg, "Second component v of the morphism (u, v)")->required();
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream& e) {
      const PotentialSpec spec = s.load_potential(*file);
      const Derivation d = s.derivation(spec);
      const GroupModel& m = d.model();
      const Morphism mor{m.decode(*h), m.decode(*gg)};
      const Coefficient direct = character_from_potential(spec.potential, mor);
      const CharacterValue engine = character_from_derivation(d, mor);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      if (fmt == "json") {
        o << dump({{"u", *h},
                   {"v", *gg},
                   {"source", m.encode(mor.source(m))},
                   {"target", m.encode(mor.target(m))},
                   {"loop", mor.is_loop(m)},
                   {"value", format_rational(direct.re)},
                   {"engine_value", format_rational(engine.value.re)},
                   {"engine_exact", engine.exact}});
      } else {
        o << "chi(" << *h << ", " << *gg << ") = " << format_rational(direct.re) << "\n"
          << "morphism " << m.encode(mor.source(m)) << " -> " << m.encode(mor.target(m)) << "\n"
          << "engine value " << format_rational(engine.value.re)
          << (engine.exact ? "" : " (truncated)") << "\n";
      }
      if (engine.exact && !(engine.value == direct)) {
        e << "conjlab: engine and potential disagree on chi(" << *h << ", " << *gg << ")\n";
        return static_cast<int>(kExitConsistency);
      }
      return static_cast<int>(kExitOk);
    };
  }

  // quasi-inner
  {
    auto* sub = app.add_subcommand("quasi-inner", "Check that chi vanishes on random loops");
    auto file = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(500);
    auto length = std::make_shared<std::uint64_t>(4);
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--samples", *samples, "Number of random loops");
    sub->add_option("--word-length", *length, "Largest random word length");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream& e) {
      const PotentialSpec spec = s.load_potential(*file);
      const Derivation d = s.derivation(spec);
      const GroupModel& m = d.model();
      std::mt19937_64 rng(s.globals().seed);
      std::vector<Morphism> loops;
      for (std::uint64_t i = 0; i < *samples; ++i) {
        const GroupElement x = random_element(m, rng, *length);
        GroupElement y = random_element(m, rng, *length);
        if (m.multiply(x, y) != m.multiply(y, x)) {
          // Fall back to a power of x, which always commutes with x.
          const auto exponent = static_cast<int>(rng() % 7) - 3;
          y = m.identity();
          const GroupElement step = exponent < 0 ? m.invert(x) : x;
          for (int j = 0; j < std::abs(exponent); ++j) y = m.multiply(y, step);
        }
        loops.push_back({y, x});
      }
      const QuasiInnerResult from_potential = quasi_inner_check(spec.potential, loops);
      const QuasiInnerResult from_engine = quasi_inner_check(d, loops);
      const bool holds = from_potential.holds && from_engine.holds;
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      const QuasiInnerResult& failing = from_potential.holds ? from_engine : from_potential;
      Json witness = nullptr;
      if (!holds) {
        witness = {m.encode(failing.witness->h), m.encode(failing.witness->g),
                   format_rational(failing.witness_value.re)};
      }
      if (fmt == "json") {
        o << dump({{"loops", loops.size()}, {"holds", holds}, {"witness", witness}});
      } else {
        o << (holds ? "chi vanishes on all " : "chi fails on one of ") << loops.size()
          << " sampled loops\n";
      }
      if (!holds) {
        e << "conjlab: character does not vanish on a loop\n";
        return static_cast<int>(kExitConsistency);
      }
      return static_cast<int>(kExitOk);
    };
  }

  // stabilise
  {
    auto* sub = app.add_subcommand("stabilise", "sup |phi| outside growing conjugacy balls");
    auto file = std::make_shared<std::string>();
    auto base = std::make_shared<std::string>();
    auto radius = std::make_shared<std::uint64_t>(6);
    auto radii = std::make_shared<std::vector<std::uint64_t>>();
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--base", *base, "Base vertex of the component")->required();
    sub->add_option("--radius", *radius, "Exploration radius");
    sub->add_option("--radii", *radii, "Radii r to report (default 0..radius)");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream& e) {
      const PotentialSpec spec = s.load_potential(*file);
      const GroupModel& m = spec.potential.model();
      const ConjGraphBall ball =
          explore_component(m, m.decode(*base), *radius, s.globals().node_budget);
      std::vector<std::uint64_t> rs = *radii;
      if (rs.empty()) {
        for (std::uint64_t r = 0; r <= *radius; ++r) rs.push_back(r);
      }
      const auto rows = stabilisation_probe(spec.potential, ball, rs);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      if (fmt == "json") {
        Json table = Json::array();
        for (const auto& [r, sup] : rows) table.push_back({r, format_rational(sup)});
        o << dump({{"base", *base},
                   {"radius", *radius},
                   {"component_exhausted", ball.component_exhausted},
                   {"sup_outside", std::move(table)}});
      } else {
        TextTable table({"r", "sup |phi| beyond r"});
        for (const auto& [r, sup] : rows) table.add_row({std::to_string(r), format_rational(sup)});
        o << table.render();
      }
      if (ball.budget_exhausted) {
        e << "conjlab: node budget exhausted before radius " << *radius << "\n";
        return static_cast<int>(kExitBudget);
      }
      return static_cast<int>(kExitOk);
    };
  }

  // bound-probe
  {
    auto* sub = app.add_subcommand("bound-probe", "max ||d(g)||_p over a Cayley ball");
    auto file = std::make_shared<std::string>();
    auto radius = std::make_shared<std::uint64_t>(6);
    auto p = std::make_shared<double>(2.0);
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--radius", *radius, "Cayley radius");
    sub->add_option("-p", *p, "Norm exponent (p >= 1)");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const PotentialSpec spec = s.load_potential(*file);
      const Derivation d = s.derivation(spec);
      const BoundednessProbe probe =
          g_boundedness_probe(d, *radius, *p, s.globals().node_budget);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      o << (fmt == "json" ? dump(to_json(d.model(), probe)) : to_table(d.model(), probe));
      return static_cast<int>(kExitOk);
    };
  }

  // appendix
  {
    auto* sub = app.add_subcommand("appendix", "Unbounded inner derivation on H3");
    auto m_max = std::make_shared<std::uint64_t>(64);
    auto n_max = std::make_shared<std::optional<std::uint64_t>>();
    sub->add_option("--m-max", *m_max, "Largest m")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", *n_max, "Largest n (default: m-max)");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const AppendixReport report = run_appendix(*m_max, n_max->value_or(*m_max));
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      o << (fmt == "json" ? dump(to_json(report)) : to_table(report));
      return static_cast<int>(kExitOk);
    };
  }

  // limit
  {
    auto* sub = app.add_subcommand("limit", "||d(a_k)||_q along a_k = conjugator^k");
    auto file = std::make_shared<std::string>();
    auto conjugator = std::make_shared<std::string>();
    auto q = std::make_shared<double>(2.0);
    auto k_max = std::make_shared<std::uint64_t>(8);
    sub->add_option("--potential", *file, "Potential JSON file")->required();
    sub->add_option("--conjugator", *conjugator, "Word such as Ax or x1^2.x2")->required();
    sub->add_option("--q", *q, "Norm exponent (q >= 1)");
    sub->add_option("--k-max", *k_max, "Largest power");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const PotentialSpec spec = s.load_potential(*file);
      const Word word = parse_word(spec.potential.model(), *conjugator);
      const LimitReport report =
          run_limit_experiment(spec.potential, word, *q, *k_max, s.globals().node_budget);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      o << (fmt == "json" ? dump(to_json(report)) : to_table(report));
      return static_cast<int>(kExitOk);
    };
  }

  // inverse-seq
  {
    auto* sub = app.add_subcommand("inverse-seq", "Forward and backward conjugation distances");
    auto u = std::make_shared<std::string>();
    auto conjugator = std::make_shared<std::string>();
    auto suffix = std::make_shared<std::string>("e");
    auto k_max = std::make_shared<std::uint64_t>(8);
    sub->add_option("--u", *u, "Canonical encoding of u")->required();
    sub->add_option("--conjugator", *conjugator, "Word w with a_k = w^k suffix")->required();
    sub->add_option("--suffix", *suffix, "Word appended to each power");
    sub->add_option("--k-max", *k_max, "Largest k");
    commands[sub] = [=](const Session& s, std::ostream& o, std::ostream&) {
      const ModelPtr m = s.model();
      const auto rows = run_inverse_sequence_check(
          *m, m->decode(*u), parse_word(*m, *conjugator), *k_max, s.globals().diam_budget,
          parse_word(*m, *suffix), s.globals().node_budget);
      const std::string fmt = s.format("json");
      s.require_format(fmt, {"json", "table"});
      o << (fmt == "json" ? dump(to_json(rows)) : to_table(rows));
      return static_cast<int>(kExitOk);
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  g.model_given = model_opt->count() > 0;

  try {
    const Session session(g);
    session.model();  // reject unknown model names before doing any work
    for (const auto& [sub, command] : commands) {
      if (!sub->parsed()) continue;
      if (g.output.empty()) return command(session, out, err);
      std::ostringstream buffer;
      const int code = command(session, buffer, err);
      std::ofstream file(g.output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + g.output + "'");
      file << buffer.str();
      return code;
    }
  } catch (const UsageError& e) {
    err << "conjlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "conjlab: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    err << "conjlab: consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "conjlab: internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitUsage;
}

}  // namespace conjlab
