#include "conjlab/group.hpp"

#include <charconv>
#include <limits>

#include "arithmetic.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

namespace detail {

std::size_t hash_integer(const Integer& z) {
  mpz_srcptr raw = z.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(raw) + 1);
  const std::size_t limbs = mpz_size(raw);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(raw, i)));
  }
  return seed;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw UsageError("expected an integer, got '" + std::string(text) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw UsageError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

}  // namespace detail

namespace {

struct PayloadHasher {
  std::size_t operator()(const HeisenbergTriple& t) const {
    std::size_t seed = 0x11;
    detail::hash_combine(seed, detail::hash_integer(t.a));
    detail::hash_combine(seed, detail::hash_integer(t.b));
    detail::hash_combine(seed, detail::hash_integer(t.c));
    return seed;
  }
  std::size_t operator()(const FreeWord& w) const {
    std::size_t seed = 0x22;
    for (auto letter : w.letters) detail::hash_combine(seed, std::hash<std::int32_t>{}(letter));
    return seed;
  }
  std::size_t operator()(const DihedralWord& w) const {
    std::size_t seed = 0x33;
    detail::hash_combine(seed, std::hash<std::uint64_t>{}(w.length));
    detail::hash_combine(seed, w.starts_with_a ? 1 : 2);
    return seed;
  }
  std::size_t operator()(const DihedralExtension& x) const {
    std::size_t seed = (*this)(x.word);
    detail::hash_combine(seed, x.flip ? 0x44 : 0x55);
    return seed;
  }
  std::size_t operator()(const HeisenbergExtension& x) const {
    std::size_t seed = (*this)(x.triple);
    detail::hash_combine(seed, x.flip ? 0x44 : 0x55);
    return seed;
  }
  std::size_t operator()(const ProductPair& p) const {
    std::size_t seed = 0x66;
    for (const auto& part : p.parts) detail::hash_combine(seed, part.hash());
    return seed;
  }
};

}  // namespace

std::size_t GroupElement::hash() const { return std::visit(PayloadHasher{}, payload_); }

void GroupModel::require(const GroupElement& g) const {
  if (!contains(g)) throw UsageError("element does not belong to model " + name());
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  return do_multiply(a, b);
}

GroupElement GroupModel::invert(const GroupElement& a) const {
  require(a);
  return do_invert(a);
}

GroupElement GroupModel::conjugate(const GroupElement& g, const GroupElement& h) const {
  require(g);
  require(h);
  return do_multiply(do_multiply(g, h), do_invert(g));
}

GroupElement GroupModel::generator(const Generator& x) const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i) {
    if (generator_ids_[i] == x.id) {
      return x.inverse ? do_invert(generator_values_[i]) : generator_values_[i];
    }
  }
  throw UsageError("unknown generator '" + x.id + "' for model " + name());
}

Generator GroupModel::inverse_label(const Generator& x) const {
  const GroupElement target = do_invert(generator(x));
  for (const auto& letter : alphabet_) {
    if (letter.element == target) return letter.generator;
  }
  throw UsageError("no alphabet symbol for the inverse of " + x.display());
}

GroupElement GroupModel::normal_form(const Word& w) const {
  GroupElement result = identity();
  for (const auto& x : w) result = do_multiply(result, generator(x));
  return result;
}

GroupElement GroupModel::decode(std::string_view text) const {
  GroupElement g = parse(text);
  if (!contains(g) || encode(g) != text) {
    throw UsageError("'" + std::string(text) + "' is not a canonical " + name() + " element");
  }
  return g;
}

void GroupModel::set_generators(std::vector<std::pair<std::string, GroupElement>> base) {
  generator_ids_.clear();
  generator_values_.clear();
  alphabet_.clear();
  for (auto& [id, value] : base) {
    generator_ids_.push_back(id);
    generator_values_.push_back(value);
    alphabet_.push_back({Generator{id, false}, value});
  }
  for (std::size_t i = 0; i < generator_ids_.size(); ++i) {
    GroupElement inverse = do_invert(generator_values_[i]);
    bool seen = false;
    for (const auto& letter : alphabet_) seen = seen || letter.element == inverse;
    if (!seen) alphabet_.push_back({Generator{generator_ids_[i], true}, std::move(inverse)});
  }
}

Word parse_word(const GroupModel& model, std::string_view text) {
  Word word;
  if (text == "e" || text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    if (token.empty()) throw UsageError("empty letter in word '" + std::string(text) + "'");
    std::string_view id = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      id = token.substr(0, caret);
      std::string_view exp_text = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
        throw UsageError("bad exponent in '" + std::string(token) + "'");
      }
    }
    Generator x{std::string(id), exponent < 0};
    (void)model.generator(x);  // validates the id
    for (long i = 0; i < std::labs(exponent); ++i) word.push_back(x);
    start = end + 1;
  }
  return word;
}

namespace {

// Splits "l,r" at the comma that sits outside every parenthesis.
std::pair<std::string_view, std::string_view> split_top_level(std::string_view text, char sep) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) return {text.substr(0, i), text.substr(i + 1)};
  }
  throw UsageError("missing '" + std::string(1, sep) + "' in '" + std::string(text) + "'");
}

}  // namespace

ModelPtr make_model(std::string_view name) {
  if (name == "h3") return heisenberg();
  if (name == "dinf") return infinite_dihedral();
  if (name == "dsemi") return dihedral_semidirect();
  if (name == "h3semi") return heisenberg_semidirect();
  if (name.starts_with("free")) {
    std::string_view digits = name.substr(4);
    int rank = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || rank < 1 ||
        digits.front() == '0') {
      throw UsageError("bad free group rank in '" + std::string(name) + "'");
    }
    return free_group(rank);
  }
  if (name.starts_with("prod(") && name.ends_with(")")) {
    auto [left, right] = split_top_level(name.substr(5, name.size() - 6), ',');
    return direct_product(make_model(left), make_model(right));
  }
  throw UsageError("unknown model '" + std::string(name) + "'");
}

}  // namespace conjlab
