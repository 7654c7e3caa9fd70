#include <memory>

#include "arithmetic.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

namespace detail {

namespace {

bool last_is_a(const DihedralWord& w) {
  return (w.length % 2 == 1) == w.starts_with_a;
}

DihedralWord make_word(std::uint64_t length, bool starts_with_a) {
  return length == 0 ? DihedralWord{} : DihedralWord{length, starts_with_a};
}

}  // namespace

// Concatenation of alternating words: either the junction letters differ and
// the words glue, or they agree and min(|x|,|y|) pairs cancel.
DihedralWord dihedral_multiply(const DihedralWord& x, const DihedralWord& y) {
  if (x.length == 0) return y;
  if (y.length == 0) return x;
  if (last_is_a(x) != y.starts_with_a) return {x.length + y.length, x.starts_with_a};
  if (x.length >= y.length) return make_word(x.length - y.length, x.starts_with_a);
  const bool first = (x.length % 2 == 0) ? y.starts_with_a : !y.starts_with_a;
  return make_word(y.length - x.length, first);
}

DihedralWord dihedral_invert(const DihedralWord& x) {
  return make_word(x.length, last_is_a(x));
}

DihedralWord dihedral_swap(const DihedralWord& x) {
  return make_word(x.length, !x.starts_with_a);
}

std::string dihedral_encode(const DihedralWord& x) {
  if (x.length == 0) return "e";
  std::string out(x.length, 'a');
  bool a = x.starts_with_a;
  for (auto& ch : out) {
    ch = a ? 'a' : 'b';
    a = !a;
  }
  return out;
}

DihedralWord dihedral_parse(std::string_view text) {
  if (text == "e") return {};
  if (text.empty()) throw UsageError("empty dihedral word");
  DihedralWord result;
  for (char ch : text) {
    if (ch != 'a' && ch != 'b') {
      throw UsageError("unexpected letter in dihedral word '" + std::string(text) + "'");
    }
    result = dihedral_multiply(result, DihedralWord{1, ch == 'a'});
  }
  return result;
}

}  // namespace detail

namespace {

GroupElement letter(bool a) { return GroupElement(DihedralWord{1, a}); }

class InfiniteDihedral final : public GroupModel {
 public:
  InfiniteDihedral() { set_generators({{"a", letter(true)}, {"b", letter(false)}}); }

  std::string name() const override { return "dinf"; }
  GroupElement identity() const override { return GroupElement(DihedralWord{}); }
  bool contains(const GroupElement& g) const override {
    return g.holds<DihedralWord>() &&
           (g.as<DihedralWord>().length > 0 || g.as<DihedralWord>().starts_with_a);
  }
  std::string encode(const GroupElement& g) const override {
    require(g);
    return detail::dihedral_encode(g.as<DihedralWord>());
  }
  std::vector<Word> relators() const override {
    return {{{"a", false}, {"a", false}}, {{"b", false}, {"b", false}}};
  }
  std::optional<std::uint64_t> geodesic_length(const GroupElement& g) const override {
    require(g);
    return g.as<DihedralWord>().length;
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    return GroupElement(detail::dihedral_multiply(x.as<DihedralWord>(), y.as<DihedralWord>()));
  }
  GroupElement do_invert(const GroupElement& x) const override {
    return GroupElement(detail::dihedral_invert(x.as<DihedralWord>()));
  }
  GroupElement parse(std::string_view text) const override {
    return GroupElement(detail::dihedral_parse(text));
  }
};

// <a, b, c | a^2, b^2, c^2, cac = b>; elements w c^flip.
class DihedralSemidirect final : public GroupModel {
 public:
  DihedralSemidirect() {
    set_generators({{"a", lift({1, true}, false)},
                    {"b", lift({1, false}, false)},
                    {"c", lift({}, true)}});
  }

  std::string name() const override { return "dsemi"; }
  GroupElement identity() const override { return lift({}, false); }
  bool contains(const GroupElement& g) const override {
    if (!g.holds<DihedralExtension>()) return false;
    const auto& w = g.as<DihedralExtension>().word;
    return w.length > 0 || w.starts_with_a;
  }
  // The lone reflection c is written "c"; every other flipped element is "<w>;c".
  std::string encode(const GroupElement& g) const override {
    require(g);
    const auto& x = g.as<DihedralExtension>();
    if (!x.flip) return detail::dihedral_encode(x.word);
    if (x.word.length == 0) return "c";
    return detail::dihedral_encode(x.word) + ";c";
  }
  std::vector<Word> relators() const override {
    const Generator a{"a", false}, b{"b", false}, c{"c", false};
    return {{a, a}, {b, b}, {c, c}, {c, a, c, b.inverted()}};
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& lhs = x.as<DihedralExtension>();
    const auto& rhs = y.as<DihedralExtension>();
    const DihedralWord moved = lhs.flip ? detail::dihedral_swap(rhs.word) : rhs.word;
    return lift(detail::dihedral_multiply(lhs.word, moved), lhs.flip != rhs.flip);
  }
  GroupElement do_invert(const GroupElement& x) const override {
    const auto& v = x.as<DihedralExtension>();
    DihedralWord inv = detail::dihedral_invert(v.word);
    if (v.flip) inv = detail::dihedral_swap(inv);
    return lift(inv, v.flip);
  }
  GroupElement parse(std::string_view text) const override {
    if (text == "c") return lift({}, true);
    bool flip = false;
    if (text.ends_with(";c")) {
      flip = true;
      text.remove_suffix(2);
    }
    return lift(detail::dihedral_parse(text), flip);
  }

 private:
  static GroupElement lift(DihedralWord w, bool flip) {
    return GroupElement(DihedralExtension{w, flip});
  }
};

}  // namespace

ModelPtr infinite_dihedral() {
  static const ModelPtr model = std::make_shared<InfiniteDihedral>();
  return model;
}

ModelPtr dihedral_semidirect() {
  static const ModelPtr model = std::make_shared<DihedralSemidirect>();
  return model;
}

}  // namespace conjlab
