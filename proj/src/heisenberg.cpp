#include <memory>

#include "arithmetic.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

namespace detail {

HeisenbergTriple h3_multiply(const HeisenbergTriple& x, const HeisenbergTriple& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b};
}

HeisenbergTriple h3_invert(const HeisenbergTriple& x) {
  return {-x.a, -x.b, x.a * x.b - x.c};
}

// A_x^b A_p^a A_1^c  ->  A_p^b A_x^a A_1^-c  =  (b, a, ab - c).
HeisenbergTriple h3_swap(const HeisenbergTriple& x) {
  return {x.b, x.a, x.a * x.b - x.c};
}

std::string h3_encode(const HeisenbergTriple& x) {
  return "H3(" + x.a.get_str() + "," + x.b.get_str() + "," + x.c.get_str() + ")";
}

HeisenbergTriple h3_parse(std::string_view text) {
  if (!text.starts_with("H3(") || !text.ends_with(")")) {
    throw UsageError("expected H3(a,b,c), got '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(3, text.size() - 4);
  const auto first = body.find(',');
  const auto second = first == std::string_view::npos ? first : body.find(',', first + 1);
  if (second == std::string_view::npos) {
    throw UsageError("expected H3(a,b,c), got '" + std::string(text) + "'");
  }
  return {parse_integer(body.substr(0, first)),
          parse_integer(body.substr(first + 1, second - first - 1)),
          parse_integer(body.substr(second + 1))};
}

}  // namespace detail

namespace {

GroupElement triple(long a, long b, long c) {
  return GroupElement(HeisenbergTriple{Integer(a), Integer(b), Integer(c)});
}

Word commutator_relator(const std::string& x, const std::string& y, const Word& tail) {
  Word w{{x, false}, {y, false}, {x, true}, {y, true}};
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

class Heisenberg final : public GroupModel {
 public:
  Heisenberg() {
    set_generators({{"Ax", triple(0, 1, 0)}, {"Ap", triple(1, 0, 0)}, {"A1", triple(0, 0, 1)}});
  }

  std::string name() const override { return "h3"; }
  GroupElement identity() const override { return triple(0, 0, 0); }
  bool contains(const GroupElement& g) const override { return g.holds<HeisenbergTriple>(); }
  std::string encode(const GroupElement& g) const override {
    require(g);
    return detail::h3_encode(g.as<HeisenbergTriple>());
  }

  std::vector<Word> relators() const override {
    return {commutator_relator("Ap", "Ax", {{"A1", true}}), commutator_relator("Ap", "A1", {}),
            commutator_relator("Ax", "A1", {})};
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    return GroupElement(detail::h3_multiply(x.as<HeisenbergTriple>(), y.as<HeisenbergTriple>()));
  }
  GroupElement do_invert(const GroupElement& x) const override {
    return GroupElement(detail::h3_invert(x.as<HeisenbergTriple>()));
  }
  GroupElement parse(std::string_view text) const override {
    return GroupElement(detail::h3_parse(text));
  }
};

// (h1, e1)(h2, e2) = (h1 sigma^e1(h2), e1 xor e2).
class HeisenbergSemidirect final : public GroupModel {
 public:
  HeisenbergSemidirect() {
    set_generators({{"Ax", lift(0, 1, 0, false)},
                    {"Ap", lift(1, 0, 0, false)},
                    {"A1", lift(0, 0, 1, false)},
                    {"c", lift(0, 0, 0, true)}});
  }

  std::string name() const override { return "h3semi"; }
  GroupElement identity() const override { return lift(0, 0, 0, false); }
  bool contains(const GroupElement& g) const override { return g.holds<HeisenbergExtension>(); }
  std::string encode(const GroupElement& g) const override {
    require(g);
    const auto& x = g.as<HeisenbergExtension>();
    return detail::h3_encode(x.triple) + (x.flip ? ";c" : "");
  }

  std::vector<Word> relators() const override {
    std::vector<Word> out{commutator_relator("Ap", "Ax", {{"A1", true}}),
                          commutator_relator("Ap", "A1", {}), commutator_relator("Ax", "A1", {})};
    const Generator c{"c", false};
    out.push_back({c, c});
    out.push_back({c, {"Ap", false}, c, {"Ax", true}});
    out.push_back({c, {"Ax", false}, c, {"Ap", true}});
    out.push_back({c, {"A1", false}, c, {"A1", false}});
    return out;
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& lhs = x.as<HeisenbergExtension>();
    const auto& rhs = y.as<HeisenbergExtension>();
    const HeisenbergTriple moved = lhs.flip ? detail::h3_swap(rhs.triple) : rhs.triple;
    return GroupElement(
        HeisenbergExtension{detail::h3_multiply(lhs.triple, moved), lhs.flip != rhs.flip});
  }
  // (h c^e)^-1 = c^e h^-1 = sigma^e(h^-1) c^e.
  GroupElement do_invert(const GroupElement& x) const override {
    const auto& v = x.as<HeisenbergExtension>();
    HeisenbergTriple inv = detail::h3_invert(v.triple);
    if (v.flip) inv = detail::h3_swap(inv);
    return GroupElement(HeisenbergExtension{std::move(inv), v.flip});
  }
  GroupElement parse(std::string_view text) const override {
    bool flip = false;
    if (text.ends_with(";c")) {
      flip = true;
      text.remove_suffix(2);
    }
    return GroupElement(HeisenbergExtension{detail::h3_parse(text), flip});
  }

 private:
  static GroupElement lift(long a, long b, long c, bool flip) {
    return GroupElement(HeisenbergExtension{{Integer(a), Integer(b), Integer(c)}, flip});
  }
};

}  // namespace

ModelPtr heisenberg() {
  static const ModelPtr model = std::make_shared<Heisenberg>();
  return model;
}

ModelPtr heisenberg_semidirect() {
  static const ModelPtr model = std::make_shared<HeisenbergSemidirect>();
  return model;
}

}  // namespace conjlab
