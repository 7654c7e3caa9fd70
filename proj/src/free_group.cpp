#include <cstdlib>
#include <memory>

#include "arithmetic.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

namespace {

class FreeGroup final : public GroupModel {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {
    std::vector<std::pair<std::string, GroupElement>> base;
    for (int i = 1; i <= rank; ++i) {
      base.emplace_back("x" + std::to_string(i), GroupElement(FreeWord{{i}}));
    }
    set_generators(std::move(base));
  }

  std::string name() const override { return "free" + std::to_string(rank_); }
  GroupElement identity() const override { return GroupElement(FreeWord{}); }

  bool contains(const GroupElement& g) const override {
    if (!g.holds<FreeWord>()) return false;
    const auto& letters = g.as<FreeWord>().letters;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] == 0 || std::abs(letters[i]) > rank_) return false;
      if (i > 0 && letters[i] == -letters[i - 1]) return false;
    }
    return true;
  }

  // Syllables x<i>^<k> joined by '.', exponent omitted when it is 1.
  std::string encode(const GroupElement& g) const override {
    require(g);
    const auto& letters = g.as<FreeWord>().letters;
    if (letters.empty()) return "e";
    std::string out;
    std::size_t i = 0;
    while (i < letters.size()) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) ++j;
      if (!out.empty()) out += '.';
      out += "x" + std::to_string(std::abs(letters[i]));
      const long exponent = static_cast<long>(j - i) * (letters[i] > 0 ? 1 : -1);
      if (exponent != 1) out += "^" + std::to_string(exponent);
      i = j;
    }
    return out;
  }

  std::vector<Word> relators() const override { return {}; }

  std::optional<std::uint64_t> geodesic_length(const GroupElement& g) const override {
    require(g);
    return g.as<FreeWord>().letters.size();
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& lhs = x.as<FreeWord>().letters;
    const auto& rhs = y.as<FreeWord>().letters;
    std::size_t cancel = 0;
    while (cancel < lhs.size() && cancel < rhs.size() &&
           lhs[lhs.size() - 1 - cancel] == -rhs[cancel]) {
      ++cancel;
    }
    FreeWord out;
    out.letters.reserve(lhs.size() + rhs.size() - 2 * cancel);
    out.letters.insert(out.letters.end(), lhs.begin(), lhs.end() - cancel);
    out.letters.insert(out.letters.end(), rhs.begin() + cancel, rhs.end());
    return GroupElement(std::move(out));
  }

  GroupElement do_invert(const GroupElement& x) const override {
    const auto& letters = x.as<FreeWord>().letters;
    FreeWord out;
    out.letters.assign(letters.rbegin(), letters.rend());
    for (auto& l : out.letters) l = -l;
    return GroupElement(std::move(out));
  }

  GroupElement parse(std::string_view text) const override {
    GroupElement result = identity();
    for (const auto& x : parse_word(*this, text)) result = do_multiply(result, generator(x));
    return result;
  }

 private:
  int rank_;
};

}  // namespace

ModelPtr free_group(int rank) {
  if (rank < 1) throw UsageError("free group rank must be positive");
  return std::make_shared<FreeGroup>(rank);
}

}  // namespace conjlab
