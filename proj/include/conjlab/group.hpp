#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace conjlab {

using Integer = mpz_class;

/// Matrix [[1,a,c],[0,1,b],[0,0,1]] of H3(Z), i.e. the product A_x^b A_p^a A_1^c.
struct HeisenbergTriple {
  Integer a, b, c;
  friend bool operator==(const HeisenbergTriple&, const HeisenbergTriple&) = default;
};

/// Freely reduced word; letter +i stands for x_i and -i for x_i^-1 (1-based).
struct FreeWord {
  std::vector<std::int32_t> letters;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Reduced word of <a, b | a^2, b^2>. Such a word alternates, so it is fixed by
/// its length and first letter. The identity is {0, true}.
struct DihedralWord {
  std::uint64_t length = 0;
  bool starts_with_a = true;
  friend bool operator==(const DihedralWord&, const DihedralWord&) = default;
};

/// w c^flip in D_inf x| Z_2.
struct DihedralExtension {
  DihedralWord word;
  bool flip = false;
  friend bool operator==(const DihedralExtension&, const DihedralExtension&) = default;
};

/// h c^flip in H3 x| Z_2.
struct HeisenbergExtension {
  HeisenbergTriple triple;
  bool flip = false;
  friend bool operator==(const HeisenbergExtension&, const HeisenbergExtension&) = default;
};

class GroupElement;

/// (left, right) in a direct product; always two parts.
struct ProductPair {
  std::vector<GroupElement> parts;
  friend bool operator==(const ProductPair&, const ProductPair&);
};

/// Canonical normal form of an element of one of the concrete groups.
/// Equality of elements is equality of payloads.
class GroupElement {
 public:
  using Payload = std::variant<HeisenbergTriple, FreeWord, DihedralWord,
                               DihedralExtension, HeisenbergExtension,
                               ProductPair>;

  GroupElement() = default;
  explicit GroupElement(Payload payload) : payload_(std::move(payload)) {}

  const Payload& payload() const { return payload_; }

  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(payload_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(payload_);
  }

  std::size_t hash() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Payload payload_;
};

inline bool operator==(const ProductPair& lhs, const ProductPair& rhs) {
  return lhs.parts == rhs.parts;
}

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// One symbol of X ∪ X^-1.
struct Generator {
  std::string id;
  bool inverse = false;

  Generator inverted() const { return {id, !inverse}; }
  /// "Ax" or "Ax^-1".
  std::string display() const { return inverse ? id + "^-1" : id; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Possibly unreduced word; the empty word is the identity.
using Word = std::vector<Generator>;

/// A symbol of the symmetric generating set together with its value.
struct Letter {
  Generator generator;
  GroupElement element;
};

/// Common interface of the concrete groups. Models are immutable after
/// construction; all operations are pure.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  /// Model name as accepted by make_model, e.g. "h3", "free2", "prod(h3,dinf)".
  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  /// True if the payload is a well-formed canonical element of this model.
  virtual bool contains(const GroupElement& g) const = 0;
  /// Canonical text form; injective.
  virtual std::string encode(const GroupElement& g) const = 0;
  /// Defining relators; each must normalise to the identity.
  virtual std::vector<Word> relators() const = 0;
  /// Word length in closed form, when the model knows one.
  virtual std::optional<std::uint64_t> geodesic_length(const GroupElement&) const {
    return std::nullopt;
  }

  /// Product in canonical form. Throws UsageError if an operand is foreign.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  /// g h g^-1.
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
  GroupElement normal_form(const Word& w) const;
  /// Strict parser: accepts exactly the strings produced by encode.
  GroupElement decode(std::string_view text) const;

  /// Base generator ids, in presentation order.
  const std::vector<std::string>& generator_ids() const { return generator_ids_; }
  /// X ∪ X^-1 with duplicate elements removed (involutions appear once).
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  GroupElement generator(const Generator& x) const;
  /// The alphabet symbol whose value is the inverse of x's value.
  Generator inverse_label(const Generator& x) const;

  void require(const GroupElement& g) const;

 protected:
  virtual GroupElement do_multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement do_invert(const GroupElement& a) const = 0;
  /// Lenient parse; decode() re-encodes and rejects non-canonical spellings.
  virtual GroupElement parse(std::string_view text) const = 0;

  /// Registers the base generators and builds the symmetric alphabet.
  void set_generators(std::vector<std::pair<std::string, GroupElement>> base);

 private:
  std::vector<std::string> generator_ids_;
  std::vector<GroupElement> generator_values_;
  std::vector<Letter> alphabet_;
};

using ModelPtr = std::shared_ptr<const GroupModel>;

ModelPtr heisenberg();
ModelPtr free_group(int rank);
ModelPtr infinite_dihedral();
ModelPtr dihedral_semidirect();
ModelPtr heisenberg_semidirect();
ModelPtr direct_product(ModelPtr left, ModelPtr right);

/// Builds a model from its name: h3, free<n>, dinf, dsemi, h3semi,
/// prod(<model>,<model>).
ModelPtr make_model(std::string_view name);

/// Parses "e" or letters joined by '.', each "<id>" or "<id>^<int>".
Word parse_word(const GroupModel& model, std::string_view text);

}  // namespace conjlab
