#include <memory>

#include "conjlab/errors.hpp"
#include "conjlab/group.hpp"

namespace conjlab {

namespace {

// Generators of the factors are tagged "<id>@1" and "<id>@2".
class DirectProduct final : public GroupModel {
 public:
  DirectProduct(ModelPtr left, ModelPtr right) : left_(std::move(left)), right_(std::move(right)) {
    std::vector<std::pair<std::string, GroupElement>> base;
    for (const auto& id : left_->generator_ids()) {
      base.emplace_back(id + "@1", pair(left_->generator({id}), right_->identity()));
    }
    for (const auto& id : right_->generator_ids()) {
      base.emplace_back(id + "@2", pair(left_->identity(), right_->generator({id})));
    }
    set_generators(std::move(base));
  }

  std::string name() const override {
    return "prod(" + left_->name() + "," + right_->name() + ")";
  }
  GroupElement identity() const override { return pair(left_->identity(), right_->identity()); }

  bool contains(const GroupElement& g) const override {
    if (!g.holds<ProductPair>()) return false;
    const auto& parts = g.as<ProductPair>().parts;
    return parts.size() == 2 && left_->contains(parts[0]) && right_->contains(parts[1]);
  }

  std::string encode(const GroupElement& g) const override {
    require(g);
    const auto& parts = g.as<ProductPair>().parts;
    return "(" + left_->encode(parts[0]) + "|" + right_->encode(parts[1]) + ")";
  }

  std::vector<Word> relators() const override {
    std::vector<Word> out;
    auto tagged = [](const Word& w, const std::string& tag) {
      Word result;
      for (const auto& x : w) result.push_back({x.id + tag, x.inverse});
      return result;
    };
    for (const auto& r : left_->relators()) out.push_back(tagged(r, "@1"));
    for (const auto& r : right_->relators()) out.push_back(tagged(r, "@2"));
    for (const auto& x : left_->generator_ids()) {
      for (const auto& y : right_->generator_ids()) {
        out.push_back({{x + "@1", false}, {y + "@2", false}, {x + "@1", true}, {y + "@2", true}});
      }
    }
    return out;
  }

  std::optional<std::uint64_t> geodesic_length(const GroupElement& g) const override {
    require(g);
    const auto& parts = g.as<ProductPair>().parts;
    auto l = left_->geodesic_length(parts[0]);
    auto r = right_->geodesic_length(parts[1]);
    if (!l || !r) return std::nullopt;
    return *l + *r;
  }

 protected:
  GroupElement do_multiply(const GroupElement& x, const GroupElement& y) const override {
    const auto& a = x.as<ProductPair>().parts;
    const auto& b = y.as<ProductPair>().parts;
    return pair(left_->multiply(a[0], b[0]), right_->multiply(a[1], b[1]));
  }
  GroupElement do_invert(const GroupElement& x) const override {
    const auto& a = x.as<ProductPair>().parts;
    return pair(left_->invert(a[0]), right_->invert(a[1]));
  }
  GroupElement parse(std::string_view text) const override {
    if (!text.starts_with("(") || !text.ends_with(")")) {
      throw UsageError("expected (lhs|rhs), got '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == '|' && depth == 0) {
        return pair(left_->decode(body.substr(0, i)), right_->decode(body.substr(i + 1)));
      }
    }
    throw UsageError("expected (lhs|rhs), got '" + std::string(text) + "'");
  }

 private:
  static GroupElement pair(GroupElement l, GroupElement r) {
    return GroupElement(ProductPair{{std::move(l), std::move(r)}});
  }

  ModelPtr left_;
  ModelPtr right_;
};

}  // namespace

ModelPtr direct_product(ModelPtr left, ModelPtr right) {
  if (!left || !right) throw UsageError("direct product needs two models");
  return std::make_shared<DirectProduct>(std::move(left), std::move(right));
}

}  // namespace conjlab
