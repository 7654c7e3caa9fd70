#include <gtest/gtest.h>

#include <random>

#include "conjlab/errors.hpp"
#include "conjlab/group.hpp"
#include "oracles.hpp"

using namespace conjlab;

namespace {

GroupElement h3(long a, long b, long c) {
  return GroupElement(HeisenbergTriple{Integer(a), Integer(b), Integer(c)});
}

std::vector<ModelPtr> all_models() {
  return {heisenberg(),
          free_group(2),
          free_group(3),
          infinite_dihedral(),
          dihedral_semidirect(),
          heisenberg_semidirect(),
          direct_product(heisenberg(), infinite_dihedral()),
          direct_product(free_group(2), dihedral_semidirect())};
}

}  // namespace

TEST(Heisenberg, MatchesMatrixArithmeticOnSmallTriples) {
  const ModelPtr m = heisenberg();
  std::vector<GroupElement> elems;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) elems.push_back(h3(a, b, c));
  for (const auto& x : elems) {
    const oracle::Mat3 mx = oracle::matrix(x.as<HeisenbergTriple>());
    ASSERT_EQ(m->invert(x), oracle::element(oracle::inverse(mx)));
    for (const auto& y : elems) {
      const oracle::Mat3 my = oracle::matrix(y.as<HeisenbergTriple>());
      ASSERT_EQ(m->multiply(x, y), oracle::element(oracle::mul(mx, my)));
    }
  }
  // Conjugation on a coarser grid; the full square would repeat the same algebra.
  for (std::size_t i = 0; i < elems.size(); i += 7) {
    for (std::size_t j = 0; j < elems.size(); j += 5) {
      const oracle::Mat3 g = oracle::matrix(elems[i].as<HeisenbergTriple>());
      const oracle::Mat3 h = oracle::matrix(elems[j].as<HeisenbergTriple>());
      ASSERT_EQ(m->conjugate(elems[i], elems[j]),
                oracle::element(oracle::mul(oracle::mul(g, h), oracle::inverse(g))));
    }
  }
}

TEST(Heisenberg, GeneratorsAndCommutator) {
  const ModelPtr m = heisenberg();
  const auto ax = m->generator({"Ax"});
  const auto ap = m->generator({"Ap"});
  const auto a1 = m->generator({"A1"});
  EXPECT_EQ(ax, h3(0, 1, 0));
  EXPECT_EQ(ap, h3(1, 0, 0));
  EXPECT_EQ(a1, h3(0, 0, 1));
  EXPECT_EQ(m->multiply(ap, ax), m->multiply(m->multiply(ax, ap), a1));
  // Path edge: A_x (A_p A_1^k) A_x^-1 = A_p A_1^(k-1).
  for (long k = -4; k <= 4; ++k) {
    EXPECT_EQ(m->conjugate(ax, h3(1, 0, k)), h3(1, 0, k - 1));
  }
  // (a, b, c) is A_x^b A_p^a A_1^c.
  EXPECT_EQ(m->normal_form(parse_word(*m, "Ax^-2.Ap^3.A1^5")), h3(3, -2, 5));
}

TEST(Heisenberg, EncodingIsCanonical) {
  const ModelPtr m = heisenberg();
  EXPECT_EQ(m->encode(h3(1, -2, 0)), "H3(1,-2,0)");
  EXPECT_EQ(m->decode("H3(-4,0,12)"), h3(-4, 0, 12));
  for (const char* bad : {"H3(01,0,0)", "H3( 1,0,0)", "H3(1,0)", "H3(+1,0,0)", "H3(-0,0,0)",
                          "h3(1,0,0)", "H3(1,0,0);c", ""}) {
    EXPECT_THROW(m->decode(bad), UsageError) << bad;
  }
}

TEST(FreeGroup, MatchesStackReduction) {
  const ModelPtr m = free_group(2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> length(0, 10);
  const std::int32_t letters[] = {1, -1, 2, -2};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int32_t> u, v;
    for (int n = length(rng); n > 0; --n) u.push_back(letters[letter(rng)]);
    for (int n = length(rng); n > 0; --n) v.push_back(letters[letter(rng)]);
    const GroupElement x(FreeWord{oracle::reduce(u)});
    const GroupElement y(FreeWord{oracle::reduce(v)});
    std::vector<std::int32_t> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    ASSERT_EQ(m->multiply(x, y), GroupElement(FreeWord{oracle::reduce(uv)}));
  }
}

TEST(FreeGroup, SyllableEncoding) {
  const ModelPtr m = free_group(2);
  EXPECT_EQ(m->encode(m->identity()), "e");
  EXPECT_EQ(m->encode(m->normal_form(parse_word(*m, "x1.x1.x2^-1"))), "x1^2.x2^-1");
  EXPECT_EQ(m->decode("x1.x2^-1"), GroupElement(FreeWord{{1, -2}}));
  for (const char* bad : {"x1.x1", "x1^1", "x1^0", "x3", "x1^-1.x1", "x1..x2", "E"}) {
    EXPECT_THROW(m->decode(bad), UsageError) << bad;
  }
  EXPECT_THROW(free_group(0), UsageError);
}

TEST(InfiniteDihedral, MatchesAffineIsometries) {
  const ModelPtr m = infinite_dihedral();
  std::vector<GroupElement> elems;
  for (std::uint64_t len = 0; len <= 7; ++len) {
    elems.emplace_back(DihedralWord{len, true});
    if (len > 0) elems.emplace_back(DihedralWord{len, false});
  }
  for (const auto& x : elems) {
    const auto fx = oracle::affine(x.as<DihedralWord>());
    EXPECT_EQ(oracle::affine(m->invert(x).as<DihedralWord>()),
              (oracle::Affine{fx.sign, -fx.sign * fx.shift}));
    for (const auto& y : elems) {
      ASSERT_EQ(oracle::affine(m->multiply(x, y).as<DihedralWord>()),
                oracle::compose(fx, oracle::affine(y.as<DihedralWord>())));
    }
  }
  EXPECT_EQ(m->alphabet().size(), 2u);
  EXPECT_EQ(m->encode(m->decode("abab")), "abab");
  EXPECT_THROW(m->decode("aab"), UsageError);
  EXPECT_THROW(m->decode(""), UsageError);
}

TEST(DihedralSemidirect, MatchesAffineIsometries) {
  const ModelPtr m = dihedral_semidirect();
  std::vector<GroupElement> elems;
  for (std::uint64_t len = 0; len <= 5; ++len) {
    for (bool flip : {false, true}) {
      elems.emplace_back(DihedralExtension{DihedralWord{len, true}, flip});
      if (len > 0) elems.emplace_back(DihedralExtension{DihedralWord{len, false}, flip});
    }
  }
  for (const auto& x : elems) {
    const auto fx = oracle::affine(x.as<DihedralExtension>());
    for (const auto& y : elems) {
      ASSERT_EQ(oracle::affine(m->multiply(x, y).as<DihedralExtension>()),
                oracle::compose(fx, oracle::affine(y.as<DihedralExtension>())));
    }
  }
  const auto a = m->generator({"a"});
  const auto c = m->generator({"c"});
  EXPECT_EQ(m->encode(c), "c");
  EXPECT_EQ(m->encode(m->multiply(a, c)), "a;c");
  EXPECT_EQ(m->encode(m->multiply(c, a)), "b;c");
  EXPECT_EQ(m->encode(m->conjugate(c, a)), "b");
  EXPECT_EQ(m->encode(m->multiply(m->multiply(a, c), a)), "ab;c");
  EXPECT_THROW(m->decode("e;c"), UsageError);
  EXPECT_THROW(m->decode(";c"), UsageError);
  EXPECT_EQ(m->alphabet().size(), 3u);
}

TEST(HeisenbergSemidirect, SwapIsAnAutomorphism) {
  const ModelPtr m = heisenberg_semidirect();
  const auto c = m->generator({"c"});
  auto swap = [](const oracle::Mat3& x) {
    oracle::Mat3 y = oracle::identity3();
    y[0][1] = x[1][2];
    y[1][2] = x[0][1];
    y[0][2] = x[0][1] * x[1][2] - x[0][2];
    return y;
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const oracle::Mat3 x = oracle::matrix(coord(rng), coord(rng), coord(rng));
    const oracle::Mat3 y = oracle::matrix(coord(rng), coord(rng), coord(rng));
    ASSERT_EQ(swap(oracle::mul(x, y)), oracle::mul(swap(x), swap(y)));
    const GroupElement hx(HeisenbergExtension{oracle::element(x).as<HeisenbergTriple>(), false});
    ASSERT_EQ(m->conjugate(c, hx),
              GroupElement(HeisenbergExtension{oracle::element(swap(x)).as<HeisenbergTriple>(),
                                               false}));
  }
  EXPECT_EQ(m->conjugate(c, m->generator({"Ap"})), m->generator({"Ax"}));
  EXPECT_EQ(m->conjugate(c, m->generator({"A1"})), m->invert(m->generator({"A1"})));
  EXPECT_EQ(m->encode(c), "H3(0,0,0);c");
  EXPECT_EQ(m->alphabet().size(), 7u);
}

TEST(DirectProduct, ComponentwiseAndEncoded) {
  const ModelPtr m = make_model("prod(h3,dinf)");
  EXPECT_EQ(m->name(), "prod(h3,dinf)");
  EXPECT_EQ(m->alphabet().size(), 8u);
  const auto x = m->decode("(H3(1,2,3)|ab)");
  const auto y = m->decode("(H3(0,-1,4)|ba)");
  EXPECT_EQ(m->encode(m->multiply(x, y)), "(H3(1,1,6)|e)");
  const GroupElement xy = m->multiply(x, y);
  const auto& parts = xy.as<ProductPair>().parts;
  EXPECT_EQ(parts[0], heisenberg()->multiply(x.as<ProductPair>().parts[0],
                                             y.as<ProductPair>().parts[0]));
  EXPECT_EQ(parts[1], infinite_dihedral()->multiply(x.as<ProductPair>().parts[1],
                                                    y.as<ProductPair>().parts[1]));
  EXPECT_EQ(m->encode(m->generator({"Ax@1"})), "(H3(0,1,0)|e)");
  EXPECT_EQ(m->encode(m->generator({"b@2"})), "(H3(0,0,0)|b)");
  EXPECT_EQ(make_model("prod(prod(dinf,dinf),free2)")->encode(
                make_model("prod(prod(dinf,dinf),free2)")->identity()),
            "((e|e)|e)");
}

TEST(Models, FactoryNamesAndRejection) {
  for (const char* name : {"h3", "free1", "free2", "free5", "dinf", "dsemi", "h3semi",
                           "prod(h3,free2)", "prod(dinf,prod(dsemi,h3semi))"}) {
    EXPECT_EQ(make_model(name)->name(), name);
  }
  for (const char* name : {"", "H3", "free", "free0", "free-1", "prod(h3)", "prod(h3,dinf",
                           "prod(h3,dinf)x", "z2"}) {
    EXPECT_THROW(make_model(name), UsageError) << name;
  }
}

TEST(Models, ForeignElementsRejected) {
  const ModelPtr h = heisenberg();
  const ModelPtr d = infinite_dihedral();
  EXPECT_THROW(h->multiply(h->identity(), d->identity()), UsageError);
  EXPECT_THROW(d->invert(h->identity()), UsageError);
  // A free word using x3 is not an element of Free(2).
  EXPECT_THROW(free_group(2)->invert(GroupElement(FreeWord{{3}})), UsageError);
  EXPECT_THROW(parse_word(*h, "Ax.Bx"), UsageError);
  EXPECT_THROW(parse_word(*h, "Ax^"), UsageError);
}

TEST(ModelProperties, RelatorsVanish) {
  for (const auto& m : all_models()) {
    for (const auto& r : m->relators()) {
      EXPECT_EQ(m->normal_form(r), m->identity()) << m->name();
      EXPECT_EQ(oracle::evaluate(*m, r), m->identity()) << m->name();
    }
  }
}

TEST(ModelProperties, GroupAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (const auto& m : all_models()) {
    const auto e = m->identity();
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = oracle::random_element(*m, rng, 8);
      const auto y = oracle::random_element(*m, rng, 8);
      const auto z = oracle::random_element(*m, rng, 8);
      ASSERT_EQ(m->multiply(m->multiply(x, y), z), m->multiply(x, m->multiply(y, z))) << m->name();
      ASSERT_EQ(m->multiply(x, e), x);
      ASSERT_EQ(m->multiply(e, x), x);
      ASSERT_EQ(m->multiply(x, m->invert(x)), e);
      ASSERT_EQ(m->invert(m->invert(x)), x);
      ASSERT_EQ(m->conjugate(x, y), m->multiply(m->multiply(x, y), m->invert(x)));
      ASSERT_EQ(m->conjugate(m->invert(x), m->conjugate(x, y)), y);
    }
  }
}

TEST(ModelProperties, EncodingRoundTripsAndNormalFormIsIdempotent) {
  std::mt19937_64 rng(13);
  for (const auto& m : all_models()) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = oracle::random_element(*m, rng, 10);
      ASSERT_TRUE(m->contains(x));
      const std::string enc = m->encode(x);
      ASSERT_EQ(m->decode(enc), x) << enc;
      ASSERT_EQ(m->encode(m->decode(enc)), enc);
      ASSERT_EQ(m->decode(enc).hash(), x.hash());
    }
    // normal_form of the word spelled by the alphabet is the element itself.
    for (const auto& letter : m->alphabet()) {
      EXPECT_EQ(m->normal_form({letter.generator}), letter.element);
      EXPECT_EQ(m->normal_form({letter.generator, letter.generator.inverted()}), m->identity());
      EXPECT_EQ(m->generator(m->inverse_label(letter.generator)), m->invert(letter.element));
    }
  }
}
