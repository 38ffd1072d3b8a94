#include <gtest/gtest.h>

#include <random>

#include "qniep/errors.hpp"
#include "qniep/spectrum.hpp"
#include "test_util.hpp"

namespace qniep {
namespace {

using testing::R;
using testing::S;
using testing::random_rational;

TEST(Normalize, SortsAndComputesMembership) {
  auto [s, m] = normalize({R("-3"), R("6")});
  EXPECT_EQ(s, S("6,-3"));
  EXPECT_EQ(m.sigma, R("3"));
  EXPECT_EQ(m.rho, R("6"));
  EXPECT_TRUE(m.in_pi);
  EXPECT_EQ(m.p, 1);
  EXPECT_EQ(m.q, 1);
}

TEST(Normalize, SingletonZero) {
  auto [s, m] = normalize({R("0")});
  EXPECT_EQ(s, S("0"));
  EXPECT_EQ(m.sigma, R("0"));
  EXPECT_EQ(m.rho, R("0"));
  EXPECT_TRUE(m.in_pi);
}

TEST(Normalize, FlagsBothGateFailures) {
  auto [s, m] = normalize({R("1"), R("-5")});
  EXPECT_EQ(s, S("1,-5"));
  EXPECT_EQ(m.sigma, R("-4"));
  EXPECT_EQ(m.rho, R("5"));
  EXPECT_FALSE(m.in_pi);
}

TEST(Normalize, EmptyInputThrows) {
  EXPECT_THROW(normalize({}), Error);
}

TEST(Union, PaperExample) {
  EXPECT_EQ(union_of(union_of(S("9,-1"), S("5,3,-4")), S("3,3,-1,-7")),
            S("9,5,3,3,3,-1,-1,-4,-7"));
}

TEST(Union, EmptyIdentityAndResort) {
  EXPECT_EQ(union_of(S("4,2,-3,-3"), SpectrumList()), S("4,2,-3,-3"));
  EXPECT_EQ(union_of(S("3,-3"), S("2,-2")), S("3,2,-2,-3"));
}

TEST(SetMinus, PaperExample) {
  EXPECT_EQ(set_minus(S("8,6,3,3,3,-4,-4,-6,-7"), S("8,3,-4,-4,-7")), S("6,3,3,-6"));
}

TEST(SetMinus, SelfAndMissingEntry) {
  EXPECT_TRUE(set_minus(S("4,2,-3,-3"), S("4,2,-3,-3")).empty());
  EXPECT_THROW(set_minus(S("1,0"), S("2")), Error);
  EXPECT_THROW(set_minus(S("1,1"), S("1,1,1")), Error);  // multiplicity matters
}

TEST(SplitSigns, ZerosGoNonnegative) {
  auto [pos, neg] = split_signs(S("4,2,-3,-3"));
  EXPECT_EQ(pos, S("4,2"));
  EXPECT_EQ(neg, S("-3,-3"));
  auto [pos0, neg0] = split_signs(S("0,0"));
  EXPECT_EQ(pos0, S("0,0"));
  EXPECT_TRUE(neg0.empty());
  auto [posu, negu] = split_signs(S("9,5,3,3,3,-1,-1,-4,-7"));
  EXPECT_EQ(posu, S("9,5,3,3,3"));
  EXPECT_EQ(negu, S("-1,-1,-4,-7"));
}

TEST(SpectrumAlgebra, RandomizedProperties) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rational> ea, eb;
    const int na = static_cast<int>(rng() % 5);
    const int nb = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < na; ++i) ea.push_back(random_rational(rng, 8, 3));
    for (int i = 0; i < nb; ++i) eb.push_back(random_rational(rng, 8, 3));
    SpectrumList a(ea), b(eb);

    // union is commutative; set_minus undoes union.
    EXPECT_EQ(union_of(a, b), union_of(b, a));
    EXPECT_EQ(set_minus(union_of(a, b), b), a);

    // split partitions with p/q counts matching.
    SpectrumList u = union_of(a, b);
    auto [pos, neg] = split_signs(u);
    EXPECT_EQ(pos.size(), u.p());
    EXPECT_EQ(neg.size(), u.q());
    EXPECT_EQ(union_of(pos, neg), u);
  }
}

TEST(SpectrumAlgebra, UnionAssociativity) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto mk = [&] {
      std::vector<Rational> e;
      const int n = static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) e.push_back(random_rational(rng, 5, 2));
      return SpectrumList(e);
    };
    SpectrumList a = mk(), b = mk(), c = mk();
    EXPECT_EQ(union_of(union_of(a, b), c), union_of(a, union_of(b, c)));
  }
}

TEST(Spectrum, ParseAndPrintRoundTrip) {
  EXPECT_EQ(S("13/2, 1/2, -7").str(), "13/2,1/2,-7");
  EXPECT_EQ(S("-3,6").str(), "6,-3");  // constructor sorts
  EXPECT_THROW(SpectrumList::parse("1,,2"), Error);
  EXPECT_THROW(SpectrumList::parse(""), Error);
}

}  // namespace
}  // namespace qniep
