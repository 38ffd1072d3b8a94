#include <gtest/gtest.h>

#include <random>

#include "qniep/crealizable.hpp"
#include "qniep/diag_spectrum.hpp"
#include "qniep/errors.hpp"
#include "test_util.hpp"

namespace qniep {
namespace {

using testing::R;
using testing::S;

TEST(DecideDiagSpecK2, HandCheckedWitnesses) {
  // d=(3,2), alpha=(4,1): witness [[3,1],[2,2]], char poly x^2 - 5x + 4.
  auto w1 = decide_diagspec_k2({{R("3"), R("2")}, S("4,1")});
  ASSERT_TRUE(w1.has_value());
  EXPECT_EQ(*w1, RationalMatrix::from_rows({{R("3"), R("1")}, {R("2"), R("2")}}));
  EXPECT_EQ(char_poly(*w1), poly_from_roots({R("4"), R("1")}));

  // d=(1,1), alpha=(3,-1): off-diagonal product 1 - (-3) = 4.
  auto w2 = decide_diagspec_k2({{R("1"), R("1")}, S("3,-1")});
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ(*w2, RationalMatrix::from_rows({{R("1"), R("1")}, {R("4"), R("1")}}));
  EXPECT_EQ(char_poly(*w2), poly_from_roots({R("3"), R("-1")}));

  // d=(0,4), alpha=(3,1): product 3 > 0 = d1*d2, infeasible.
  EXPECT_FALSE(decide_diagspec_k2({{R("0"), R("4")}, S("3,1")}).has_value());
}

TEST(DecideDiagSpecK2, K1AndErrors) {
  auto w = decide_diagspec_k2({{R("6")}, S("6")});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, RationalMatrix(1, {R("6")}));
  EXPECT_FALSE(decide_diagspec_k2({{R("5")}, S("6")}).has_value());

  try {
    decide_diagspec_k2({{R("1"), R("1"), R("1")}, S("3,1,1")});
    FAIL() << "expected kUnsupportedK";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedK);
  }
  EXPECT_THROW(decide_diagspec_k2({{R("-1"), R("1")}, S("1,-1")}), std::invalid_argument);
  EXPECT_THROW(decide_diagspec_k2({{R("1")}, S("1,1")}), std::invalid_argument);
}

TEST(CheckPe2Plus, SuleimanovaListsAreMembers) {
  Pe2Verdict v = check_pe2plus(S("6,-3"));
  ASSERT_EQ(v.state, Pe2State::kMember);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate->rhos, (std::vector<Rational>{R("6")}));
  ASSERT_TRUE(v.certificate->witness_matrix.has_value());
  EXPECT_EQ(*v.certificate->witness_matrix, RationalMatrix(1, {R("6")}));
  EXPECT_TRUE(verify_pe2plus(S("6,-3"), *v.certificate));
}

TEST(CheckPe2Plus, TwoHeadFixture) {
  Pe2Verdict v = check_pe2plus(S("4,2,-3,-3"));
  ASSERT_EQ(v.state, Pe2State::kMember);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate->rhos, (std::vector<Rational>{R("3"), R("3")}));
  ASSERT_TRUE(v.certificate->witness_matrix.has_value());
  EXPECT_EQ(*v.certificate->witness_matrix,
            RationalMatrix::from_rows({{R("3"), R("1")}, {R("1"), R("3")}}));
  EXPECT_TRUE(verify_pe2plus(S("4,2,-3,-3"), *v.certificate));
}

TEST(CheckPe2Plus, ExhaustedPartitionsMeanNonMember) {
  EXPECT_EQ(check_pe2plus(S("3,3,-2,-2,-2")).state, Pe2State::kNonMember);
}

TEST(CheckPe2Plus, ThreeHeadsAreUnknownWithoutAHint) {
  SpectrumList s = S("5,1,1,-3,-4");
  ASSERT_EQ(s.p(), 3);
  EXPECT_EQ(check_pe2plus(s).state, Pe2State::kUnknown);
}

TEST(CheckPe2Plus, VerifyingHintUpgradesUnknownToMember) {
  // (3,2,1) with all-empty tails realizes via diag(3,2,1) itself.
  SpectrumList s = S("3,2,1");
  Pe2Certificate hint;
  hint.tails = {SpectrumList(), SpectrumList(), SpectrumList()};
  hint.alphas = {R("3"), R("2"), R("1")};
  hint.rhos = {R("3"), R("2"), R("1")};
  hint.witness_matrix = RationalMatrix::from_rows({{R("3"), R("0"), R("0")},
                                                   {R("0"), R("2"), R("0")},
                                                   {R("0"), R("0"), R("1")}});
  Pe2Verdict v = check_pe2plus(s, hint);
  EXPECT_EQ(v.state, Pe2State::kMember);
}

TEST(CheckPe2Plus, ContextGate) {
  EXPECT_THROW(check_pe2plus(S("1,-5")), Error);
}

TEST(VerifyPe2Plus, AcceptsAndRejects) {
  Pe2Certificate cert;
  cert.tails = {S("-3"), S("-3")};
  cert.alphas = {R("4"), R("2")};
  cert.rhos = {R("3"), R("3")};
  cert.witness_matrix = RationalMatrix::from_rows({{R("3"), R("1")}, {R("1"), R("3")}});
  EXPECT_TRUE(verify_pe2plus(S("4,2,-3,-3"), cert));

  // wrong witness: char poly x^2 - 6x + 7 != (x-4)(x-2)
  Pe2Certificate wrong = cert;
  wrong.witness_matrix = RationalMatrix::from_rows({{R("3"), R("1")}, {R("2"), R("3")}});
  EXPECT_FALSE(verify_pe2plus(S("4,2,-3,-3"), wrong));

  // rho below the tail bound: (2, -3) is not Suleimanova-with-nonnegative-sum
  Pe2Certificate low = cert;
  low.rhos = {R("2"), R("4")};
  low.witness_matrix = RationalMatrix::from_rows({{R("2"), R("1")}, {R("0"), R("4")}});
  EXPECT_FALSE(verify_pe2plus(S("4,2,-3,-3"), low));

  Pe2Certificate trivial;
  trivial.tails = {S("-3")};
  trivial.alphas = {R("6")};
  trivial.rhos = {R("6")};
  trivial.witness_matrix = RationalMatrix(1, {R("6")});
  EXPECT_TRUE(verify_pe2plus(S("6,-3"), trivial));

  Pe2Certificate witnessless = cert;
  witnessless.witness_matrix.reset();
  try {
    verify_pe2plus(S("4,2,-3,-3"), witnessless);
    FAIL() << "expected kMissingWitness";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingWitness);
  }
}

TEST(Pe2Plus, MembersAlwaysVerify) {
  std::mt19937_64 rng(401);
  int members = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    SpectrumList s = testing::random_pi_list(rng, n, 8, 2);
    Pe2Verdict v = check_pe2plus(s);
    if (v.state == Pe2State::kMember) {
      ++members;
      ASSERT_TRUE(v.certificate.has_value());
      ASSERT_TRUE(verify_pe2plus(s, *v.certificate)) << s.str();
    }
  }
  EXPECT_GT(members, 100);
}

TEST(Pe2Plus, NeverRejectsABmsCertificateHolder) {
  std::mt19937_64 rng(409);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    SpectrumList s = testing::random_pi_list(rng, n, 6, 2);
    BmsSearchResult bms = search_bms(s, 2000);
    if (!bms.sequence) continue;
    EXPECT_NE(check_pe2plus(s).state, Pe2State::kNonMember) << s.str();
  }
}

}  // namespace
}  // namespace qniep
