#include <gtest/gtest.h>

#include <random>

#include "qniep/criteria_linear.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/errors.hpp"
#include "test_util.hpp"

namespace qniep {
namespace {

using testing::R;
using testing::S;
using testing::naive_pe1;
using testing::naive_sp;
using testing::random_pi_list;

TEST(CheckSp, PaperNoInstance) {
  EXPECT_FALSE(check_sp(S("4,2,-3,-3")).has_value());
}

TEST(CheckSp, ReductionImageSplitsAsExpected) {
  auto cert = check_sp(S("13,13,-1,-2,-4,-4,-6,-9"));
  ASSERT_TRUE(cert.has_value());
  ASSERT_EQ(cert->blocks.size(), 2u);
  EXPECT_EQ(cert->blocks[0], S("13,-4,-9"));
  EXPECT_EQ(cert->blocks[1], S("13,-1,-2,-4,-6"));
  EXPECT_TRUE(verify_sp(S("13,13,-1,-2,-4,-4,-6,-9"), *cert));
}

TEST(CheckSp, SingletonHeadsAreValidBlocks) {
  auto cert = check_sp(S("6,5,-1,-2,-3"));
  ASSERT_TRUE(cert.has_value());
  ASSERT_EQ(cert->blocks.size(), 2u);
  EXPECT_EQ(cert->blocks[0], S("6,-1,-2,-3"));
  EXPECT_EQ(cert->blocks[1], S("5"));
}

TEST(CheckSp, ContextGate) {
  EXPECT_THROW(check_sp(S("1,-5")), Error);
}

TEST(VerifySp, AcceptsAndRejects) {
  SpCertificate good{{S("13,-4,-9"), S("13,-1,-2,-4,-6")}};
  EXPECT_TRUE(verify_sp(S("13,13,-1,-2,-4,-4,-6,-9"), good));

  // block (2,-3) has negative sum
  SpCertificate bad{{S("4,-3"), S("2,-3")}};
  EXPECT_FALSE(verify_sp(S("4,2,-3,-3"), bad));

  SpCertificate zero{{S("0")}};
  EXPECT_TRUE(verify_sp(S("0"), zero));

  // union mismatch
  EXPECT_FALSE(verify_sp(S("4,2,-3,-3"), good));
  // (0,0) is not a Suleimanova block (the chain is strict)
  SpCertificate zz{{S("0,0")}};
  EXPECT_FALSE(verify_sp(S("0,0"), zz));
  SpCertificate zz2{{S("0"), S("0")}};
  EXPECT_TRUE(verify_sp(S("0,0"), zz2));
}

TEST(CheckPe1, Fixtures) {
  auto cert = check_pe1(S("4,2,-3,-3"));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->alpha, R("4"));
  EXPECT_EQ(cert->beta, R("-3"));
  ASSERT_EQ(cert->blocks.size(), 1u);
  EXPECT_EQ(cert->blocks[0], S("2,-3"));
  EXPECT_TRUE(verify_pe1(S("4,2,-3,-3"), *cert));

  EXPECT_FALSE(check_pe1(S("3,3,-2,-2,-2")).has_value());

  auto reduction = check_pe1(S("13,13,13,-1,-2,-4,-4,-6,-9,-13"));
  ASSERT_TRUE(reduction.has_value());
  EXPECT_EQ(reduction->alpha, R("13"));
  EXPECT_EQ(reduction->beta, R("-13"));
  EXPECT_TRUE(verify_pe1(S("13,13,13,-1,-2,-4,-4,-6,-9,-13"), *reduction));
}

TEST(VerifyPe1, AcceptsAndRejects) {
  // alpha must be rho(Lambda)
  Pe1Certificate wrong_alpha{R("2"), R("-3"), {S("4,-3")}};
  EXPECT_FALSE(verify_pe1(S("4,2,-3,-3"), wrong_alpha));

  // beta <= 0 holds with equality
  Pe1Certificate zeros{R("0"), R("0"), {}};
  EXPECT_TRUE(verify_pe1(S("0,0"), zeros));

  // head + beta must be nonpositive
  Pe1Certificate bad_head{R("4"), R("-1"), {S("2,-3"), S("-3")}};
  EXPECT_FALSE(verify_pe1(S("4,2,-3,-3,-1"), bad_head));

  // blocks need a nonnegative head
  Pe1Certificate headless{R("4"), R("-3"), {S("-3"), S("2")}};
  EXPECT_FALSE(verify_pe1(S("4,2,-3,-3"), headless));
}

TEST(CheckBo, Fixtures) {
  auto cert = check_bo(S("4,2,-3,-3"));
  ASSERT_TRUE(cert.has_value());
  ASSERT_EQ(cert->neg_groups.size(), 2u);  // singleton groups: the list itself is Kellogg
  EXPECT_EQ(cert->neg_groups[0], S("-3"));
  EXPECT_EQ(cert->neg_groups[1], S("-3"));
  EXPECT_TRUE(verify_bo(S("4,2,-3,-3"), *cert));

  EXPECT_FALSE(check_bo(S("3,3,-2,-2,-2")).has_value());
}

TEST(CheckBo, KelloggMembersGetSingletonCertificates) {
  for (const char* text : {"5,-1,-2", "6,-3", "9,5,3,3,3,-1,-1,-4,-7"}) {
    SpectrumList s = S(text);
    if (!check_ke(s).member) continue;
    auto cert = check_bo(s);
    ASSERT_TRUE(cert.has_value()) << text;
    EXPECT_TRUE(verify_bo(s, *cert)) << text;
  }
}

TEST(CheckBo, SearchBoundIsAnError) {
  std::vector<Rational> entries{Rational(200)};
  for (int i = 0; i < 15; ++i) entries.push_back(Rational(-1));
  SpectrumList s(entries);
  SearchLimits limits;
  limits.bo_max_negatives = 14;
  try {
    check_bo(s, limits);
    FAIL() << "expected kSearchTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchTooLarge);
  }
}

TEST(VerifyBo, RejectsBadGroupings) {
  // all three -2 in one group: merged (3,3,-6) has rho != lambda_1
  BoCertificate bad{{S("-2,-2,-2")}};
  EXPECT_FALSE(verify_bo(S("3,3,-2,-2,-2"), bad));

  BoCertificate good{{S("-3")}};
  EXPECT_TRUE(verify_bo(S("6,-3"), good));

  // groups must cover Lambda^- exactly
  BoCertificate short_cover{{S("-3")}};
  EXPECT_FALSE(verify_bo(S("4,2,-3,-3"), short_cover));
  // nonnegative entries are not allowed inside groups
  BoCertificate nonneg{{S("2,-3"), S("-3")}};
  EXPECT_FALSE(verify_bo(S("4,2,-3,-3"), nonneg));
}

TEST(PartitionCriteria, SoundnessOnRandomInstances) {
  std::mt19937_64 rng(211);
  int sp_hits = 0, pe1_hits = 0, bo_hits = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    SpectrumList s = random_pi_list(rng, n, 9, 2);
    if (auto cert = check_sp(s)) {
      ++sp_hits;
      ASSERT_TRUE(verify_sp(s, *cert)) << s.str();
    }
    if (auto cert = check_pe1(s)) {
      ++pe1_hits;
      ASSERT_TRUE(verify_pe1(s, *cert)) << s.str();
    }
    if (auto cert = check_bo(s)) {
      ++bo_hits;
      ASSERT_TRUE(verify_bo(s, *cert)) << s.str();
    }
  }
  EXPECT_GT(sp_hits, 100);
  EXPECT_GT(pe1_hits, 100);
  EXPECT_GT(bo_hits, 100);
}

TEST(PartitionCriteria, InclusionsOnRandomInstances) {
  std::mt19937_64 rng(223);
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    SpectrumList s = random_pi_list(rng, n, 8, 2);
    const bool sp = check_sp(s).has_value();
    const bool ke = check_ke(s).member;
    const bool bo = check_bo(s).has_value();
    if (check_su(s).member) EXPECT_TRUE(sp) << s.str();
    if (ke) EXPECT_TRUE(bo) << s.str();   // singleton partition embeds Ke in Bo
    if (sp) EXPECT_TRUE(bo) << s.str();
  }
}

TEST(PartitionCriteria, AgreesWithNaiveOracleAtSmallScale) {
  std::mt19937_64 rng(227);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    SpectrumList s = random_pi_list(rng, n, 7, 2);
    EXPECT_EQ(check_sp(s).has_value(), naive_sp(s)) << s.str();
    EXPECT_EQ(check_pe1(s).has_value(), naive_pe1(s)) << s.str();
  }
}

}  // namespace
}  // namespace qniep
