#include <gtest/gtest.h>

#include <random>

#include "qniep/crealizable.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/errors.hpp"
#include "test_util.hpp"

namespace qniep {
namespace {

using testing::R;
using testing::S;

Move mv_union(int a, int b) { return Move{MoveKind::kUnion, a, b, Rational(0), 0, -1}; }
Move mv_shift(int list, const char* eps) {
  return Move{MoveKind::kShiftTop, list, 0, R(eps), 0, -1};
}
Move mv_guo(int list, const char* eps, int pos, int sign) {
  return Move{MoveKind::kGuo, list, 0, R(eps), pos, sign};
}

// The seven-step derivation of (4,2,-3,-3) from four zeros, expressed in
// this machine's indexing (a union removes both operands and appends the
// merged list).
MoveSequence paper_sequence() {
  MoveSequence seq;
  seq.start_count = 4;
  seq.moves = {
      mv_union(1, 2),            // (0),(0),(0,0)
      mv_guo(3, "3", 2, -1),     // (0),(0),(3,-3)
      mv_union(1, 2),            // (3,-3),(0,0)
      mv_guo(2, "2", 2, -1),     // (3,-3),(2,-2)
      mv_union(1, 2),            // (3,2,-2,-3)
      mv_guo(1, "1", 3, -1),     // (4,2,-3,-3)
  };
  return seq;
}

TEST(Replay, PaperSequence) {
  EXPECT_EQ(replay(paper_sequence()), S("4,2,-3,-3"));
}

TEST(Replay, TrivialAndSmallFixtures) {
  MoveSequence empty;
  empty.start_count = 1;
  EXPECT_EQ(replay(empty), S("0"));

  // Three zeros: union two, perturb the pair into (3,-3), union the third.
  MoveSequence seq;
  seq.start_count = 3;
  seq.moves = {mv_union(1, 2), mv_guo(2, "3", 2, -1), mv_union(1, 2)};
  EXPECT_EQ(replay(seq), S("3,0,-3"));
}

TEST(Replay, BadMovesThrow) {
  auto expect_bad = [](MoveSequence seq) {
    try {
      replay(seq);
      FAIL() << "expected kBadMove";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadMove);
    }
  };

  MoveSequence out_of_range;
  out_of_range.start_count = 2;
  out_of_range.moves = {mv_union(1, 3)};
  expect_bad(out_of_range);

  MoveSequence self_union;
  self_union.start_count = 2;
  self_union.moves = {mv_union(1, 1)};
  expect_bad(self_union);

  MoveSequence nonpositive_eps;
  nonpositive_eps.start_count = 1;
  nonpositive_eps.moves = {mv_shift(1, "0")};
  expect_bad(nonpositive_eps);

  MoveSequence guo_on_top;
  guo_on_top.start_count = 2;
  guo_on_top.moves = {mv_union(1, 2), mv_guo(1, "1", 1, -1)};
  expect_bad(guo_on_top);

  MoveSequence guo_past_end;
  guo_past_end.start_count = 1;
  guo_past_end.moves = {mv_guo(1, "1", 2, -1)};
  expect_bad(guo_past_end);

  MoveSequence unfinished;
  unfinished.start_count = 2;
  expect_bad(unfinished);
}

TEST(VerifyBms, PaperSequenceAndTruncation) {
  EXPECT_TRUE(verify_bms(S("4,2,-3,-3"), paper_sequence()));

  MoveSequence truncated = paper_sequence();
  truncated.moves.pop_back();
  EXPECT_FALSE(verify_bms(S("4,2,-3,-3"), truncated));
  EXPECT_TRUE(verify_bms(S("3,2,-2,-3"), truncated));

  MoveSequence empty;
  empty.start_count = 1;
  EXPECT_TRUE(verify_bms(S("0"), empty));

  // replay failures are plain false
  MoveSequence broken;
  broken.start_count = 2;
  broken.moves = {mv_union(1, 3)};
  EXPECT_FALSE(verify_bms(S("0,0"), broken));
}

TEST(CompileSpToBms, SingleBlock) {
  MoveSequence seq = compile_sp_to_bms(SpCertificate{{S("3,-3")}});
  EXPECT_EQ(seq.start_count, 2);
  ASSERT_EQ(seq.moves.size(), 2u);
  EXPECT_EQ(seq.moves[0].kind, MoveKind::kUnion);
  EXPECT_EQ(seq.moves[1].kind, MoveKind::kGuo);
  EXPECT_EQ(seq.moves[1].epsilon, R("3"));
  EXPECT_EQ(seq.moves[1].position, 2);
  EXPECT_EQ(replay(seq), S("3,-3"));
}

TEST(CompileSpToBms, HeadBuiltFromTailThenShiftOmitted) {
  // (6,-1,-2,-3): head accumulates 1+2+3 = 6, so no shift is needed.
  MoveSequence seq = compile_sp_to_bms(SpCertificate{{S("6,-1,-2,-3")}});
  for (const Move& m : seq.moves) EXPECT_NE(m.kind, MoveKind::kShiftTop);
  EXPECT_EQ(replay(seq), S("6,-1,-2,-3"));

  // (5,-1,-2): slack 2, one shift expected.
  MoveSequence with_shift = compile_sp_to_bms(SpCertificate{{S("5,-1,-2")}});
  int shifts = 0;
  for (const Move& m : with_shift.moves) shifts += m.kind == MoveKind::kShiftTop;
  EXPECT_EQ(shifts, 1);
  EXPECT_EQ(replay(with_shift), S("5,-1,-2"));
}

TEST(CompileSpToBms, ReductionCertificateEndToEnd) {
  SpectrumList lambda = S("13,13,-1,-2,-4,-4,-6,-9");
  auto cert = check_sp(lambda);
  ASSERT_TRUE(cert.has_value());
  MoveSequence seq = compile_sp_to_bms(*cert);
  EXPECT_EQ(seq.start_count, 8);
  EXPECT_TRUE(verify_bms(lambda, seq));
}

TEST(CompileSpToBms, RejectsBadCertificates) {
  try {
    compile_sp_to_bms(SpCertificate{{S("2,-3")}});  // negative sum
    FAIL() << "expected kInvalidCertificate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCertificate);
  }
  EXPECT_THROW(compile_sp_to_bms(SpCertificate{}), Error);
}

TEST(SearchBms, FindsPaperYesInstance) {
  BmsSearchResult result = search_bms(S("4,2,-3,-3"));
  ASSERT_TRUE(result.sequence.has_value());
  EXPECT_TRUE(verify_bms(S("4,2,-3,-3"), *result.sequence));
}

TEST(SearchBms, AllZerosIsTwoUnions) {
  BmsSearchResult result = search_bms(S("0,0,0"));
  ASSERT_TRUE(result.sequence.has_value());
  EXPECT_EQ(result.sequence->start_count, 3);
  ASSERT_EQ(result.sequence->moves.size(), 2u);
  for (const Move& m : result.sequence->moves) EXPECT_EQ(m.kind, MoveKind::kUnion);
  EXPECT_TRUE(verify_bms(S("0,0,0"), *result.sequence));
}

TEST(SearchBms, NonRealizableListReportsNotFound) {
  BmsSearchResult result = search_bms(S("3,3,-2,-2,-2"));
  EXPECT_FALSE(result.sequence.has_value());
  EXPECT_TRUE(result.space_exhausted);  // candidate space closes quickly here
}

TEST(SearchBms, BudgetExhaustionIsReported) {
  // Not SP, so the backward search runs and hits the two-node budget.
  BmsSearchResult result = search_bms(S("7,1,-2,-3,-3"), 2);
  EXPECT_FALSE(result.sequence.has_value());
  EXPECT_FALSE(result.space_exhausted);
  EXPECT_EQ(result.budget, 2u);
  EXPECT_EQ(result.nodes, 2u);
}

TEST(SearchBms, ContextGate) {
  EXPECT_THROW(search_bms(S("1,-5")), Error);
}

TEST(SearchBms, FoundSequencesAlwaysVerify) {
  std::mt19937_64 rng(307);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    SpectrumList s = testing::random_pi_list(rng, n, 6, 2);
    BmsSearchResult result = search_bms(s, 4000);
    if (result.sequence) {
      ++found;
      ASSERT_TRUE(verify_bms(s, *result.sequence)) << s.str();
    }
  }
  EXPECT_GT(found, 50);
}

TEST(CompileSpToBms, RandomCertificatesCompileAndVerify) {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 500; ++trial) {
    const int blocks = 1 + static_cast<int>(rng() % 3);
    SpCertificate cert;
    SpectrumList lambda;
    for (int b = 0; b < blocks; ++b) {
      SpectrumList block = testing::random_su_list(rng, 4, 9, 3);
      cert.blocks.push_back(block);
      lambda = union_of(lambda, block);
    }
    MoveSequence seq = compile_sp_to_bms(cert);
    ASSERT_TRUE(verify_bms(lambda, seq)) << lambda.str();
  }
}

}  // namespace
}  // namespace qniep
