#include <gtest/gtest.h>

#include "qniep/errors.hpp"
#include "qniep/survey.hpp"
#include "test_util.hpp"

namespace qniep {
namespace {

using testing::S;

TEST(SamplePiQ, EverySampleIsInContext) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.samples = 500;
  cfg.seed = 42;
  cfg.max_abs = 10;
  cfg.denominator = 1;
  for (const SpectrumList& s : sample_pi_q(cfg)) {
    ASSERT_EQ(s.size(), 4);
    ASSERT_TRUE(s.in_pi()) << s.str();
  }
}

TEST(SamplePiQ, SingletonsAreNonnegative) {
  SampleConfig cfg;
  cfg.n = 1;
  cfg.samples = 200;
  cfg.seed = 7;
  for (const SpectrumList& s : sample_pi_q(cfg)) {
    ASSERT_TRUE(s[0].is_nonnegative());
    ASSERT_TRUE(s[0] <= Rational(cfg.max_abs));
  }
}

TEST(SamplePiQ, DeterministicAcrossRuns) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.samples = 100;
  cfg.seed = 42;
  cfg.max_abs = 10;
  EXPECT_EQ(sample_pi_q(cfg), sample_pi_q(cfg));
  cfg.seed = 43;
  EXPECT_NE(sample_pi_q(cfg), sample_pi_q(SampleConfig{4, 100, 42, 10, 1, 10000}));
}

TEST(SamplePiQ, DenominatorScalesEntries) {
  SampleConfig cfg;
  cfg.n = 3;
  cfg.samples = 50;
  cfg.seed = 11;
  cfg.max_abs = 9;
  cfg.denominator = 4;
  for (const SpectrumList& s : sample_pi_q(cfg)) {
    for (const Rational& e : s.entries()) {
      ASSERT_TRUE(e.denominator() == 1 || e.denominator() == 2 || e.denominator() == 4)
          << e.str();
    }
  }
}

TEST(Audit, SmallRunHasNoViolations) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.samples = 300;
  cfg.seed = 42;
  cfg.max_abs = 10;
  AuditReport report = audit_inclusions(cfg);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_EQ(report.counts.at("su") >= 0, true);
  // every sampled member count is bounded by the sample size
  for (const auto& [name, count] : report.counts) {
    EXPECT_LE(count, cfg.samples) << name;
    EXPECT_GE(count, 0) << name;
  }
}

TEST(Audit, ProbeRowsReportTheKnownFixtures) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.samples = 10;
  cfg.seed = 1;
  AuditReport report = audit_inclusions(cfg, {S("4,2,-3,-3"), S("3,3,-2,-2,-2")});
  ASSERT_EQ(report.probes.size(), 2u);

  const auto& fixture = report.probes[0].verdicts;
  EXPECT_EQ(fixture.at("sp"), "non-member");
  EXPECT_EQ(fixture.at("ke"), "member");
  EXPECT_EQ(fixture.at("bo"), "member");
  EXPECT_EQ(fixture.at("bms"), "found");
  EXPECT_EQ(fixture.at("pe2plus"), "member");

  const auto& no_instance = report.probes[1].verdicts;
  for (const char* name : {"su", "ci", "ke", "sa", "fi", "so1", "sp", "pe1", "bo"}) {
    EXPECT_EQ(no_instance.at(name), "non-member") << name;
  }
  EXPECT_EQ(no_instance.at("bms"), "not-found");
  EXPECT_EQ(no_instance.at("pe2plus"), "non-member");
  EXPECT_TRUE(report.violations.empty());
}

TEST(Audit, ExhibitsABoNotSpSeparation) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.samples = 10;
  cfg.seed = 1;
  AuditReport report = audit_inclusions(cfg, {S("4,2,-3,-3")});
  bool found = false;
  for (const PairExample& e : report.separating) {
    if (e.inner == "sp" && e.outer == "bo") found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Audit, DeterministicReports) {
  SampleConfig cfg;
  cfg.n = 5;
  cfg.samples = 120;
  cfg.seed = 42;
  AuditReport a = audit_inclusions(cfg);
  AuditReport b = audit_inclusions(cfg);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.violations.size(), b.violations.size());
  ASSERT_EQ(a.separating.size(), b.separating.size());
  for (std::size_t i = 0; i < a.separating.size(); ++i) {
    EXPECT_EQ(a.separating[i].input, b.separating[i].input);
  }
  EXPECT_EQ(audit_summary_table(a), audit_summary_table(b));
}

TEST(SamplePiQ, BadConfigThrows) {
  SampleConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(sample_pi_q(cfg), Error);
}

TEST(SamplePiQ, RedrawCapIsAnError) {
  SampleConfig cfg;
  cfg.n = 4;
  cfg.max_redraws = 0;
  try {
    sample_pi_q(cfg);
    FAIL() << "expected kRejectionStall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRejectionStall);
  }
}

}  // namespace
}  // namespace qniep
