#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qniep/crealizable.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/spectrum.hpp"

namespace qniep {

/// Configuration of the random-instance sampler: entries are integers drawn
/// uniformly from [-max_abs, max_abs] divided by `denominator`, redrawn until
/// the list passes the Pi_Q gate. Each sample index gets its own RNG stream
/// derived from (seed, index), so the sequence is reproducible regardless of
/// evaluation order.
struct SampleConfig {
  int n = 4;
  int samples = 1000;
  std::uint64_t seed = 42;
  long max_abs = 10;
  long denominator = 1;
  int max_redraws = 10000;  // per sample; past it, Error(kRejectionStall)
};

std::vector<SpectrumList> sample_pi_q(const SampleConfig& cfg);

/// One audited inclusion event: for violations the inner criterion accepted
/// while the outer rejected; for separating examples the inner rejected
/// while the outer accepted.
struct PairExample {
  std::string inner;
  std::string outer;
  SpectrumList input;
};

/// How one list fares under every checker; verdicts are the CLI vocabulary
/// ("member", "non-member", "found", "not-found", "unknown", "skipped").
struct ProbeRow {
  SpectrumList input;
  std::map<std::string, std::string> verdicts;
};

struct AuditReport {
  SampleConfig config;
  std::map<std::string, long> counts;
  std::vector<PairExample> violations;   // empty on a correct build
  std::vector<PairExample> separating;   // first example found per pair
  long skipped = 0;                      // samples a bounded search gave up on
  std::vector<ProbeRow> probes;
};

struct AuditOptions {
  std::uint64_t bms_budget = 2000;
  SearchLimits limits;
};

/// Runs every decidable checker over the sampled lists (plus any probes) and
/// records memberships, violations of the asserted inclusion chain, and
/// separating examples. Tri-state checkers contribute only their decided
/// verdicts.
AuditReport audit_inclusions(const SampleConfig& cfg,
                             const std::vector<SpectrumList>& probes = {},
                             const AuditOptions& options = {});

std::string audit_summary_table(const AuditReport& report);

}  // namespace qniep
