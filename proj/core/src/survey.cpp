#include "qniep/survey.hpp"

#include <random>
#include <sstream>

#include "qniep/criteria_linear.hpp"
#include "qniep/diag_spectrum.hpp"
#include "qniep/errors.hpp"

namespace qniep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, range). mt19937_64 output is pinned by the
// standard; the rejection step keeps the draw implementation-independent
// (std::uniform_int_distribution is not portable across libraries).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = range * (std::uint64_t(-1) / range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

struct SampleVerdicts {
  bool su, ci, ke, sa, fi, so1;
  bool sp, pe1;
  bool bo = false;
  bool bo_skipped = false;
  bool bms_found = false;
  std::optional<SpCertificate> sp_cert;
  bool sp_compiled_ok = false;
  Pe2State pe2 = Pe2State::kUnknown;
};

SampleVerdicts evaluate(const SpectrumList& s, const AuditOptions& options) {
  SampleVerdicts v{};
  v.su = check_su(s).member;
  v.ci = check_ci(s).member;
  v.ke = check_ke(s).member;
  v.sa = check_sa(s).member;
  v.fi = check_fi(s).member;
  v.so1 = check_so1(s).member;
  v.sp_cert = check_sp(s, options.limits);
  v.sp = v.sp_cert.has_value();
  v.pe1 = check_pe1(s, options.limits).has_value();
  try {
    v.bo = check_bo(s, options.limits).has_value();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSearchTooLarge) throw;
    v.bo_skipped = true;
  }
  if (v.sp) {
    v.sp_compiled_ok = verify_bms(s, compile_sp_to_bms(*v.sp_cert));
    v.bms_found = true;  // the compile route is itself a found certificate
  } else {
    v.bms_found = search_bms(s, options.bms_budget, options.limits).sequence.has_value();
  }
  v.pe2 = check_pe2plus(s).state;
  return v;
}

const char* yn(bool member) { return member ? "member" : "non-member"; }

}  // namespace

std::vector<SpectrumList> sample_pi_q(const SampleConfig& cfg) {
  if (cfg.n <= 0 || cfg.samples <= 0 || cfg.max_abs <= 0 || cfg.denominator <= 0) {
    throw Error(ErrorCode::kParseError, "sample config requires positive n, samples, max_abs, den");
  }
  std::vector<SpectrumList> out;
  out.reserve(static_cast<std::size_t>(cfg.samples));
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(cfg.max_abs) + 1;
  for (int index = 0; index < cfg.samples; ++index) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(index))));
    bool accepted = false;
    for (int attempt = 0; attempt < cfg.max_redraws; ++attempt) {
      std::vector<Rational> entries;
      entries.reserve(static_cast<std::size_t>(cfg.n));
      for (int i = 0; i < cfg.n; ++i) {
        const long numerator = static_cast<long>(draw_below(rng, range)) - cfg.max_abs;
        entries.emplace_back(numerator, cfg.denominator);
      }
      SpectrumList candidate(std::move(entries));
      if (candidate.in_pi()) {
        out.push_back(std::move(candidate));
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw Error(ErrorCode::kRejectionStall,
                  "sampler exceeded " + std::to_string(cfg.max_redraws) +
                      " redraws at index " + std::to_string(index));
    }
  }
  return out;
}

AuditReport audit_inclusions(const SampleConfig& cfg, const std::vector<SpectrumList>& probes,
                             const AuditOptions& options) {
  AuditReport report;
  report.config = cfg;
  for (const char* key : {"su", "ci", "ke", "sa", "fi", "so1", "sp", "pe1", "bo", "bms_found",
                          "pe2_member", "pe2_nonmember", "pe2_unknown"}) {
    report.counts[key] = 0;
  }

  auto have_separating = [&](const char* inner, const char* outer) {
    for (const PairExample& e : report.separating) {
      if (e.inner == inner && e.outer == outer) return true;
    }
    return false;
  };
  auto record = [&](const SpectrumList& s, bool inner, bool outer, const char* inner_name,
                    const char* outer_name) {
    if (inner && !outer) report.violations.push_back({inner_name, outer_name, s});
    if (!inner && outer && !have_separating(inner_name, outer_name)) {
      report.separating.push_back({inner_name, outer_name, s});
    }
  };

  auto audit_one = [&](const SpectrumList& s) {
    SampleVerdicts v = evaluate(s, options);
    report.counts["su"] += v.su;
    report.counts["ci"] += v.ci;
    report.counts["ke"] += v.ke;
    report.counts["sa"] += v.sa;
    report.counts["fi"] += v.fi;
    report.counts["so1"] += v.so1;
    report.counts["sp"] += v.sp;
    report.counts["pe1"] += v.pe1;
    report.counts["bms_found"] += v.bms_found;
    if (v.bo_skipped) ++report.skipped;
    else report.counts["bo"] += v.bo;
    switch (v.pe2) {
      case Pe2State::kMember: ++report.counts["pe2_member"]; break;
      case Pe2State::kNonMember: ++report.counts["pe2_nonmember"]; break;
      case Pe2State::kUnknown: ++report.counts["pe2_unknown"]; break;
    }

    record(s, v.su, v.sp, "su", "sp");
    record(s, v.su, v.ke, "su", "ke");
    if (!v.bo_skipped) {
      record(s, v.ke, v.bo, "ke", "bo");
      record(s, v.sp, v.bo, "sp", "bo");
    }
    if (v.sp) record(s, v.sp, v.sp_compiled_ok, "sp", "bms_compiled");
    // BMS certificates imply Perfect-2+ membership; a decided NonMember
    // alongside a found sequence is a bug. Unknown verdicts stay out.
    if (v.bms_found && v.pe2 == Pe2State::kNonMember) {
      report.violations.push_back({"bms_found", "pe2plus", s});
    }
    return v;
  };

  for (const SpectrumList& s : sample_pi_q(cfg)) audit_one(s);
  for (const SpectrumList& probe : probes) {
    SampleVerdicts v = audit_one(probe);
    ProbeRow row;
    row.input = probe;
    row.verdicts["su"] = yn(v.su);
    row.verdicts["ci"] = yn(v.ci);
    row.verdicts["ke"] = yn(v.ke);
    row.verdicts["sa"] = yn(v.sa);
    row.verdicts["fi"] = yn(v.fi);
    row.verdicts["so1"] = yn(v.so1);
    row.verdicts["sp"] = yn(v.sp);
    row.verdicts["pe1"] = yn(v.pe1);
    row.verdicts["bo"] = v.bo_skipped ? "skipped" : yn(v.bo);
    row.verdicts["bms"] = v.bms_found ? "found" : "not-found";
    row.verdicts["pe2plus"] = v.pe2 == Pe2State::kMember
                                  ? "member"
                                  : (v.pe2 == Pe2State::kNonMember ? "non-member" : "unknown");
    report.probes.push_back(std::move(row));
  }
  return report;
}

std::string audit_summary_table(const AuditReport& report) {
  std::ostringstream os;
  os << "audit: n=" << report.config.n << " samples=" << report.config.samples
     << " seed=" << report.config.seed << " max_abs=" << report.config.max_abs
     << " den=" << report.config.denominator << "\n";
  os << "criterion    members\n";
  for (const auto& [name, count] : report.counts) {
    os << name;
    for (std::size_t pad = name.size(); pad < 13; ++pad) os << ' ';
    os << count << "\n";
  }
  os << "skipped      " << report.skipped << "\n";
  os << "violations   " << report.violations.size() << "\n";
  for (const PairExample& v : report.violations) {
    os << "  VIOLATION " << v.inner << " accepted but " << v.outer << " rejected: " << v.input.str()
       << "\n";
  }
  for (const PairExample& e : report.separating) {
    os << "separating " << e.inner << " vs " << e.outer << ": " << e.input.str() << "\n";
  }
  for (const ProbeRow& probe : report.probes) {
    os << "probe " << probe.input.str() << ":";
    for (const auto& [name, verdict] : probe.verdicts) os << " " << name << "=" << verdict;
    os << "\n";
  }
  return os.str();
}

}  // namespace qniep
