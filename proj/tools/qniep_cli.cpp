// qniep: exact decision toolkit for realizability criteria of rational
// spectra. Subcommands: check, realize, reduce, partition, verify, survey.
//
// Exit codes: 0 member/yes/verified; 1 non-member/no; 2 unknown or
// not-found-within-budget; 64 usage or parse error; 65 context error (input
// not in Pi_Q form); 70 internal self-check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qniep/crealizable.hpp"
#include "qniep/criteria_linear.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/diag_spectrum.hpp"
#include "qniep/errors.hpp"
#include "qniep/realization.hpp"
#include "qniep/reductions.hpp"
#include "qniep/serialization.hpp"
#include "qniep/spectrum.hpp"
#include "qniep/survey.hpp"

namespace {

using nlohmann::json;
using namespace qniep;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitContext = 65;
constexpr int kExitInternal = 70;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kMissingWitness:
    case ErrorCode::kRejectionStall:
      return kExitUsage;
    case ErrorCode::kNotInContext:
      return kExitContext;
    case ErrorCode::kSearchTooLarge:
      return kExitUnknown;
    default:
      return kExitInternal;
  }
}

struct OutputOptions {
  bool json_output = false;
  bool timing = false;
  int threads = 1;
};

// One response document per invocation.
struct Response {
  std::string subcommand;
  json input;  // canonical echo of the input
  std::string verdict;
  std::optional<json> certificate;
  json details = json::object();
  std::vector<std::string> notices;   // stderr in human mode, details in json
  std::vector<std::string> human;     // extra human-mode lines
};

json spectrum_json(const SpectrumList& s) {
  json arr = json::array();
  for (const Rational& e : s.entries()) arr.push_back(e.str());
  return arr;
}

json integers_json(const IntegerList& I) {
  json arr = json::array();
  for (const mpz_class& e : I.entries()) arr.push_back(e.get_str());
  return arr;
}

void emit(const Response& r, const OutputOptions& opts, double elapsed_ms) {
  if (opts.json_output) {
    json out{{"schema_version", 1},
             {"subcommand", r.subcommand},
             {"input", r.input},
             {"verdict", r.verdict}};
    if (r.certificate) out["certificate"] = *r.certificate;
    json details = r.details;
    if (!r.notices.empty()) details["notices"] = r.notices;
    if (!details.empty()) out["details"] = details;
    if (opts.timing) out["timing_ms"] = elapsed_ms;
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const std::string& notice : r.notices) std::cerr << "note: " << notice << "\n";
  if (!r.input.is_null()) {
    std::cout << "input: ";
    if (r.input.is_array()) {
      for (std::size_t i = 0; i < r.input.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << r.input[i].get<std::string>();
      }
    } else {
      std::cout << r.input.dump();
    }
    std::cout << "\n";
  }
  std::cout << "verdict: " << r.verdict << "\n";
  for (const std::string& line : r.human) std::cout << line << "\n";
  if (opts.timing) std::cout << "timing_ms: " << elapsed_ms << "\n";
}

std::vector<Rational> parse_raw_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = comma == std::string::npos ? text.substr(start)
                                                   : text.substr(start, comma - start);
    std::erase(token, ' ');
    std::erase(token, '\t');
    if (token.empty()) throw Error(ErrorCode::kParseError, "empty entry in '" + text + "'");
    out.push_back(Rational::parse(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Parses, normalizes and gates a spectrum argument; unsorted input is
// accepted with a notice, off-context input raises kNotInContext.
SpectrumList read_spectrum(const std::string& text, Response& r, bool require_context) {
  std::vector<Rational> raw = parse_raw_rationals(text);
  bool sorted = true;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i - 1] < raw[i]) {
      sorted = false;
      break;
    }
  }
  auto [s, membership] = normalize(std::move(raw));
  if (!sorted) r.notices.push_back("input was reordered into nonincreasing form");
  r.input = spectrum_json(s);
  if (require_context) detail::require_in_pi(s);
  return s;
}

json certificate_json(const CertificateDocument& doc) {
  return json::parse(to_json_text(doc));
}

std::string blocks_human(const std::vector<SpectrumList>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " | ";
    out += "(" + blocks[i].str() + ")";
  }
  return out;
}

struct CheckOptions {
  std::string criterion;
  bool all = false;
  std::uint64_t bms_budget = kDefaultBmsBudget;
  SearchLimits limits;
  std::string hint_path;
};

std::optional<Pe2Certificate> load_pe2_hint(const std::string& path, const SpectrumList& s) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read certificate file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CertificateDocument doc = parse_certificate_document(buffer.str());
  if (!doc.pe2 || doc.input != s) {
    throw Error(ErrorCode::kParseError, "hint certificate does not match the input pe2plus claim");
  }
  return doc.pe2;
}

// Runs one named criterion; fills verdict/certificate, returns the exit code.
int run_criterion(const std::string& name, const SpectrumList& s, const CheckOptions& opts,
                  Response& r) {
  auto member_exit = [&](bool member) { return member ? kExitMember : kExitNonMember; };
  if (name == "su" || name == "ci" || name == "ke" || name == "sa" || name == "fi" ||
      name == "so1") {
    LinearCriterion c = name == "su"   ? LinearCriterion::kSu
                        : name == "ci" ? LinearCriterion::kCi
                        : name == "ke" ? LinearCriterion::kKe
                        : name == "sa" ? LinearCriterion::kSa
                        : name == "fi" ? LinearCriterion::kFi
                                       : LinearCriterion::kSo1;
    LinearVerdict v = check_linear(c, s);
    r.verdict = v.member ? "member" : "non-member";
    if (v.failing_inequality) {
      r.details["failing_inequality"] = *v.failing_inequality;
      r.human.push_back("failing inequality: " + *v.failing_inequality);
    }
    return member_exit(v.member);
  }
  if (name == "sp") {
    auto cert = check_sp(s, opts.limits);
    r.verdict = cert ? "member" : "non-member";
    if (cert) {
      r.certificate = certificate_json(make_document(s, *cert));
      r.human.push_back("blocks: " + blocks_human(cert->blocks));
    }
    return member_exit(cert.has_value());
  }
  if (name == "pe1") {
    auto cert = check_pe1(s, opts.limits);
    r.verdict = cert ? "member" : "non-member";
    if (cert) {
      r.certificate = certificate_json(make_document(s, *cert));
      r.human.push_back("alpha: " + cert->alpha.str() + ", beta: " + cert->beta.str() +
                        ", blocks: " + blocks_human(cert->blocks));
    }
    return member_exit(cert.has_value());
  }
  if (name == "bo") {
    auto cert = check_bo(s, opts.limits);
    r.verdict = cert ? "member" : "non-member";
    if (cert) {
      r.certificate = certificate_json(make_document(s, *cert));
      r.human.push_back("negative groups: " + blocks_human(cert->neg_groups));
    }
    return member_exit(cert.has_value());
  }
  if (name == "bms" || name == "sou" || name == "so" || name == "se") {
    BmsSearchResult result = search_bms(s, opts.bms_budget, opts.limits);
    r.details["nodes"] = result.nodes;
    r.details["budget"] = result.budget;
    r.details["space_exhausted"] = result.space_exhausted;
    if (result.sequence) {
      r.verdict = "found";
      r.certificate = certificate_json(make_document(s, *result.sequence));
      r.human.push_back("moves: " + std::to_string(result.sequence->moves.size()) + " (nodes " +
                        std::to_string(result.nodes) + ")");
      return kExitMember;
    }
    r.verdict = "not-found";
    r.human.push_back(std::string("search gave up: ") +
                      (result.space_exhausted ? "candidate space exhausted"
                                              : "node budget exhausted") +
                      " after " + std::to_string(result.nodes) + " nodes (budget " +
                      std::to_string(result.budget) + "); this is not a non-membership proof");
    return kExitUnknown;
  }
  if (name == "pe2plus") {
    Pe2Verdict v = check_pe2plus(s, load_pe2_hint(opts.hint_path, s));
    switch (v.state) {
      case Pe2State::kMember:
        r.verdict = "member";
        if (v.certificate) r.certificate = certificate_json(make_document(s, *v.certificate));
        return kExitMember;
      case Pe2State::kNonMember:
        r.verdict = "non-member";
        return kExitNonMember;
      case Pe2State::kUnknown:
        r.verdict = "unknown";
        r.details["reason"] = "decision is only implemented for p(Lambda) <= 2";
        return kExitUnknown;
    }
  }
  throw Error(ErrorCode::kParseError, "unknown criterion '" + name + "'");
}

int cmd_check(const std::string& input, const CheckOptions& opts, const OutputOptions& out_opts,
              Response& r) {
  SpectrumList s = read_spectrum(input, r, /*require_context=*/true);
  if (opts.all || opts.criterion == "all") {
    json verdicts = json::object();
    for (const char* name : {"su", "ci", "ke", "sa", "fi", "so1", "sp", "pe1", "bo", "bms",
                             "pe2plus"}) {
      Response sub;
      sub.subcommand = "check";
      try {
        run_criterion(name, s, opts, sub);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSearchTooLarge) throw;
        sub.verdict = "skipped";
      }
      verdicts[name] = sub.verdict;
      r.human.push_back(std::string(name) + ": " + sub.verdict);
    }
    r.verdict = "report";
    r.details["verdicts"] = verdicts;
    return kExitMember;
  }
  return run_criterion(opts.criterion, s, opts, r);
}

int cmd_realize(const std::string& method, const std::string& input, Response& r) {
  SpectrumList s = read_spectrum(input, r, /*require_context=*/true);
  std::optional<Realization> realization;
  if (method == "su") {
    if (!check_su(s).member) {
      r.verdict = "non-member";
      r.human.push_back("input is not a Suleimanova list; no companion realization");
      return kExitNonMember;
    }
    realization = realize_su(s);
  } else if (method == "sp") {
    auto cert = check_sp(s);
    if (!cert) {
      r.verdict = "non-member";
      r.human.push_back("no Suleimanova-Perfect partition exists; nothing to realize");
      return kExitNonMember;
    }
    realization = realize_sp(*cert);
  } else {
    throw Error(ErrorCode::kParseError, "unknown realization method '" + method + "'");
  }
  if (!verify_realization(*realization)) {
    throw Error(ErrorCode::kInternalCheckFailed, "produced realization failed verification");
  }
  r.verdict = "verified";
  r.certificate = certificate_json(make_document(*realization));
  r.details["method"] = realization_method_name(realization->method);
  r.details["order"] = realization->matrix.order();
  r.human.push_back("matrix:\n" + realization->matrix.str());
  return kExitMember;
}

int cmd_reduce(const std::string& to, const std::string& input, Response& r) {
  IntegerList I = IntegerList::parse(input);
  r.input = integers_json(I);
  SpectrumList image;
  if (to == "sp") image = reduce_to_sp(I);
  else if (to == "pe1") image = reduce_to_pe1(I);
  else throw Error(ErrorCode::kParseError, "unknown reduction target '" + to + "'");
  r.verdict = "ok";
  r.details["image"] = spectrum_json(image);
  r.details["in_pi"] = image.in_pi();
  if (!image.in_pi()) {
    r.notices.push_back("image is outside Pi_Q (largest entry exceeds Sigma/2); "
                        "the instance is a trivial Partition no");
  }
  r.human.push_back("image: " + image.str());
  return kExitMember;
}

int cmd_partition(const std::string& input, Response& r) {
  IntegerList I = IntegerList::parse(input);
  r.input = integers_json(I);
  auto witness = solve_partition(I);
  if (!witness) {
    r.verdict = "no";
    if (mpz_odd_p(I.sigma().get_mpz_t())) {
      r.details["reason"] = "odd total";
      r.human.push_back("reason: odd total");
    }
    return kExitNonMember;
  }
  r.verdict = "yes";
  r.certificate = json{{"side_j", integers_json(witness->side_j)},
                       {"side_k", integers_json(witness->side_k)}};
  r.human.push_back("J = " + witness->side_j.str() + "  K = " + witness->side_k.str());
  return kExitMember;
}

int cmd_verify(const std::string& path, Response& r) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read certificate file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CertificateDocument doc = parse_certificate_document(buffer.str());
  r.input = spectrum_json(doc.input);
  r.details["criterion"] = doc.criterion;
  const bool ok = verify_certificate_document(doc);
  r.verdict = ok ? "verified" : "not-verified";
  return ok ? kExitMember : kExitNonMember;
}

int cmd_survey(const SampleConfig& cfg, const std::vector<std::string>& probe_texts,
               const AuditOptions& options, const OutputOptions& out_opts, Response& r) {
  std::vector<SpectrumList> probes;
  for (const std::string& text : probe_texts) {
    Response scratch;
    probes.push_back(read_spectrum(text, scratch, /*require_context=*/true));
  }
  AuditReport report = audit_inclusions(cfg, probes, options);
  r.input = json();
  r.verdict = report.violations.empty() ? "ok" : "violations-found";
  r.details["report"] = json::parse(audit_report_to_json(report));
  if (!out_opts.json_output) r.human.push_back(audit_summary_table(report));
  return report.violations.empty() ? kExitMember : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision toolkit for realizability criteria of rational spectra"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  OutputOptions out_opts;
  app.add_flag("--json", out_opts.json_output, "emit machine-readable JSON on stdout");
  app.add_flag("--timing", out_opts.timing, "include wall-clock timing in the output");
  app.add_option("--threads", out_opts.threads, "worker threads (1 = fully deterministic)")
      ->check(CLI::PositiveNumber);

  std::string input_text, criterion, method, reduce_target, cert_path, hint_path;
  CheckOptions check_opts;
  SampleConfig survey_cfg;
  AuditOptions survey_opts;
  std::vector<std::string> probe_texts;

  CLI::App* check = app.add_subcommand("check", "decide membership in a criterion");
  check->add_option("--criterion", check_opts.criterion,
                    "su|ci|ke|sa|fi|so1|sp|pe1|bo|bms|sou|so|se|pe2plus|all");
  check->add_flag("--all", check_opts.all, "run every criterion");
  check->add_option("--input", input_text, "candidate spectrum, e.g. \"4,2,-3,-3\"")->required();
  check->add_option("--bms-budget", check_opts.bms_budget, "node budget for the bms search");
  check->add_option("--max-nodes", check_opts.limits.max_nodes, "node cap for sp/pe1 searches");
  check->add_option("--bo-max-negatives", check_opts.limits.bo_max_negatives,
                    "negative-entry cap for the bo search");
  check->add_option("--cert", check_opts.hint_path, "pe2plus hint certificate file");

  CLI::App* realize = app.add_subcommand("realize", "construct a verified realizing matrix");
  realize->add_option("--method", method, "su|sp")->required();
  realize->add_option("--input", input_text, "candidate spectrum")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "map a Partition instance into Pi_Q");
  reduce->add_option("--to", reduce_target, "sp|pe1")->required();
  reduce->add_option("--input", input_text, "positive integers, e.g. \"9,6,4,4,2,1\"")->required();

  CLI::App* partition = app.add_subcommand("partition", "solve a Partition Problem instance");
  partition->add_option("--input", input_text, "positive integers")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate document");
  verify->add_option("--cert", cert_path, "certificate file")->required();

  CLI::App* survey = app.add_subcommand("survey", "sample Pi_Q and audit the inclusion chain");
  survey->add_option("--n", survey_cfg.n, "list length")->required();
  survey->add_option("--samples", survey_cfg.samples, "sample count")->required();
  survey->add_option("--seed", survey_cfg.seed, "RNG seed");
  survey->add_option("--max-abs", survey_cfg.max_abs, "numerator bound");
  survey->add_option("--den", survey_cfg.denominator, "common denominator");
  survey->add_option("--bms-budget", survey_opts.bms_budget, "node budget per bms search");
  survey->add_option("--probe", probe_texts, "extra fixed lists to audit (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Response r;
  const auto started = std::chrono::steady_clock::now();
  int exit_code = kExitInternal;
  try {
    if (check->parsed()) {
      r.subcommand = "check";
      if (!check_opts.all && check_opts.criterion.empty()) {
        std::cerr << "error: --criterion is required unless --all is given\n";
        return kExitUsage;
      }
      exit_code = cmd_check(input_text, check_opts, out_opts, r);
    } else if (realize->parsed()) {
      r.subcommand = "realize";
      exit_code = cmd_realize(method, input_text, r);
    } else if (reduce->parsed()) {
      r.subcommand = "reduce";
      exit_code = cmd_reduce(reduce_target, input_text, r);
    } else if (partition->parsed()) {
      r.subcommand = "partition";
      exit_code = cmd_partition(input_text, r);
    } else if (verify->parsed()) {
      r.subcommand = "verify";
      exit_code = cmd_verify(cert_path, r);
    } else if (survey->parsed()) {
      r.subcommand = "survey";
      exit_code = cmd_survey(survey_cfg, probe_texts, survey_opts, out_opts, r);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  emit(r, out_opts, elapsed.count());
  return exit_code;
}
