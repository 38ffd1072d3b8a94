#include "qniep/serialization.hpp"

#include <json.hpp>

#include "qniep/errors.hpp"

namespace qniep {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

json spectrum_to_json(const SpectrumList& s) {
  json arr = json::array();
  for (const Rational& e : s.entries()) arr.push_back(rational_to_json(e));
  return arr;
}

json blocks_to_json(const std::vector<SpectrumList>& blocks) {
  json arr = json::array();
  for (const SpectrumList& b : blocks) arr.push_back(spectrum_to_json(b));
  return arr;
}

json matrix_to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (const Rational& e : m.entries()) entries.push_back(rational_to_json(e));
  return json{{"order", m.order()}, {"entries", entries}};
}

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(rational_to_json(v));
  return arr;
}

json moves_to_json(const MoveSequence& seq) {
  json moves = json::array();
  for (const Move& m : seq.moves) {
    switch (m.kind) {
      case MoveKind::kUnion:
        moves.push_back(json{{"kind", "union"}, {"lists", {m.list_a, m.list_b}}});
        break;
      case MoveKind::kShiftTop:
        moves.push_back(
            json{{"kind", "shift_top"}, {"list", m.list_a}, {"epsilon", m.epsilon.str()}});
        break;
      case MoveKind::kGuo:
        moves.push_back(json{{"kind", "guo"},
                             {"list", m.list_a},
                             {"epsilon", m.epsilon.str()},
                             {"position", m.position},
                             {"sign", m.sign > 0 ? "+" : "-"}});
        break;
    }
  }
  return json{{"start_count", seq.start_count}, {"moves", moves}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::kParseError, "expected a rational string");
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(rational_from_json(e));
  return out;
}

SpectrumList spectrum_from_json(const json& j) { return SpectrumList(rationals_from_json(j)); }

std::vector<SpectrumList> blocks_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array of lists");
  std::vector<SpectrumList> out;
  out.reserve(j.size());
  for (const json& b : j) out.push_back(spectrum_from_json(b));
  return out;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("entries") ||
      !j.at("order").is_number_integer()) {
    throw Error(ErrorCode::kParseError, "matrix requires integer 'order' and 'entries'");
  }
  const int order = j.at("order").get<int>();
  std::vector<Rational> entries = rationals_from_json(j.at("entries"));
  if (order <= 0 || entries.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::kParseError, "matrix entry count does not match its order");
  }
  return RationalMatrix(order, std::move(entries));
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

MoveSequence moves_from_json(const json& j) {
  MoveSequence seq;
  seq.start_count = int_field(j, "start_count");
  if (!j.contains("moves") || !j.at("moves").is_array()) {
    throw Error(ErrorCode::kParseError, "move sequence requires a 'moves' array");
  }
  for (const json& m : j.at("moves")) {
    if (!m.is_object() || !m.contains("kind") || !m.at("kind").is_string()) {
      throw Error(ErrorCode::kParseError, "each move requires a string 'kind'");
    }
    const std::string kind = m.at("kind").get<std::string>();
    Move move;
    if (kind == "union") {
      move.kind = MoveKind::kUnion;
      if (!m.contains("lists") || !m.at("lists").is_array() || m.at("lists").size() != 2) {
        throw Error(ErrorCode::kParseError, "union move requires a two-entry 'lists' array");
      }
      move.list_a = m.at("lists").at(0).get<int>();
      move.list_b = m.at("lists").at(1).get<int>();
    } else if (kind == "shift_top") {
      move.kind = MoveKind::kShiftTop;
      move.list_a = int_field(m, "list");
      move.epsilon = rational_from_json(m.value("epsilon", json()));
    } else if (kind == "guo") {
      move.kind = MoveKind::kGuo;
      move.list_a = int_field(m, "list");
      move.epsilon = rational_from_json(m.value("epsilon", json()));
      move.position = int_field(m, "position");
      const std::string sign = m.value("sign", "");
      if (sign != "+" && sign != "-") {
        throw Error(ErrorCode::kParseError, "guo move requires sign '+' or '-'");
      }
      move.sign = sign == "+" ? 1 : -1;
    } else {
      throw Error(ErrorCode::kParseError, "unknown move kind '" + kind + "'");
    }
    seq.moves.push_back(std::move(move));
  }
  return seq;
}

json document_to_json(const CertificateDocument& doc) {
  json out{{"criterion", doc.criterion}, {"input", spectrum_to_json(doc.input)}};
  if (doc.sp) {
    out["blocks"] = blocks_to_json(doc.sp->blocks);
  } else if (doc.pe1) {
    out["alpha"] = doc.pe1->alpha.str();
    out["beta"] = doc.pe1->beta.str();
    out["blocks"] = blocks_to_json(doc.pe1->blocks);
  } else if (doc.bo) {
    out["neg_groups"] = blocks_to_json(doc.bo->neg_groups);
  } else if (doc.bms) {
    json seq = moves_to_json(*doc.bms);
    out["start_count"] = seq["start_count"];
    out["moves"] = seq["moves"];
  } else if (doc.pe2) {
    out["neg_groups"] = blocks_to_json(doc.pe2->tails);
    out["alphas"] = rationals_to_json(doc.pe2->alphas);
    out["rhos"] = rationals_to_json(doc.pe2->rhos);
    if (doc.pe2->witness_matrix) {
      out["witness_matrix"] = matrix_to_json(*doc.pe2->witness_matrix);
    }
  } else if (doc.realization) {
    out["method"] = realization_method_name(doc.realization->method);
    out["matrix"] = matrix_to_json(doc.realization->matrix);
  }
  return out;
}

}  // namespace

CertificateDocument make_document(const SpectrumList& input, const SpCertificate& cert) {
  CertificateDocument doc;
  doc.criterion = "sp";
  doc.input = input;
  doc.sp = cert;
  return doc;
}

CertificateDocument make_document(const SpectrumList& input, const Pe1Certificate& cert) {
  CertificateDocument doc;
  doc.criterion = "pe1";
  doc.input = input;
  doc.pe1 = cert;
  return doc;
}

CertificateDocument make_document(const SpectrumList& input, const BoCertificate& cert) {
  CertificateDocument doc;
  doc.criterion = "bo";
  doc.input = input;
  doc.bo = cert;
  return doc;
}

CertificateDocument make_document(const SpectrumList& input, const MoveSequence& cert) {
  CertificateDocument doc;
  doc.criterion = "bms";
  doc.input = input;
  doc.bms = cert;
  return doc;
}

CertificateDocument make_document(const SpectrumList& input, const Pe2Certificate& cert) {
  CertificateDocument doc;
  doc.criterion = "pe2plus";
  doc.input = input;
  doc.pe2 = cert;
  return doc;
}

CertificateDocument make_document(const Realization& realization) {
  CertificateDocument doc;
  doc.criterion = "realization";
  doc.input = realization.claimed_spectrum;
  doc.realization = realization;
  return doc;
}

std::string to_json_text(const CertificateDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

CertificateDocument parse_certificate_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kParseError, "certificate document is not valid JSON");
  }
  if (!j.contains("criterion") || !j.at("criterion").is_string() || !j.contains("input")) {
    throw Error(ErrorCode::kParseError, "certificate document requires 'criterion' and 'input'");
  }
  CertificateDocument doc;
  doc.criterion = j.at("criterion").get<std::string>();
  doc.input = spectrum_from_json(j.at("input"));
  // The Group 3 aliases share the BMS certificate format.
  if (doc.criterion == "sou" || doc.criterion == "so" || doc.criterion == "se") {
    doc.criterion = "bms";
  }
  if (doc.criterion == "sp") {
    if (!j.contains("blocks")) throw Error(ErrorCode::kParseError, "sp document needs 'blocks'");
    doc.sp = SpCertificate{blocks_from_json(j.at("blocks"))};
  } else if (doc.criterion == "pe1") {
    if (!j.contains("alpha") || !j.contains("beta") || !j.contains("blocks")) {
      throw Error(ErrorCode::kParseError, "pe1 document needs 'alpha', 'beta' and 'blocks'");
    }
    doc.pe1 = Pe1Certificate{rational_from_json(j.at("alpha")), rational_from_json(j.at("beta")),
                             blocks_from_json(j.at("blocks"))};
  } else if (doc.criterion == "bo") {
    if (!j.contains("neg_groups")) {
      throw Error(ErrorCode::kParseError, "bo document needs 'neg_groups'");
    }
    doc.bo = BoCertificate{blocks_from_json(j.at("neg_groups"))};
  } else if (doc.criterion == "bms") {
    doc.bms = moves_from_json(j);
  } else if (doc.criterion == "pe2plus") {
    if (!j.contains("neg_groups") || !j.contains("alphas") || !j.contains("rhos")) {
      throw Error(ErrorCode::kParseError,
                  "pe2plus document needs 'neg_groups', 'alphas' and 'rhos'");
    }
    Pe2Certificate cert;
    cert.tails = blocks_from_json(j.at("neg_groups"));
    cert.alphas = rationals_from_json(j.at("alphas"));
    cert.rhos = rationals_from_json(j.at("rhos"));
    if (j.contains("witness_matrix")) cert.witness_matrix = matrix_from_json(j.at("witness_matrix"));
    doc.pe2 = std::move(cert);
  } else if (doc.criterion == "realization") {
    if (!j.contains("matrix")) {
      throw Error(ErrorCode::kParseError, "realization document needs 'matrix'");
    }
    Realization r{matrix_from_json(j.at("matrix")), doc.input, RealizationMethod::kExternal};
    const std::string method = j.value("method", "external");
    if (method == "su_companion") r.method = RealizationMethod::kSuCompanion;
    else if (method == "sp_block_diag") r.method = RealizationMethod::kSpBlockDiag;
    doc.realization = std::move(r);
  } else {
    throw Error(ErrorCode::kParseError, "unknown certificate criterion '" + doc.criterion + "'");
  }
  return doc;
}

bool verify_certificate_document(const CertificateDocument& doc) {
  if (doc.sp) return verify_sp(doc.input, *doc.sp);
  if (doc.pe1) return verify_pe1(doc.input, *doc.pe1);
  if (doc.bo) return verify_bo(doc.input, *doc.bo);
  if (doc.bms) return verify_bms(doc.input, *doc.bms);
  if (doc.pe2) return verify_pe2plus(doc.input, *doc.pe2);
  if (doc.realization) return verify_realization(*doc.realization);
  throw Error(ErrorCode::kParseError, "certificate document has no payload");
}

std::string audit_report_to_json(const AuditReport& report) {
  json counts = json::object();
  for (const auto& [name, value] : report.counts) counts[name] = value;
  json violations = json::array();
  for (const PairExample& v : report.violations) {
    violations.push_back(
        json{{"inner", v.inner}, {"outer", v.outer}, {"input", spectrum_to_json(v.input)}});
  }
  json separating = json::array();
  for (const PairExample& e : report.separating) {
    separating.push_back(
        json{{"inner", e.inner}, {"outer", e.outer}, {"input", spectrum_to_json(e.input)}});
  }
  json probes = json::array();
  for (const ProbeRow& p : report.probes) {
    json verdicts = json::object();
    for (const auto& [name, verdict] : p.verdicts) verdicts[name] = verdict;
    probes.push_back(json{{"input", spectrum_to_json(p.input)}, {"verdicts", verdicts}});
  }
  json out{{"config",
            {{"n", report.config.n},
             {"samples", report.config.samples},
             {"seed", report.config.seed},
             {"max_abs", report.config.max_abs},
             {"den", report.config.denominator}}},
           {"counts", counts},
           {"violations", violations},
           {"separating", separating},
           {"skipped", report.skipped},
           {"probes", probes}};
  return out.dump(2) + "\n";
}

}  // namespace qniep
