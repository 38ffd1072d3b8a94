#pragma once

#include <optional>
#include <string>

#include "qniep/crealizable.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/diag_spectrum.hpp"
#include "qniep/realization.hpp"
#include "qniep/spectrum.hpp"
#include "qniep/survey.hpp"

namespace qniep {

/// A self-contained certificate file: the criterion it claims, the input
/// list, and exactly one payload. Rationals travel as "p/q" strings,
/// matrices as row-major "p/q" arrays plus their order, move operand
/// indices 1-based.
struct CertificateDocument {
  std::string criterion;  // sp | pe1 | bo | bms | pe2plus | realization
  SpectrumList input;
  std::optional<SpCertificate> sp;
  std::optional<Pe1Certificate> pe1;
  std::optional<BoCertificate> bo;
  std::optional<MoveSequence> bms;
  std::optional<Pe2Certificate> pe2;
  std::optional<Realization> realization;
};

CertificateDocument make_document(const SpectrumList& input, const SpCertificate& cert);
CertificateDocument make_document(const SpectrumList& input, const Pe1Certificate& cert);
CertificateDocument make_document(const SpectrumList& input, const BoCertificate& cert);
CertificateDocument make_document(const SpectrumList& input, const MoveSequence& cert);
CertificateDocument make_document(const SpectrumList& input, const Pe2Certificate& cert);
CertificateDocument make_document(const Realization& realization);

/// Serializes to deterministic two-space-indented JSON (keys sorted).
std::string to_json_text(const CertificateDocument& doc);

/// Parses and validates shape; throws Error(kParseError) on malformed input.
CertificateDocument parse_certificate_document(const std::string& text);

/// Re-verifies the payload against the document's input list. Documents
/// whose payload is structurally fine but fails its invariants return false.
/// Pe2+ documents without a witness matrix throw Error(kMissingWitness).
bool verify_certificate_document(const CertificateDocument& doc);

std::string audit_report_to_json(const AuditReport& report);

}  // namespace qniep
