#include "qniep/realization.hpp"

#include "qniep/criteria_linear.hpp"
#include "qniep/errors.hpp"
#include "qniep/polynomial.hpp"

namespace qniep {

const char* realization_method_name(RealizationMethod m) {
  switch (m) {
    case RealizationMethod::kSuCompanion: return "su_companion";
    case RealizationMethod::kSpBlockDiag: return "sp_block_diag";
    case RealizationMethod::kExternal: return "external";
  }
  return "?";
}

Realization realize_su(const SpectrumList& s) {
  if (!detail::is_su_block(s)) {
    throw Error(ErrorCode::kNotSuleimanova,
                s.str() + " is not a Suleimanova list with Sigma >= 0");
  }
  const int n = s.size();
  const Polynomial p = poly_from_roots(s.entries());
  // p(x) = x^n - a_{n-1} x^{n-1} - ... - a_0 with every a_i >= 0; this is
  // the constructive content of the criterion and is re-checked on every run.
  std::vector<Rational> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = -p.coeff(i);
    if (a[static_cast<std::size_t>(i)].is_negative()) {
      throw Error(ErrorCode::kInternalCheckFailed,
                  "companion coefficient violation: coefficient of x^" + std::to_string(i) +
                      " in " + p.str() + " is positive for " + s.str());
    }
  }
  RationalMatrix m(n);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = Rational(1);
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = a[static_cast<std::size_t>(i)];
  return Realization{std::move(m), s, RealizationMethod::kSuCompanion};
}

Realization realize_sp(const SpCertificate& cert) {
  if (cert.blocks.empty()) {
    throw Error(ErrorCode::kInvalidCertificate, "SP certificate has no blocks");
  }
  for (const SpectrumList& block : cert.blocks) {
    if (!detail::is_su_block(block)) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "block " + block.str() + " is not a Suleimanova list with Sigma >= 0");
    }
  }
  Realization acc = realize_su(cert.blocks.front());
  for (std::size_t b = 1; b < cert.blocks.size(); ++b) {
    Realization next = realize_su(cert.blocks[b]);
    acc.matrix = block_diag(acc.matrix, next.matrix);
    acc.claimed_spectrum = union_of(acc.claimed_spectrum, next.claimed_spectrum);
  }
  acc.method = RealizationMethod::kSpBlockDiag;
  return acc;
}

bool verify_realization(const Realization& r) {
  if (r.matrix.order() != r.claimed_spectrum.size()) return false;
  if (!is_nonnegative(r.matrix)) return false;
  return char_poly(r.matrix) == poly_from_roots(r.claimed_spectrum.entries());
}

}  // namespace qniep
