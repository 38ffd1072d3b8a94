#pragma once

#include "qniep/criteria_partition.hpp"
#include "qniep/matrix.hpp"
#include "qniep/spectrum.hpp"

namespace qniep {

enum class RealizationMethod { kSuCompanion, kSpBlockDiag, kExternal };

const char* realization_method_name(RealizationMethod m);

/// A nonnegative matrix together with the spectrum it claims to realize;
/// valid iff char_poly(matrix) equals the claimed root polynomial exactly.
struct Realization {
  RationalMatrix matrix;
  SpectrumList claimed_spectrum;
  RealizationMethod method = RealizationMethod::kExternal;
};

/// Companion-matrix realization of a Suleimanova list (subdiagonal of ones,
/// coefficients in the last column). The classical fact that such a list's
/// root polynomial has no positive non-leading coefficient is asserted at
/// runtime, not trusted; a violation is a fatal self-check. Throws
/// Error(kNotSuleimanova) when the input is not a Suleimanova list.
Realization realize_su(const SpectrumList& s);

/// Block-diagonal assembly of realize_su over the blocks of an SP
/// certificate. Throws Error(kInvalidCertificate) on a bad certificate.
Realization realize_sp(const SpCertificate& cert);

/// True iff the matrix is nonnegative and its characteristic polynomial
/// equals poly_from_roots(claimed_spectrum), both checked exactly.
bool verify_realization(const Realization& r);

}  // namespace qniep
