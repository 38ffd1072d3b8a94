#pragma once

#include <optional>
#include <vector>

#include "qniep/matrix.hpp"
#include "qniep/spectrum.hpp"

namespace qniep {

/// Instance of the prescribed-diagonal-and-spectrum subproblem: find a
/// nonnegative matrix with the given diagonal and the given spectrum.
/// Sigma(diagonal) = Sigma(spectrum) is necessary (trace) but recorded, not
/// enforced here.
struct DiagSpecInstance {
  std::vector<Rational> diagonal;  // k nonnegative rationals
  SpectrumList spectrum;           // length k
};

/// Exact decision for k <= 2, returning a witness matrix when feasible.
/// k = 1: feasible iff alpha_1 = d_1. k = 2: feasible iff the traces match
/// and alpha_1*alpha_2 <= d_1*d_2, witness [[d1, 1], [d1*d2 - a1*a2, d2]].
/// Throws Error(kUnsupportedK) for k >= 3.
std::optional<RationalMatrix> decide_diagspec_k2(const DiagSpecInstance& inst);

/// Witness for Perfect-2+ membership: the negative part split into tails,
/// the nonnegative entries as alphas, chosen rho_i making each (rho_i, tail_i)
/// a Suleimanova list, and a nonnegative matrix with diagonal rhos and
/// spectrum alphas.
struct Pe2Certificate {
  std::vector<SpectrumList> tails;  // partition of Lambda^-, may include empties
  std::vector<Rational> alphas;     // nonincreasing, alpha_1 = rho(Lambda)
  std::vector<Rational> rhos;
  std::optional<RationalMatrix> witness_matrix;
};

enum class Pe2State { kMember, kNonMember, kUnknown };

struct Pe2Verdict {
  Pe2State state = Pe2State::kUnknown;
  std::optional<Pe2Certificate> certificate;
};

/// Decides Perfect-2+ membership exactly for k = p(Lambda) <= 2 by
/// enumerating tail partitions; k >= 3 is Unknown unless the supplied hint
/// certificate verifies. Throws Error(kNotInContext) off-context.
Pe2Verdict check_pe2plus(const SpectrumList& s,
                         const std::optional<Pe2Certificate>& hint = std::nullopt);

/// Exact recheck of all certificate invariants, witness included.
/// Throws Error(kMissingWitness) when the certificate has no matrix.
bool verify_pe2plus(const SpectrumList& s, const Pe2Certificate& cert);

}  // namespace qniep
