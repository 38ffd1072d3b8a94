#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qniep/rational.hpp"
#include "qniep/spectrum.hpp"

namespace qniep {

/// Kellogg's index set Psi and the deficit functionals psi_k / psi built from
/// the symmetric pairs lambda_i + lambda_{n+1-i}. Defined for any sorted list
/// (the Kellogg check applies it to a tail that need not be in Pi_Q).
struct PsiData {
  std::vector<int> psi_set;          // 1-based indices, ascending
  std::map<int, Rational> psi_k;     // one value per index in psi_set
  Rational psi;
};

PsiData compute_psi(const SpectrumList& s);

enum class LinearCriterion { kSu, kCi, kKe, kSa, kFi, kSo1 };

const char* linear_criterion_name(LinearCriterion c);

struct LinearVerdict {
  LinearCriterion criterion;
  bool member = false;
  /// First failing inequality in evaluation order; absent for members.
  std::optional<std::string> failing_inequality;
};

// Each check throws Error(kNotInContext) unless the input is in Pi_Q.
LinearVerdict check_su(const SpectrumList& s);
LinearVerdict check_ci(const SpectrumList& s);
LinearVerdict check_ke(const SpectrumList& s);
LinearVerdict check_sa(const SpectrumList& s);
LinearVerdict check_fi(const SpectrumList& s);
LinearVerdict check_so1(const SpectrumList& s);

LinearVerdict check_linear(LinearCriterion c, const SpectrumList& s);

namespace detail {

/// Kellogg membership as a plain predicate: false when the list fails the
/// Pi_Q gate instead of throwing. The Borobia search evaluates this on
/// merged lists that may fall outside the context.
bool ke_holds(const SpectrumList& s);

/// Throws Error(kNotInContext) naming the violated condition.
void require_in_pi(const SpectrumList& s);

/// Suleimanova shape plus nonnegative sum, with no context gate. This is the
/// block-validity predicate shared by the partition criteria: for such a
/// block, Sigma >= 0 already forces rho to be the head.
bool is_su_block(const SpectrumList& s);

}  // namespace detail

}  // namespace qniep
