#include "qniep/criteria_linear.hpp"

#include <sstream>

#include "qniep/errors.hpp"

namespace qniep {

namespace {

// 1-based accessor matching the lambda_i notation of the definitions.
const Rational& lam(const SpectrumList& s, int i) {
  return s[static_cast<std::size_t>(i - 1)];
}

std::string ineq(const Rational& lhs, const char* rel, const Rational& rhs,
                 const std::string& label) {
  std::ostringstream os;
  os << label << ": " << lhs.str() << " " << rel << " " << rhs.str() << " fails";
  return os.str();
}

LinearVerdict member_verdict(LinearCriterion c) { return LinearVerdict{c, true, {}}; }

LinearVerdict failed_verdict(LinearCriterion c, std::string why) {
  return LinearVerdict{c, false, std::move(why)};
}

}  // namespace

PsiData compute_psi(const SpectrumList& s) {
  const int n = s.size();
  const int p = s.p();
  const int q = s.q();
  PsiData data;

  const int m = p < q ? p : q;
  for (int i = 1; i <= m; ++i) {
    if ((lam(s, i) + lam(s, n + 1 - i)).is_negative()) data.psi_set.push_back(i);
  }
  for (int k : data.psi_set) {
    Rational acc;
    for (int i : data.psi_set) {
      if (i >= k) break;
      acc += lam(s, i) + lam(s, n + 1 - i);
    }
    acc += lam(s, n + 1 - k);
    data.psi_k.emplace(k, acc);
  }
  for (int i : data.psi_set) {
    data.psi += lam(s, i) + lam(s, n + 1 - i);
  }
  // Trailing sum, present only when there are more negative than nonnegative
  // entries; read as empty otherwise.
  for (int j = p + 1; j <= q; ++j) {
    data.psi += lam(s, n + 1 - j);
  }
  return data;
}

const char* linear_criterion_name(LinearCriterion c) {
  switch (c) {
    case LinearCriterion::kSu: return "su";
    case LinearCriterion::kCi: return "ci";
    case LinearCriterion::kKe: return "ke";
    case LinearCriterion::kSa: return "sa";
    case LinearCriterion::kFi: return "fi";
    case LinearCriterion::kSo1: return "so1";
  }
  return "?";
}

namespace detail {

void require_in_pi(const SpectrumList& s) {
  if (s.empty()) throw Error(ErrorCode::kNotInContext, "empty list is not in Pi_Q");
  if (s.sigma().is_negative()) {
    throw Error(ErrorCode::kNotInContext,
                "Sigma(Lambda) = " + s.sigma().str() + " < 0");
  }
  if (s.rho() != s[0]) {
    throw Error(ErrorCode::kNotInContext, "rho(Lambda) = " + s.rho().str() +
                                              " != lambda_1 = " + s[0].str());
  }
}

bool is_su_block(const SpectrumList& s) {
  if (s.empty()) return false;
  if (s[0].is_negative()) return false;
  for (int i = 1; i < s.size(); ++i) {
    if (!s[static_cast<std::size_t>(i)].is_negative()) return false;
  }
  return s.sigma().is_nonnegative();
}

bool ke_holds(const SpectrumList& s) {
  if (s.empty() || !s.in_pi()) return false;
  std::vector<Rational> tail(s.entries().begin() + 1, s.entries().end());
  PsiData gamma = compute_psi(SpectrumList(std::move(tail)));
  if (s[0] < -gamma.psi) return false;
  for (const auto& [k, value] : gamma.psi_k) {
    if (s[0] < -value) return false;
  }
  return true;
}

}  // namespace detail

LinearVerdict check_su(const SpectrumList& s) {
  detail::require_in_pi(s);
  if (s[0].is_negative()) {
    return failed_verdict(LinearCriterion::kSu,
                          "lambda_1 = " + s[0].str() + " >= 0 fails");
  }
  for (int i = 2; i <= s.size(); ++i) {
    if (!lam(s, i).is_negative()) {
      return failed_verdict(LinearCriterion::kSu, "lambda_" + std::to_string(i) + " = " +
                                                      lam(s, i).str() + " < 0 fails");
    }
  }
  return member_verdict(LinearCriterion::kSu);
}

LinearVerdict check_ci(const SpectrumList& s) {
  detail::require_in_pi(s);
  const Rational bound = s[0] / Rational(s.size());
  for (int i = 2; i <= s.size(); ++i) {
    if (lam(s, i).abs() > bound) {
      return failed_verdict(
          LinearCriterion::kCi,
          ineq(lam(s, i).abs(), "<=", bound, "|lambda_" + std::to_string(i) + "|"));
    }
  }
  return member_verdict(LinearCriterion::kCi);
}

LinearVerdict check_ke(const SpectrumList& s) {
  detail::require_in_pi(s);
  std::vector<Rational> tail(s.entries().begin() + 1, s.entries().end());
  PsiData gamma = compute_psi(SpectrumList(std::move(tail)));
  if (s[0] < -gamma.psi) {
    return failed_verdict(LinearCriterion::kKe,
                          ineq(s[0], ">=", -gamma.psi, "lambda_1 >= -psi(Gamma)"));
  }
  for (const auto& [k, value] : gamma.psi_k) {
    if (s[0] < -value) {
      return failed_verdict(
          LinearCriterion::kKe,
          ineq(s[0], ">=", -value, "lambda_1 >= -psi_" + std::to_string(k) + "(Gamma)"));
    }
  }
  return member_verdict(LinearCriterion::kKe);
}

LinearVerdict check_sa(const SpectrumList& s) {
  detail::require_in_pi(s);
  const int n = s.size();
  const Rational mean = s.sigma() / Rational(n);
  for (int i = 2; i <= (n + 1) / 2; ++i) {
    const Rational half_pair = (lam(s, i) + lam(s, n - i + 1)) / Rational(2);
    if (mean < half_pair) {
      return failed_verdict(
          LinearCriterion::kSa,
          ineq(mean, ">=", half_pair,
               "Sigma/n >= (lambda_" + std::to_string(i) + "+lambda_" +
                   std::to_string(n - i + 1) + ")/2"));
    }
  }
  return member_verdict(LinearCriterion::kSa);
}

LinearVerdict check_fi(const SpectrumList& s) {
  detail::require_in_pi(s);
  const int n = s.size();
  const Rational lhs = s[0] + lam(s, n) + s.sigma();
  Rational rhs;
  for (int i = 2; i <= n - 1; ++i) {
    rhs += (lam(s, i) + lam(s, n - i + 1)).abs() / Rational(2);
  }
  if (lhs < rhs) {
    return failed_verdict(
        LinearCriterion::kFi,
        ineq(lhs, ">=", rhs, "lambda_1 + lambda_n + Sigma >= sum |pairs|/2"));
  }
  return member_verdict(LinearCriterion::kFi);
}

LinearVerdict check_so1(const SpectrumList& s) {
  detail::require_in_pi(s);
  const PsiData data = compute_psi(s);
  const Rational lhs = s[0] + lam(s, s.size());
  if (lhs < -data.psi) {
    return failed_verdict(LinearCriterion::kSo1,
                          ineq(lhs, ">=", -data.psi, "lambda_1 + lambda_n >= -psi"));
  }
  return member_verdict(LinearCriterion::kSo1);
}

LinearVerdict check_linear(LinearCriterion c, const SpectrumList& s) {
  switch (c) {
    case LinearCriterion::kSu: return check_su(s);
    case LinearCriterion::kCi: return check_ci(s);
    case LinearCriterion::kKe: return check_ke(s);
    case LinearCriterion::kSa: return check_sa(s);
    case LinearCriterion::kFi: return check_fi(s);
    case LinearCriterion::kSo1: return check_so1(s);
  }
  throw Error(ErrorCode::kInternalCheckFailed, "unknown linear criterion");
}

}  // namespace qniep
