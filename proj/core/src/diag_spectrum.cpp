#include "qniep/diag_spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "qniep/criteria_linear.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/errors.hpp"

namespace qniep {

namespace {

Rational tail_lower_bound(const SpectrumList& tail) {
  // rho_i >= max(0, -Sigma(tail_i)) keeps (rho_i) u tail_i Suleimanova.
  return max(Rational(0), -tail.sigma());
}

std::optional<RationalMatrix> try_k2(const Rational& alpha1, const Rational& alpha2,
                                     const SpectrumList& tail1, const SpectrumList& tail2) {
  const Rational sum = alpha1 + alpha2;
  const Rational product = alpha1 * alpha2;
  const Rational low1 = tail_lower_bound(tail1);
  const Rational low2 = tail_lower_bound(tail2);
  if (low1 + low2 > sum) return std::nullopt;
  // rho_1 * rho_2 is concave on the segment rho_1 in [low1, sum - low2] with
  // rho_2 = sum - rho_1; its maximum sits at the clamped midpoint.
  Rational rho1 = sum / Rational(2);
  rho1 = max(rho1, low1);
  rho1 = min(rho1, sum - low2);
  const Rational rho2 = sum - rho1;
  if (rho1 * rho2 < product) return std::nullopt;
  DiagSpecInstance inst{{rho1, rho2}, SpectrumList({alpha1, alpha2})};
  return decide_diagspec_k2(inst);
}

}  // namespace

std::optional<RationalMatrix> decide_diagspec_k2(const DiagSpecInstance& inst) {
  const std::size_t k = inst.diagonal.size();
  if (k == 0 || static_cast<int>(k) != inst.spectrum.size()) {
    throw std::invalid_argument("decide_diagspec_k2: diagonal/spectrum size mismatch");
  }
  if (k > 2) {
    throw Error(ErrorCode::kUnsupportedK,
                "prescribed diagonal and spectrum is only decided for k <= 2");
  }
  for (const Rational& d : inst.diagonal) {
    if (d.is_negative()) {
      throw std::invalid_argument("decide_diagspec_k2: diagonal entries must be nonnegative");
    }
  }
  if (k == 1) {
    if (inst.spectrum[0] != inst.diagonal[0]) return std::nullopt;
    return RationalMatrix(1, {inst.diagonal[0]});
  }
  const Rational& d1 = inst.diagonal[0];
  const Rational& d2 = inst.diagonal[1];
  const Rational& a1 = inst.spectrum[0];
  const Rational& a2 = inst.spectrum[1];
  if (a1 + a2 != d1 + d2) return std::nullopt;
  const Rational c = d1 * d2 - a1 * a2;
  if (c.is_negative()) return std::nullopt;
  return RationalMatrix(2, {d1, Rational(1), c, d2});
}

Pe2Verdict check_pe2plus(const SpectrumList& s, const std::optional<Pe2Certificate>& hint) {
  detail::require_in_pi(s);
  auto [pos, neg] = split_signs(s);
  const int k = pos.size();  // tails are strictly negative, so k = p(Lambda)

  if (k == 1) {
    // rho_1 = alpha_1 is forced; Sigma(Lambda) >= 0 makes it feasible.
    const Rational& alpha1 = pos[0];
    if (alpha1 < tail_lower_bound(neg)) {
      throw Error(ErrorCode::kInternalCheckFailed,
                  "k = 1 infeasible despite Sigma >= 0 for " + s.str());
    }
    Pe2Certificate cert;
    cert.tails = {neg};
    cert.alphas = {alpha1};
    cert.rhos = {alpha1};
    cert.witness_matrix = RationalMatrix(1, {alpha1});
    return Pe2Verdict{Pe2State::kMember, std::move(cert)};
  }

  if (k == 2) {
    const Rational& alpha1 = pos[0];
    const Rational& alpha2 = pos[1];
    std::optional<Pe2Certificate> found;
    auto consider = [&](SpectrumList tail1, SpectrumList tail2) {
      if (found) return true;
      if (auto witness = try_k2(alpha1, alpha2, tail1, tail2)) {
        Pe2Certificate cert;
        cert.alphas = {alpha1, alpha2};
        cert.rhos = witness->diagonal();
        cert.tails = {std::move(tail1), std::move(tail2)};
        cert.witness_matrix = std::move(*witness);
        found = std::move(cert);
        return true;
      }
      return false;
    };
    if (neg.empty()) {
      consider(SpectrumList(), SpectrumList());
    } else {
      detail::for_each_set_partition(neg.size(), [&](const std::vector<int>& rgs) {
        int groups = 0;
        for (int g : rgs) groups = std::max(groups, g + 1);
        if (groups > 2) return false;
        std::vector<Rational> t1, t2;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
          (rgs[i] == 0 ? t1 : t2).push_back(neg[i]);
        }
        return consider(SpectrumList(std::move(t1)), SpectrumList(std::move(t2)));
      });
    }
    if (found) return Pe2Verdict{Pe2State::kMember, std::move(found)};
    return Pe2Verdict{Pe2State::kNonMember, std::nullopt};
  }

  // k >= 3: the general subproblem is open; accept a verifying hint, else
  // report Unknown.
  if (hint && hint->witness_matrix && verify_pe2plus(s, *hint)) {
    return Pe2Verdict{Pe2State::kMember, *hint};
  }
  return Pe2Verdict{Pe2State::kUnknown, std::nullopt};
}

bool verify_pe2plus(const SpectrumList& s, const Pe2Certificate& cert) {
  if (!cert.witness_matrix) {
    throw Error(ErrorCode::kMissingWitness, "Pe2+ verification requires a witness matrix");
  }
  const std::size_t k = cert.alphas.size();
  if (k == 0 || cert.rhos.size() != k || cert.tails.size() != k) return false;

  auto [pos, neg] = split_signs(s);
  std::vector<Rational> alphas_sorted = cert.alphas;
  std::sort(alphas_sorted.begin(), alphas_sorted.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  if (alphas_sorted != pos.entries()) return false;

  SpectrumList tails_merged;
  for (std::size_t i = 0; i < k; ++i) {
    for (const Rational& e : cert.tails[i].entries()) {
      if (!e.is_negative()) return false;
    }
    tails_merged = union_of(tails_merged, cert.tails[i]);
    if (cert.rhos[i].is_negative()) return false;
    if (cert.rhos[i] < tail_lower_bound(cert.tails[i])) return false;
  }
  if (tails_merged != neg) return false;

  const RationalMatrix& witness = *cert.witness_matrix;
  if (witness.order() != static_cast<int>(k)) return false;
  if (!is_nonnegative(witness)) return false;
  if (witness.diagonal() != cert.rhos) return false;
  return char_poly(witness) == poly_from_roots(cert.alphas);
}

}  // namespace qniep
