#pragma once

#include <string>
#include <vector>

#include "qniep/rational.hpp"

namespace qniep {

/// Univariate polynomial over Rational, coefficients stored lowest degree
/// first with the leading coefficient nonzero. The zero polynomial is the
/// empty coefficient sequence (degree() == -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const;

  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, e.g. "x^2 - 3x - 18".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic polynomial with exactly the given multiset of roots; the empty
/// sequence yields the constant 1.
Polynomial poly_from_roots(const std::vector<Rational>& roots);

}  // namespace qniep
