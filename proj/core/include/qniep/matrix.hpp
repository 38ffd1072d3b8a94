#pragma once

#include <vector>

#include "qniep/polynomial.hpp"
#include "qniep/rational.hpp"

namespace qniep {

/// Dense square matrix of Rationals, row-major, bounds-checked access.
class RationalMatrix {
 public:
  explicit RationalMatrix(int order);
  RationalMatrix(int order, std::vector<Rational> entries);
  static RationalMatrix identity(int order);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int order() const { return order_; }
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);
  const std::vector<Rational>& entries() const { return entries_; }

  Rational trace() const;
  std::vector<Rational> diagonal() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

  std::string str() const;

 private:
  int order_;
  std::vector<Rational> entries_;
};

bool is_nonnegative(const RationalMatrix& m);

/// Characteristic polynomial det(xI - m), computed exactly by the
/// Faddeev-LeVerrier recurrence (every division is by an integer k and is
/// exact over Q).
Polynomial char_poly(const RationalMatrix& m);

/// Exact determinant by fraction Gaussian elimination. Independent of
/// char_poly on purpose: the two give each other a cross-check.
Rational determinant(RationalMatrix m);

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace qniep
