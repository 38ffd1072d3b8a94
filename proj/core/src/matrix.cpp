#include "qniep/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qniep {

RationalMatrix::RationalMatrix(int order) : order_(order) {
  if (order <= 0) throw std::invalid_argument("RationalMatrix: order must be positive");
  entries_.resize(static_cast<std::size_t>(order) * order);
}

RationalMatrix::RationalMatrix(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order <= 0) throw std::invalid_argument("RationalMatrix: order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("RationalMatrix: entry count does not match order");
  }
}

RationalMatrix RationalMatrix::identity(int order) {
  RationalMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int n = static_cast<int>(rows.size());
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("RationalMatrix: ragged rows");
    }
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

const Rational& RationalMatrix::at(int i, int j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_) {
    throw std::out_of_range("RationalMatrix: index out of range");
  }
  return entries_[static_cast<std::size_t>(i) * order_ + j];
}

Rational& RationalMatrix::at(int i, int j) {
  if (i < 0 || i >= order_ || j < 0 || j >= order_) {
    throw std::out_of_range("RationalMatrix: index out of range");
  }
  return entries_[static_cast<std::size_t>(i) * order_ + j];
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

std::vector<Rational> RationalMatrix::diagonal() const {
  std::vector<Rational> d;
  d.reserve(order_);
  for (int i = 0; i < order_; ++i) d.push_back(at(i, i));
  return d;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("matrix product: order mismatch");
  int n = a.order_;
  RationalMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < order_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < order_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    if (i + 1 < order_) os << "\n";
  }
  os << "]";
  return os.str();
}

bool is_nonnegative(const RationalMatrix& m) {
  for (const Rational& e : m.entries()) {
    if (e.is_negative()) return false;
  }
  return true;
}

Polynomial char_poly(const RationalMatrix& a) {
  int n = a.order();
  // c[k] is the coefficient of x^k in det(xI - a); c[n] = 1.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Rational(1);
  RationalMatrix m = a;
  c[static_cast<std::size_t>(n - 1)] = -m.trace();
  for (int k = 2; k <= n; ++k) {
    RationalMatrix shifted = m;
    const Rational& prev = c[static_cast<std::size_t>(n - k + 1)];
    for (int i = 0; i < n; ++i) shifted.at(i, i) += prev;
    m = a * shifted;
    c[static_cast<std::size_t>(n - k)] = -(m.trace() / Rational(k));
  }
  return Polynomial(std::move(c));
}

Rational determinant(RationalMatrix m) {
  int n = m.order();
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (!m.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    const Rational p = m.at(col, col);
    det *= p;
    for (int row = col + 1; row < n; ++row) {
      if (m.at(row, col).is_zero()) continue;
      Rational factor = m.at(row, col) / p;
      for (int j = col; j < n; ++j) {
        m.at(row, j) -= factor * m.at(col, j);
      }
    }
  }
  return det;
}

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
  int n = a.order() + b.order();
  RationalMatrix m(n);
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.order(); ++i) {
    for (int j = 0; j < b.order(); ++j) m.at(a.order() + i, a.order() + j) = b.at(i, j);
  }
  return m;
}

}  // namespace qniep
