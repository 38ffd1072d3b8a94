#include "qniep/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qniep/errors.hpp"

namespace qniep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num_part = rest;
  std::string_view den_part;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_part = rest.substr(0, slash);
    den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw Error(ErrorCode::kParseError,
                  "bad rational '" + std::string(text) +
                      "': denominator must be a positive integer with no sign");
    }
  }
  if (!all_digits(num_part)) {
    throw Error(ErrorCode::kParseError, "bad rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(std::string(den_part), 10);
  if (den == 0) {
    throw Error(ErrorCode::kParseError,
                "bad rational '" + std::string(text) + "': zero denominator");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.abs(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qniep
