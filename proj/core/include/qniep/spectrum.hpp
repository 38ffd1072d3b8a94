#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qniep/rational.hpp"

namespace qniep {

/// Candidate spectrum: a finite list of rationals kept in nonincreasing
/// order. Constructors sort, so every instance is canonical; Sigma, rho and
/// the sign counts are cached eagerly. Immutable after construction.
class SpectrumList {
 public:
  SpectrumList() = default;  // empty list
  explicit SpectrumList(std::vector<Rational> entries);

  /// Parses a comma-separated list of rationals, e.g. "13/2,1/2,-7".
  static SpectrumList parse(std::string_view text);

  const std::vector<Rational>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  /// Sum of the entries (the trace of any realization).
  const Rational& sigma() const { return sigma_; }
  /// Maximum absolute value (zero for the empty list).
  const Rational& rho() const { return rho_; }
  /// Count of nonnegative entries; zeros are nonnegative.
  int p() const { return p_; }
  /// Count of negative entries.
  int q() const { return size() - p_; }
  /// Pi_Q gate: Sigma >= 0 and rho equals the leading entry.
  bool in_pi() const;

  std::string str() const;  // comma-separated canonical form

  friend bool operator==(const SpectrumList& a, const SpectrumList& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const SpectrumList& a, const SpectrumList& b) {
    return !(a == b);
  }
  friend bool operator<(const SpectrumList& a, const SpectrumList& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Rational> entries_;
  Rational sigma_;
  Rational rho_;
  int p_ = 0;
};

/// The Pi_Q membership record computed by normalize().
struct PiMembership {
  Rational sigma;
  Rational rho;
  bool in_pi = false;
  int p = 0;
  int q = 0;
};

/// Sorts a raw list and reports its Pi_Q membership. Inputs that fail the
/// gate are still returned (the flag records the failure); only an empty
/// input is an error.
std::pair<SpectrumList, PiMembership> normalize(std::vector<Rational> raw);

PiMembership membership_of(const SpectrumList& s);

/// Multiset union, re-sorted.
SpectrumList union_of(const SpectrumList& a, const SpectrumList& b);

/// Removes one occurrence of each entry of b from a; throws
/// Error(kNotASublist) if b is not a sub-multiset of a.
SpectrumList set_minus(const SpectrumList& a, const SpectrumList& b);

/// Splits into (nonnegative part, negative part); zeros go left.
std::pair<SpectrumList, SpectrumList> split_signs(const SpectrumList& s);

bool is_submultiset(const SpectrumList& inner, const SpectrumList& outer);

}  // namespace qniep
