#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qniep/spectrum.hpp"

namespace qniep {

/// Nonincreasing list of strictly positive integers: a Partition Problem
/// instance. Constructors sort and validate.
class IntegerList {
 public:
  IntegerList() = default;
  explicit IntegerList(std::vector<mpz_class> entries);

  static IntegerList parse(std::string_view text);  // comma-separated positives

  const std::vector<mpz_class>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const mpz_class& operator[](std::size_t i) const { return entries_[i]; }

  mpz_class sigma() const;
  std::string str() const;

  friend bool operator==(const IntegerList& a, const IntegerList& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<mpz_class> entries_;
};

/// A balanced split I = J u K with Sigma(J) = Sigma(K).
struct PartitionWitness {
  IntegerList side_j;
  IntegerList side_k;
};

struct PartitionLimits {
  /// Cap on the DP table size in bits ((n+1) rows of Sigma/2 + 1 bits);
  /// above it solve_partition throws Error(kSearchTooLarge).
  std::uint64_t max_table_bits = 1ull << 28;
};

/// Exact Partition Problem decision via subset-sum reachability over the
/// half-sum target (odd totals are an immediate no). The witness is
/// deterministic: J is the lexicographically first index subset that reaches
/// the target.
std::optional<PartitionWitness> solve_partition(const IntegerList& I,
                                                const PartitionLimits& limits = {});

/// The SP-shaped reduction image (Sigma/2, Sigma/2, -i_n, ..., -i_1). Always
/// emitted; when some entry exceeds Sigma/2 the image fails the Pi_Q gate and
/// downstream checkers report the context error, matching the fact that such
/// an instance is a trivial no.
SpectrumList reduce_to_sp(const IntegerList& I);

/// The Pe1-shaped reduction image
/// (Sigma/2, Sigma/2, Sigma/2, -i_n, ..., -i_1, -Sigma/2).
SpectrumList reduce_to_pe1(const IntegerList& I);

}  // namespace qniep
