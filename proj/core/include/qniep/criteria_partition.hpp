#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qniep/spectrum.hpp"

namespace qniep {

/// Bounds for the exponential certificate searches. Exceeding a bound throws
/// Error(kSearchTooLarge): these problems are NP-complete, so running out of
/// room must be visible, never a silent "non-member".
struct SearchLimits {
  std::uint64_t max_nodes = 1u << 26;  // SP / Pe1 assignment nodes
  int bo_max_negatives = 14;           // Bell-number search cap for Bo
};

/// Witness for Suleimanova-Perfect membership: a partition of Lambda into
/// blocks, each a Suleimanova list with nonnegative sum.
struct SpCertificate {
  std::vector<SpectrumList> blocks;
};

/// Witness for Perfect-1 membership: Lambda = (alpha, beta) u blocks with
/// alpha = rho(Lambda), beta <= 0, and every block nonpositive-summed with a
/// nonnegative head satisfying head + beta <= 0.
struct Pe1Certificate {
  Rational alpha;
  Rational beta;
  std::vector<SpectrumList> blocks;
};

/// Witness for Borobia membership: a set partition of the negative part
/// whose group sums, merged with the nonnegative part, land in the Kellogg
/// set.
struct BoCertificate {
  std::vector<SpectrumList> neg_groups;
};

/// Exhaustive search for an SP certificate. Deterministic: heads in
/// descending value, negatives in descending absolute value, first hit wins.
/// Throws Error(kNotInContext) off-context and Error(kSearchTooLarge) past
/// the node bound.
std::optional<SpCertificate> check_sp(const SpectrumList& s, const SearchLimits& limits = {});

/// Polynomial-time recheck of all SpCertificate invariants against s.
bool verify_sp(const SpectrumList& s, const SpCertificate& cert);

std::optional<Pe1Certificate> check_pe1(const SpectrumList& s, const SearchLimits& limits = {});

bool verify_pe1(const SpectrumList& s, const Pe1Certificate& cert);

/// Enumerates set partitions of the negative part in restricted-growth-string
/// order and returns the first one whose merged list is Kellogg.
std::optional<BoCertificate> check_bo(const SpectrumList& s, const SearchLimits& limits = {});

bool verify_bo(const SpectrumList& s, const BoCertificate& cert);

/// Merged list of the Borobia construction for a given grouping.
SpectrumList bo_merged_list(const SpectrumList& s, const std::vector<SpectrumList>& neg_groups);

namespace detail {

/// Calls visit(rgs) for every restricted growth string over `count` items,
/// in lexicographic order, until visit returns true; returns whether a visit
/// accepted. rgs[i] is the 0-based group of item i.
bool for_each_set_partition(int count, const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace detail

}  // namespace qniep
