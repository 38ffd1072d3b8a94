#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qniep/criteria_partition.hpp"
#include "qniep/spectrum.hpp"

namespace qniep {

enum class MoveKind { kUnion, kShiftTop, kGuo };

/// One step of a C-realizability derivation. Working lists are addressed by
/// 1-based index into the current working state; a union removes both
/// operands and appends the merged list at the end, shift/guo rewrite their
/// operand in place.
struct Move {
  MoveKind kind = MoveKind::kUnion;
  int list_a = 0;      // union: first operand; shift/guo: the target list
  int list_b = 0;      // union: second operand
  Rational epsilon;    // shift/guo: must be > 0
  int position = 0;    // guo: 1-based entry position, >= 2
  int sign = -1;       // guo: +1 or -1
};

struct MoveSequence {
  int start_count = 0;  // number of initial (0) lists
  std::vector<Move> moves;
};

/// The replay machine: start_count copies of (0), moves applied one by one.
/// Every list is re-sorted after a move, and the realizability invariants
/// (Sigma >= 0, top entry equals rho) are asserted rather than assumed.
class WorkingState {
 public:
  explicit WorkingState(int start_count);

  void apply(const Move& move);  // throws Error(kBadMove)

  const std::vector<SpectrumList>& lists() const { return lists_; }
  int count() const { return static_cast<int>(lists_.size()); }

 private:
  std::vector<SpectrumList> lists_;
};

/// Replays a sequence from its initial zeros; the final state must hold
/// exactly one list, which is returned. Throws Error(kBadMove) otherwise.
SpectrumList replay(const MoveSequence& seq);

/// True iff the sequence replays cleanly and produces exactly lambda.
/// Replay failures count as false.
bool verify_bms(const SpectrumList& lambda, const MoveSequence& seq);

/// Compiles an SP certificate into a move sequence realizing the same list:
/// each block is grown from (0) by union-a-zero + compensated-perturbation
/// steps (one per negative entry), topped up with a shift when the block sum
/// is positive, and the blocks are united at the end.
MoveSequence compile_sp_to_bms(const SpCertificate& cert);

struct BmsSearchResult {
  std::optional<MoveSequence> sequence;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  /// True when the restricted candidate space was exhausted before the node
  /// budget ran out. Either way an absent sequence is "not found", never a
  /// proof of non-membership.
  bool space_exhausted = false;
};

inline constexpr std::uint64_t kDefaultBmsBudget = 20000;

/// Best-effort certificate search: the SP compile route first, then a
/// bounded backward search undoing candidate moves with epsilon drawn from
/// the finite per-state set {lambda_1 - |lambda_j|, lambda_1 + lambda_j,
/// lambda_1}. Throws Error(kNotInContext) off-context.
BmsSearchResult search_bms(const SpectrumList& lambda,
                           std::uint64_t budget = kDefaultBmsBudget,
                           const SearchLimits& limits = {});

}  // namespace qniep
