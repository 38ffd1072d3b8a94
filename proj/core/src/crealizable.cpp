#include "qniep/crealizable.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "qniep/criteria_linear.hpp"
#include "qniep/errors.hpp"

namespace qniep {

namespace {

[[noreturn]] void bad_move(const std::string& why) {
  throw Error(ErrorCode::kBadMove, "bad move: " + why);
}

void check_working_invariants(const SpectrumList& s) {
  if (s.sigma().is_negative() || (!s.empty() && s.rho() != s[0])) {
    throw Error(ErrorCode::kInternalCheckFailed,
                "working list " + s.str() + " violates the replay invariants");
  }
}

// A derivation is built as a tree first and flattened to indexed moves once;
// that keeps the union index bookkeeping in a single place.
struct Plan {
  enum Kind { kLeafZero, kShift, kGuo, kUnion } kind;
  std::shared_ptr<const Plan> left;   // unary child or left union operand
  std::shared_ptr<const Plan> right;  // right union operand
  Rational epsilon;
  int position = 0;
  int sign = -1;
};
using PlanPtr = std::shared_ptr<const Plan>;

PlanPtr plan_leaf() {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::kLeafZero;
  return p;
}

PlanPtr plan_shift(PlanPtr child, Rational eps) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::kShift;
  p->left = std::move(child);
  p->epsilon = std::move(eps);
  return p;
}

PlanPtr plan_guo(PlanPtr child, Rational eps, int position, int sign) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::kGuo;
  p->left = std::move(child);
  p->epsilon = std::move(eps);
  p->position = position;
  p->sign = sign;
  return p;
}

PlanPtr plan_union(PlanPtr a, PlanPtr b) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::kUnion;
  p->left = std::move(a);
  p->right = std::move(b);
  return p;
}

int count_leaves(const PlanPtr& p) {
  if (p->kind == Plan::kLeafZero) return 1;
  int n = count_leaves(p->left);
  if (p->kind == Plan::kUnion) n += count_leaves(p->right);
  return n;
}

// Flattens a plan to indexed moves by simulating the working state the same
// way replay() does (unions remove both operands and append the merged
// list). Slots are tracked by per-occurrence tokens, not node identity: the
// search memoizes plans, so one subtree may appear several times and each
// occurrence must claim its own zeros.
class PlanLowering {
 public:
  MoveSequence lower(const PlanPtr& root) {
    seq_.start_count = count_leaves(root);
    slots_.clear();
    for (int i = 0; i < seq_.start_count; ++i) slots_.push_back(i);
    next_leaf_ = 0;
    next_token_ = seq_.start_count;
    emit(root);
    return std::move(seq_);
  }

 private:
  int index_of(int token) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i] == token) return static_cast<int>(i) + 1;  // 1-based
    }
    throw Error(ErrorCode::kInternalCheckFailed, "plan lowering lost a slot");
  }

  // Emits the node's moves and returns the token of the slot holding its list.
  int emit(const PlanPtr& p) {
    switch (p->kind) {
      case Plan::kLeafZero:
        return next_leaf_++;  // tokens 0..start_count-1 are the initial zeros
      case Plan::kShift: {
        int token = emit(p->left);
        seq_.moves.push_back(Move{MoveKind::kShiftTop, index_of(token), 0, p->epsilon, 0, -1});
        return token;
      }
      case Plan::kGuo: {
        int token = emit(p->left);
        seq_.moves.push_back(
            Move{MoveKind::kGuo, index_of(token), 0, p->epsilon, p->position, p->sign});
        return token;
      }
      case Plan::kUnion: {
        int ta = emit(p->left);
        int tb = emit(p->right);
        int i = index_of(ta);
        int j = index_of(tb);
        seq_.moves.push_back(Move{MoveKind::kUnion, i, j, Rational(0), 0, -1});
        int lo = std::min(i, j) - 1;
        int hi = std::max(i, j) - 1;
        slots_.erase(slots_.begin() + hi);
        slots_.erase(slots_.begin() + lo);
        slots_.push_back(next_token_);
        return next_token_++;
      }
    }
    throw Error(ErrorCode::kInternalCheckFailed, "unknown plan node");
  }

  MoveSequence seq_;
  std::vector<int> slots_;
  int next_leaf_ = 0;
  int next_token_ = 0;
};

// Builds the block-construction plan shared by the SP compiler and the
// search fast path. Block entries are nonincreasing, head first.
PlanPtr plan_from_su_block(const SpectrumList& block) {
  PlanPtr acc = plan_leaf();
  for (int j = 1; j < block.size(); ++j) {
    const Rational& mu = block[static_cast<std::size_t>(j)];
    // Union a fresh zero, then perturb: the zero sits at position 2 of the
    // merged list (head >= 0, negatives below), gains -eps while the head
    // gains +eps.
    acc = plan_guo(plan_union(acc, plan_leaf()), -mu, 2, -1);
  }
  Rational slack = block.sigma();
  if (slack.is_positive()) acc = plan_shift(acc, slack);
  return acc;
}

PlanPtr plan_from_sp_certificate(const SpCertificate& cert) {
  PlanPtr acc;
  for (const SpectrumList& block : cert.blocks) {
    PlanPtr b = plan_from_su_block(block);
    acc = acc ? plan_union(acc, b) : b;
  }
  return acc;
}

}  // namespace

WorkingState::WorkingState(int start_count) {
  if (start_count <= 0) bad_move("start_count must be positive");
  lists_.assign(static_cast<std::size_t>(start_count),
                SpectrumList(std::vector<Rational>{Rational(0)}));
}

void WorkingState::apply(const Move& move) {
  auto check_index = [&](int i) {
    if (i < 1 || i > count()) bad_move("list index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i - 1);
  };
  switch (move.kind) {
    case MoveKind::kUnion: {
      std::size_t a = check_index(move.list_a);
      std::size_t b = check_index(move.list_b);
      if (a == b) bad_move("union of a list with itself");
      SpectrumList merged = union_of(lists_[a], lists_[b]);
      if (a < b) std::swap(a, b);
      lists_.erase(lists_.begin() + static_cast<std::ptrdiff_t>(a));
      lists_.erase(lists_.begin() + static_cast<std::ptrdiff_t>(b));
      lists_.push_back(std::move(merged));
      break;
    }
    case MoveKind::kShiftTop: {
      std::size_t a = check_index(move.list_a);
      if (!move.epsilon.is_positive()) bad_move("shift epsilon must be positive");
      std::vector<Rational> entries = lists_[a].entries();
      entries.front() += move.epsilon;
      lists_[a] = SpectrumList(std::move(entries));
      break;
    }
    case MoveKind::kGuo: {
      std::size_t a = check_index(move.list_a);
      if (!move.epsilon.is_positive()) bad_move("guo epsilon must be positive");
      if (move.sign != 1 && move.sign != -1) bad_move("guo sign must be +1 or -1");
      std::vector<Rational> entries = lists_[a].entries();
      if (move.position < 2 || move.position > static_cast<int>(entries.size())) {
        bad_move("guo position " + std::to_string(move.position) + " out of range");
      }
      entries.front() += move.epsilon;
      Rational& target = entries[static_cast<std::size_t>(move.position - 1)];
      target = move.sign > 0 ? target + move.epsilon : target - move.epsilon;
      lists_[a] = SpectrumList(std::move(entries));
      break;
    }
  }
  check_working_invariants(lists_.back());
  if (move.kind != MoveKind::kUnion) {
    check_working_invariants(lists_[static_cast<std::size_t>(move.list_a - 1)]);
  }
}

SpectrumList replay(const MoveSequence& seq) {
  WorkingState state(seq.start_count);
  for (const Move& move : seq.moves) state.apply(move);
  if (state.count() != 1) {
    bad_move("final state has " + std::to_string(state.count()) + " lists, expected 1");
  }
  return state.lists().front();
}

bool verify_bms(const SpectrumList& lambda, const MoveSequence& seq) {
  try {
    return replay(seq) == lambda;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadMove) return false;
    throw;
  }
}

MoveSequence compile_sp_to_bms(const SpCertificate& cert) {
  if (cert.blocks.empty()) {
    throw Error(ErrorCode::kInvalidCertificate, "SP certificate has no blocks");
  }
  for (const SpectrumList& block : cert.blocks) {
    if (!detail::is_su_block(block)) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "block " + block.str() + " is not a Suleimanova list with Sigma >= 0");
    }
  }
  return PlanLowering().lower(plan_from_sp_certificate(cert));
}

namespace {

class BackwardSearch {
 public:
  BackwardSearch(std::uint64_t budget, const SearchLimits& limits)
      : budget_(budget), limits_(limits) {}

  std::optional<PlanPtr> solve(const SpectrumList& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::optional<PlanPtr> result = solve_uncached(s);
    memo_.emplace(s, result);
    return result;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool charge() {
    if (nodes_ >= budget_) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  static bool valid_working_list(const SpectrumList& s) {
    return !s.empty() && s.sigma().is_nonnegative() && s.rho() == s[0];
  }

  std::optional<PlanPtr> solve_uncached(const SpectrumList& s) {
    if (s.size() == 1 && s[0].is_zero()) return plan_leaf();

    // Fast path: a Suleimanova-Perfect partition compiles directly.
    try {
      if (auto cert = check_sp(s, limits_)) return plan_from_sp_certificate(*cert);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchTooLarge) throw;
    }

    const int n = s.size();
    const Rational& top = s[0];

    // Candidate epsilons: undo targets that re-create a zero or a tie with
    // another entry's absolute value.
    std::vector<Rational> eps_set;
    auto add_eps = [&](const Rational& e) {
      if (e.is_positive() && std::find(eps_set.begin(), eps_set.end(), e) == eps_set.end()) {
        eps_set.push_back(e);
      }
    };
    for (int j = 1; j < n; ++j) {
      add_eps(top - s[static_cast<std::size_t>(j)].abs());
      add_eps(top + s[static_cast<std::size_t>(j)]);
    }
    add_eps(top);
    std::sort(eps_set.begin(), eps_set.end());

    // Undo a compensated perturbation: predecessor top is top - eps, entry j
    // rewinds by -sign * eps.
    for (const Rational& eps : eps_set) {
      const Rational prev_top = top - eps;
      for (int j = 1; j < n; ++j) {
        for (int sign : {-1, +1}) {
          if (!charge()) return std::nullopt;
          std::vector<Rational> prev = s.entries();
          prev[0] = prev_top;
          Rational& entry = prev[static_cast<std::size_t>(j)];
          entry = sign > 0 ? entry - eps : entry + eps;
          SpectrumList candidate(std::move(prev));
          if (!valid_working_list(candidate) || candidate[0] != prev_top) continue;
          if (auto sub = solve(candidate)) {
            // Position of the rewound entry in the predecessor ordering.
            int pos = position_in(candidate, sign > 0 ? s[static_cast<std::size_t>(j)] - eps
                                                      : s[static_cast<std::size_t>(j)] + eps);
            if (pos >= 2) return plan_guo(*sub, eps, pos, sign);
          }
        }
      }
    }

    // Undo a top shift.
    for (const Rational& eps : eps_set) {
      if (!charge()) return std::nullopt;
      std::vector<Rational> prev = s.entries();
      prev[0] = top - eps;
      SpectrumList candidate(std::move(prev));
      if (!valid_working_list(candidate) || candidate[0] != top - eps) continue;
      if (auto sub = solve(candidate)) return plan_shift(*sub, eps);
    }

    // Undo a union: split into two valid working lists.
    if (n >= 2) {
      std::set<std::vector<Rational>> seen;
      const std::uint32_t masks = 1u << (n - 1);
      for (std::uint32_t mask = 1; mask < masks; ++mask) {
        if (!charge()) return std::nullopt;
        std::vector<Rational> a{s[0]}, b;
        for (int j = 1; j < n; ++j) {
          if (mask & (1u << (j - 1))) b.push_back(s[static_cast<std::size_t>(j)]);
          else a.push_back(s[static_cast<std::size_t>(j)]);
        }
        if (b.empty()) continue;
        if (!seen.insert(b).second) continue;
        SpectrumList left(std::move(a)), right(std::move(b));
        if (!valid_working_list(left) || !valid_working_list(right)) continue;
        auto lp = solve(left);
        if (!lp) continue;
        auto rp = solve(right);
        if (!rp) continue;
        return plan_union(*lp, *rp);
      }
    }
    return std::nullopt;
  }

  // 1-based position of `value` in the sorted candidate, preferring the
  // latest occurrence so the slot is never the forced top.
  static int position_in(const SpectrumList& s, const Rational& value) {
    for (int i = s.size(); i >= 1; --i) {
      if (s[static_cast<std::size_t>(i - 1)] == value) return i;
    }
    return 0;
  }

  std::uint64_t budget_;
  SearchLimits limits_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::map<SpectrumList, std::optional<PlanPtr>> memo_;
};

}  // namespace

BmsSearchResult search_bms(const SpectrumList& lambda, std::uint64_t budget,
                           const SearchLimits& limits) {
  detail::require_in_pi(lambda);
  BackwardSearch search(budget, limits);
  BmsSearchResult result;
  result.budget = budget;
  if (auto plan = search.solve(lambda)) {
    result.sequence = PlanLowering().lower(*plan);
  }
  result.nodes = search.nodes();
  result.space_exhausted = !search.budget_hit();
  return result;
}

}  // namespace qniep
