#include "qniep/criteria_partition.hpp"

#include <algorithm>
#include <string>

#include "qniep/criteria_linear.hpp"
#include "qniep/errors.hpp"

namespace qniep {

namespace {

struct NodeBudget {
  std::uint64_t used = 0;
  std::uint64_t cap;

  explicit NodeBudget(std::uint64_t cap) : cap(cap) {}

  void charge() {
    if (++used > cap) {
      throw Error(ErrorCode::kSearchTooLarge,
                  "partition search exceeded " + std::to_string(cap) + " nodes");
    }
  }
};

// Negative entries ordered by descending absolute value.
std::vector<Rational> negatives_desc_abs(const SpectrumList& s) {
  std::vector<Rational> negs;
  for (const Rational& e : s.entries()) {
    if (e.is_negative()) negs.push_back(e);
  }
  std::reverse(negs.begin(), negs.end());
  return negs;
}

// Depth-first assignment of negatives to heads for the SP search. rem[h] is
// the head's remaining capacity (head value minus assigned magnitude); a
// block stays Suleimanova-with-nonnegative-sum iff rem[h] >= 0 throughout.
bool assign_sp(const std::vector<Rational>& negs, std::size_t t, std::vector<Rational>& rem,
               Rational total_rem, std::vector<int>& pick, NodeBudget& budget) {
  if (t == negs.size()) return true;
  const Rational need = negs[t].abs();
  // Mass prune: remaining magnitudes cannot exceed total remaining capacity.
  Rational total_need = need;
  for (std::size_t u = t + 1; u < negs.size(); ++u) total_need += negs[u].abs();
  if (total_rem < total_need) return false;

  std::vector<Rational> tried;
  for (std::size_t h = 0; h < rem.size(); ++h) {
    if (rem[h] < need) continue;
    // Heads with equal remaining capacity lead to interchangeable subtrees.
    if (std::find(tried.begin(), tried.end(), rem[h]) != tried.end()) continue;
    tried.push_back(rem[h]);
    budget.charge();
    rem[h] -= need;
    pick[t] = static_cast<int>(h);
    if (assign_sp(negs, t + 1, rem, total_rem - need, pick, budget)) return true;
    rem[h] += need;
  }
  return false;
}

// Bin-covering DFS for the Pe1 search. deficit[h] is how much negative
// magnitude the positive head h still needs; zero-pool (when allowed) absorbs
// anything. Succeeds once every deficit is cleared, dumping leftovers.
bool assign_pe1(const std::vector<Rational>& negs, std::size_t t, std::vector<Rational>& deficit,
                bool has_zero_pool, std::vector<int>& pick, NodeBudget& budget) {
  Rational total_deficit;
  for (const Rational& d : deficit) total_deficit += d;
  if (total_deficit.is_zero()) {
    // Covered. Leftover negatives can ride along with any head.
    int dump = has_zero_pool ? -1 : (deficit.empty() ? -2 : 0);
    if (dump == -2 && t < negs.size()) return false;  // negatives but no block to hold them
    for (std::size_t u = t; u < negs.size(); ++u) pick[u] = dump;
    return true;
  }
  if (t == negs.size()) return false;
  Rational total_mass;
  for (std::size_t u = t; u < negs.size(); ++u) total_mass += negs[u].abs();
  if (total_mass < total_deficit) return false;

  const Rational need = negs[t].abs();
  std::vector<Rational> tried;
  for (std::size_t h = 0; h < deficit.size(); ++h) {
    if (std::find(tried.begin(), tried.end(), deficit[h]) != tried.end()) continue;
    tried.push_back(deficit[h]);
    budget.charge();
    const Rational saved = deficit[h];
    deficit[h] = need < saved ? saved - need : Rational(0);
    pick[t] = static_cast<int>(h);
    if (assign_pe1(negs, t + 1, deficit, has_zero_pool, pick, budget)) return true;
    deficit[h] = saved;
  }
  if (has_zero_pool) {
    budget.charge();
    pick[t] = -1;
    if (assign_pe1(negs, t + 1, deficit, has_zero_pool, pick, budget)) return true;
  }
  return false;
}

}  // namespace

namespace detail {

bool for_each_set_partition(int count, const std::function<bool(const std::vector<int>&)>& visit) {
  if (count == 0) {
    std::vector<int> empty;
    return visit(empty);
  }
  std::vector<int> rgs(static_cast<std::size_t>(count), 0);
  while (true) {
    if (visit(rgs)) return true;
    // Advance to the next restricted growth string in lexicographic order.
    int i = count - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i <= 0) return false;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < count; ++j) rgs[static_cast<std::size_t>(j)] = 0;
  }
}

}  // namespace detail

std::optional<SpCertificate> check_sp(const SpectrumList& s, const SearchLimits& limits) {
  detail::require_in_pi(s);
  // Every Suleimanova block holds exactly one nonnegative entry, so the
  // nonnegative entries are the block heads and the search is over
  // assignments of negatives to heads.
  const int p = s.p();
  std::vector<Rational> heads(s.entries().begin(), s.entries().begin() + p);
  std::vector<Rational> negs = negatives_desc_abs(s);

  std::vector<Rational> rem = heads;
  Rational total_rem;
  for (const Rational& h : rem) total_rem += h;
  std::vector<int> pick(negs.size(), -1);
  NodeBudget budget(limits.max_nodes);
  if (!assign_sp(negs, 0, rem, total_rem, pick, budget)) return std::nullopt;

  std::vector<std::vector<Rational>> groups(static_cast<std::size_t>(p));
  for (int h = 0; h < p; ++h) groups[static_cast<std::size_t>(h)].push_back(heads[static_cast<std::size_t>(h)]);
  for (std::size_t t = 0; t < negs.size(); ++t) {
    groups[static_cast<std::size_t>(pick[t])].push_back(negs[t]);
  }
  SpCertificate cert;
  for (auto& g : groups) cert.blocks.emplace_back(std::move(g));
  return cert;
}

bool verify_sp(const SpectrumList& s, const SpCertificate& cert) {
  if (cert.blocks.empty()) return s.empty();
  SpectrumList merged;
  for (const SpectrumList& block : cert.blocks) {
    if (!detail::is_su_block(block)) return false;
    merged = union_of(merged, block);
  }
  return merged == s;
}

std::optional<Pe1Certificate> check_pe1(const SpectrumList& s, const SearchLimits& limits) {
  detail::require_in_pi(s);
  const Rational alpha = s[0];  // rho(Lambda), forced
  std::vector<Rational> rest(s.entries().begin() + 1, s.entries().end());

  // Candidate betas: distinct nonpositive values present in the remainder,
  // most negative first.
  std::vector<Rational> beta_candidates;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    if (it->is_positive()) break;
    if (beta_candidates.empty() || beta_candidates.back() != *it) beta_candidates.push_back(*it);
  }

  NodeBudget budget(limits.max_nodes);
  for (const Rational& beta : beta_candidates) {
    std::vector<Rational> remaining = rest;
    remaining.erase(std::find(remaining.begin(), remaining.end(), beta));

    std::vector<Rational> pos_heads, zeros, negs;
    for (const Rational& e : remaining) {
      if (e.is_positive()) pos_heads.push_back(e);
      else if (e.is_zero()) zeros.push_back(e);
      else negs.push_back(e);
    }
    // Positive entries can only serve as heads, and every head must satisfy
    // head + beta <= 0.
    bool heads_ok = true;
    for (const Rational& h : pos_heads) {
      if ((h + beta).is_positive()) { heads_ok = false; break; }
    }
    if (!heads_ok) continue;
    if (pos_heads.empty() && zeros.empty() && !negs.empty()) continue;

    std::sort(negs.begin(), negs.end());  // ascending value = descending magnitude
    std::vector<Rational> deficit = pos_heads;
    std::vector<int> pick(negs.size(), -1);
    if (!assign_pe1(negs, 0, deficit, !zeros.empty(), pick, budget)) continue;

    // Assemble blocks: positive heads with their negatives, then zeros as
    // singleton heads; pool negatives ride with the first zero.
    std::vector<std::vector<Rational>> groups(pos_heads.size());
    for (std::size_t h = 0; h < pos_heads.size(); ++h) groups[h].push_back(pos_heads[h]);
    std::vector<std::vector<Rational>> zero_groups(zeros.size());
    for (std::size_t z = 0; z < zeros.size(); ++z) zero_groups[z].push_back(zeros[z]);
    for (std::size_t t = 0; t < negs.size(); ++t) {
      if (pick[t] >= 0) groups[static_cast<std::size_t>(pick[t])].push_back(negs[t]);
      else zero_groups.front().push_back(negs[t]);
    }
    Pe1Certificate cert;
    cert.alpha = alpha;
    cert.beta = beta;
    for (auto& g : groups) cert.blocks.emplace_back(std::move(g));
    for (auto& g : zero_groups) cert.blocks.emplace_back(std::move(g));
    return cert;
  }
  return std::nullopt;
}

bool verify_pe1(const SpectrumList& s, const Pe1Certificate& cert) {
  if (s.empty()) return false;
  if (cert.alpha != s.rho()) return false;
  if (cert.beta.is_positive()) return false;
  SpectrumList merged(std::vector<Rational>{cert.alpha, cert.beta});
  for (const SpectrumList& block : cert.blocks) {
    if (block.empty()) return false;
    const Rational& head = block[0];
    if (head.is_negative()) return false;
    for (int i = 1; i < block.size(); ++i) {
      if (block[static_cast<std::size_t>(i)].is_positive()) return false;
    }
    if (block.sigma().is_positive()) return false;
    if ((head + cert.beta).is_positive()) return false;
    merged = union_of(merged, block);
  }
  return merged == s;
}

SpectrumList bo_merged_list(const SpectrumList& s, const std::vector<SpectrumList>& neg_groups) {
  auto [pos, neg] = split_signs(s);
  std::vector<Rational> merged = pos.entries();
  for (const SpectrumList& g : neg_groups) merged.push_back(g.sigma());
  return SpectrumList(std::move(merged));
}

std::optional<BoCertificate> check_bo(const SpectrumList& s, const SearchLimits& limits) {
  detail::require_in_pi(s);
  auto [pos, neg] = split_signs(s);
  if (neg.size() > limits.bo_max_negatives) {
    throw Error(ErrorCode::kSearchTooLarge,
                "Borobia search over " + std::to_string(neg.size()) +
                    " negatives exceeds the configured bound of " +
                    std::to_string(limits.bo_max_negatives));
  }
  std::optional<BoCertificate> found;
  detail::for_each_set_partition(neg.size(), [&](const std::vector<int>& rgs) {
    int group_count = 0;
    for (int g : rgs) group_count = std::max(group_count, g + 1);
    std::vector<std::vector<Rational>> groups(static_cast<std::size_t>(group_count));
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      groups[static_cast<std::size_t>(rgs[i])].push_back(neg[i]);
    }
    std::vector<SpectrumList> neg_groups;
    neg_groups.reserve(groups.size());
    for (auto& g : groups) neg_groups.emplace_back(std::move(g));
    if (detail::ke_holds(bo_merged_list(s, neg_groups))) {
      found = BoCertificate{std::move(neg_groups)};
      return true;
    }
    return false;
  });
  return found;
}

bool verify_bo(const SpectrumList& s, const BoCertificate& cert) {
  if (s.empty()) return false;
  auto [pos, neg] = split_signs(s);
  SpectrumList merged_negs;
  for (const SpectrumList& g : cert.neg_groups) {
    if (g.empty()) return false;
    for (const Rational& e : g.entries()) {
      if (!e.is_negative()) return false;
    }
    merged_negs = union_of(merged_negs, g);
  }
  if (merged_negs != neg) return false;
  return detail::ke_holds(bo_merged_list(s, cert.neg_groups));
}

}  // namespace qniep
