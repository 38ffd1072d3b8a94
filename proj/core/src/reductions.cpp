#include "qniep/reductions.hpp"

#include <algorithm>

#include "qniep/errors.hpp"

namespace qniep {

namespace {

// One row of subset-sum reachability, bit s = "some subset sums to s".
class BitRow {
 public:
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  // *this |= other << shift, truncated to the row width.
  void or_shifted(const BitRow& other, std::size_t shift) {
    const std::size_t word_shift = shift >> 6;
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    for (std::size_t w = words_.size(); w-- > word_shift;) {
      std::uint64_t v = other.words_[w - word_shift] << bit_shift;
      if (bit_shift && w > word_shift) {
        v |= other.words_[w - word_shift - 1] >> (64 - bit_shift);
      }
      words_[w] |= v;
    }
    trim();
  }

  void or_with(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

 private:
  void trim() {
    const unsigned used = static_cast<unsigned>(bits_ & 63);
    if (used && !words_.empty()) words_.back() &= (1ull << used) - 1;
  }

  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

IntegerList::IntegerList(std::vector<mpz_class> entries) : entries_(std::move(entries)) {
  for (const mpz_class& e : entries_) {
    if (e <= 0) {
      throw Error(ErrorCode::kParseError,
                  "integer list entries must be strictly positive, got " + e.get_str());
    }
  }
  std::sort(entries_.begin(), entries_.end(), [](const mpz_class& a, const mpz_class& b) {
    return b < a;
  });
}

IntegerList IntegerList::parse(std::string_view text) {
  std::vector<mpz_class> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token(comma == std::string_view::npos ? text.substr(start)
                                                      : text.substr(start, comma - start));
    std::erase(token, ' ');
    std::erase(token, '\t');
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kParseError,
                  "bad integer list entry '" + token + "' in '" + std::string(text) + "'");
    }
    entries.emplace_back(token, 10);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntegerList(std::move(entries));
}

mpz_class IntegerList::sigma() const {
  mpz_class s = 0;
  for (const mpz_class& e : entries_) s += e;
  return s;
}

std::string IntegerList::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].get_str();
  }
  return out;
}

std::optional<PartitionWitness> solve_partition(const IntegerList& I,
                                                const PartitionLimits& limits) {
  const mpz_class total = I.sigma();
  if (mpz_odd_p(total.get_mpz_t())) return std::nullopt;
  const mpz_class half = total / 2;
  if (!half.fits_ulong_p()) {
    throw Error(ErrorCode::kSearchTooLarge, "partition target does not fit the DP table");
  }
  const std::size_t target = half.get_ui();
  const std::size_t n = static_cast<std::size_t>(I.size());
  const std::uint64_t table_bits = static_cast<std::uint64_t>(n + 1) * (target + 1);
  if (table_bits > limits.max_table_bits) {
    throw Error(ErrorCode::kSearchTooLarge,
                "partition DP table of " + std::to_string(table_bits) +
                    " bits exceeds the configured cap");
  }

  // reach[i] holds the sums attainable from entries i..n-1 (suffix table, so
  // the witness can be reconstructed greedily from the front). Entries above
  // the target can never be taken; store a sentinel so they never match.
  std::vector<std::size_t> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = I[i] > half ? target + 1 : I[i].get_ui();
  }
  std::vector<BitRow> reach(n + 1, BitRow(target + 1));
  reach[n].set(0);
  for (std::size_t i = n; i-- > 0;) {
    reach[i] = reach[i + 1];
    if (values[i] <= target) reach[i].or_shifted(reach[i + 1], values[i]);
  }
  if (!reach[0].test(target)) return std::nullopt;

  // Greedy front-to-back inclusion yields the lexicographically first index
  // subset summing to the target.
  std::vector<mpz_class> side_j, side_k;
  std::size_t remaining = target;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] <= remaining && reach[i + 1].test(remaining - values[i])) {
      side_j.push_back(I[i]);
      remaining -= values[i];
    } else {
      side_k.push_back(I[i]);
    }
  }
  if (remaining != 0) {
    throw Error(ErrorCode::kInternalCheckFailed, "partition witness reconstruction drifted");
  }
  return PartitionWitness{IntegerList(std::move(side_j)), IntegerList(std::move(side_k))};
}

SpectrumList reduce_to_sp(const IntegerList& I) {
  const Rational half(mpz_class(I.sigma()), mpz_class(2));
  std::vector<Rational> entries{half, half};
  for (const mpz_class& e : I.entries()) entries.emplace_back(mpz_class(-e));
  return SpectrumList(std::move(entries));
}

SpectrumList reduce_to_pe1(const IntegerList& I) {
  const Rational half(mpz_class(I.sigma()), mpz_class(2));
  std::vector<Rational> entries{half, half, half, -half};
  for (const mpz_class& e : I.entries()) entries.emplace_back(mpz_class(-e));
  return SpectrumList(std::move(entries));
}

}  // namespace qniep
