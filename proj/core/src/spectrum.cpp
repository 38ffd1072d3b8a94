#include "qniep/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "qniep/errors.hpp"

namespace qniep {

SpectrumList::SpectrumList(std::vector<Rational> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  for (const Rational& e : entries_) {
    sigma_ += e;
    rho_ = qniep::max(rho_, e.abs());
    if (e.is_nonnegative()) ++p_;
  }
}

SpectrumList SpectrumList::parse(std::string_view text) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = comma == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
      token.remove_prefix(1);
    }
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) {
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw Error(ErrorCode::kParseError, "empty entry in list '" + std::string(text) + "'");
    }
    entries.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SpectrumList(std::move(entries));
}

bool SpectrumList::in_pi() const {
  if (entries_.empty()) return true;
  return sigma_.is_nonnegative() && rho_ == entries_.front();
}

std::string SpectrumList::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i].str();
  }
  return os.str();
}

std::pair<SpectrumList, PiMembership> normalize(std::vector<Rational> raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "normalize: empty input list");
  SpectrumList s(std::move(raw));
  return {s, membership_of(s)};
}

PiMembership membership_of(const SpectrumList& s) {
  return PiMembership{s.sigma(), s.rho(), s.in_pi(), s.p(), s.q()};
}

SpectrumList union_of(const SpectrumList& a, const SpectrumList& b) {
  std::vector<Rational> merged;
  merged.reserve(a.entries().size() + b.entries().size());
  std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
             std::back_inserter(merged),
             [](const Rational& x, const Rational& y) { return y < x; });
  return SpectrumList(std::move(merged));
}

SpectrumList set_minus(const SpectrumList& a, const SpectrumList& b) {
  std::vector<Rational> out;
  out.reserve(a.entries().size());
  std::size_t bi = 0;
  for (const Rational& e : a.entries()) {
    if (bi < b.entries().size() && b[bi] == e) {
      ++bi;
      continue;
    }
    out.push_back(e);
  }
  if (bi != b.entries().size()) {
    throw Error(ErrorCode::kNotASublist,
                "set_minus: " + b.str() + " is not a sub-multiset of " + a.str());
  }
  return SpectrumList(std::move(out));
}

std::pair<SpectrumList, SpectrumList> split_signs(const SpectrumList& s) {
  std::vector<Rational> pos, neg;
  for (const Rational& e : s.entries()) {
    (e.is_negative() ? neg : pos).push_back(e);
  }
  return {SpectrumList(std::move(pos)), SpectrumList(std::move(neg))};
}

bool is_submultiset(const SpectrumList& inner, const SpectrumList& outer) {
  std::size_t oi = 0;
  for (const Rational& e : inner.entries()) {
    while (oi < outer.entries().size() && e < outer[oi]) ++oi;
    if (oi >= outer.entries().size() || outer[oi] != e) return false;
    ++oi;
  }
  return true;
}

}  // namespace qniep
