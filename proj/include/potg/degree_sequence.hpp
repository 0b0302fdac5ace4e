#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "potg/errors.hpp"

namespace potg {

/// A nonincreasing sequence of nonnegative integers (a candidate degree
/// sequence). sigma() is the term sum, twice the edge count of any
/// realization.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  static DegreeSequence normalize(std::vector<int> raw) {
    for (int d : raw) {
      if (d < 0) throw input_error("degree sequence entry is negative");
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return DegreeSequence(std::move(raw));
  }

  /// Adopts an already nonincreasing vector without re-sorting.
  static DegreeSequence from_sorted(std::vector<int> terms) {
    if (!terms.empty() && (terms.front() < 0 || terms.back() < 0))
      throw input_error("degree sequence entry is negative");
    if (!std::is_sorted(terms.begin(), terms.end(), std::greater<>()))
      throw input_error("terms not sorted nonincreasing");
    return DegreeSequence(std::move(terms));
  }

  const std::vector<int>& terms() const { return terms_; }
  int length() const { return static_cast<int>(terms_.size()); }

  int sigma() const { return std::accumulate(terms_.begin(), terms_.end(), 0); }

  std::string to_string(char sep = ',') const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(terms_[i]);
    }
    return out;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  explicit DegreeSequence(std::vector<int> t) : terms_(std::move(t)) {}
  std::vector<int> terms_;
};

inline int sigma_sum(const DegreeSequence& s) { return s.sigma(); }

/// Erdos-Gallai test: even sum and, for every prefix length k,
///   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
inline bool is_graphical(const DegreeSequence& s) {
  const auto& d = s.terms();
  const int n = s.length();
  if (n == 0) return true;
  if (d.front() > n - 1) return false;
  long long total = 0;
  for (int x : d) total += x;
  if (total % 2 != 0) return false;
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

namespace detail {

// Nonincreasing fill of buf[pos..n), parts <= cap, summing to `remaining`.
// Visits in lexicographically descending order. fn returns false to stop.
template <typename Fn>
bool emit_bounded_partitions(std::vector<int>& buf, int pos, int remaining,
                             int cap, Fn& fn) {
  const int n = static_cast<int>(buf.size());
  const int slots = n - pos;
  if (slots == 0) return remaining != 0 || fn(buf);
  if (remaining > static_cast<long long>(cap) * slots) return true;
  const int hi = std::min(cap, remaining);
  const int lo = (remaining + slots - 1) / slots;
  for (int v = hi; v >= lo; --v) {
    buf[pos] = v;
    if (!emit_bounded_partitions(buf, pos + 1, remaining - v, v, fn)) return false;
  }
  return true;
}

}  // namespace detail

/// All nonincreasing length-n sequences with entries in [0, max_part] summing
/// to `sum`, lexicographically descending. fn(const std::vector<int>&) -> bool
/// (false stops the enumeration). Returns false iff stopped early.
template <typename Fn>
bool for_each_bounded_partition(int n, int sum, int max_part, Fn&& fn) {
  if (n < 0 || sum < 0 || max_part < 0) throw input_error("bad partition parameters");
  std::vector<int> buf(n);
  return detail::emit_bounded_partitions(buf, 0, sum, max_part, fn);
}

/// Every graphical sequence of length n with sum >= min_sum, each exactly
/// once, ordered by descending sum then lexicographically descending.
/// fn(const DegreeSequence&) -> bool; returns false iff stopped early.
template <typename Fn>
bool for_each_graphical_sequence(int n, int min_sum, Fn&& fn) {
  if (n < 1 || min_sum < 0) throw input_error("bad enumeration parameters");
  const int smax = n * (n - 1);
  for (int s = smax; s >= min_sum; s -= 2) {
    bool cont = for_each_bounded_partition(n, s, n - 1, [&](const std::vector<int>& p) {
      DegreeSequence ds = DegreeSequence::from_sorted(p);
      if (!is_graphical(ds)) return true;
      return static_cast<bool>(fn(ds));
    });
    if (!cont) return false;
  }
  return true;
}

inline std::vector<DegreeSequence> enumerate_graphical_sequences(int n, int min_sum) {
  std::vector<DegreeSequence> out;
  for_each_graphical_sequence(n, min_sum, [&](const DegreeSequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// Parses one line of the sequence text format: integers separated by commas
/// or whitespace, `#` starts a comment. Returns nullopt for blank lines.
inline std::optional<std::vector<int>> parse_sequence_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw input_error("bad integer token: " + tok);
    }
    if (used != tok.size()) throw input_error("bad integer token: " + tok);
    out.push_back(v);
    tok.clear();
  };
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (out.empty()) return std::nullopt;
  return out;
}

/// One sequence per nonblank line.
inline std::vector<DegreeSequence> read_sequences(std::istream& in) {
  std::vector<DegreeSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto raw = parse_sequence_line(line)) out.push_back(DegreeSequence::normalize(*raw));
  }
  return out;
}

}  // namespace potg
