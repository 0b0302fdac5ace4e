#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "potg/degree_sequence.hpp"
#include "potg/errors.hpp"
#include "potg/graph.hpp"
#include "potg/pattern.hpp"
#include "potg/switchspace.hpp"

namespace potg {

/// Result of the brute-force sigma(H, n) computation. sigma is the smallest
/// even l such that every n-term graphical sequence with sum >= l is
/// potentially H-graphic; the witness attains sigma - 2 without being
/// potentially H. Certification requires zero budget-limited decisions.
struct SigmaRecord {
  PatternGraph pattern{PatternKind::cycle, 3};
  int n = 0;
  bool impossible = false;  // H does not fit in any n-vertex graph
  int sigma = 0;
  std::optional<DegreeSequence> witness;
  std::uint64_t sequences_checked = 0;
  std::uint64_t unknown_count = 0;

  bool certified() const { return unknown_count == 0; }

  friend bool operator==(const SigmaRecord&, const SigmaRecord&) = default;
};

namespace detail {

struct LevelScan {
  std::size_t first_no = SIZE_MAX;
  std::uint64_t decided = 0;
  std::uint64_t unknowns = 0;
};

// Decides is_potentially for a whole sum level, in enumeration order. The
// reported first_no and unknown tally are independent of the worker count.
inline LevelScan scan_level(const std::vector<DegreeSequence>& level, const PatternGraph& h,
                            const SearchBudget& budget, int jobs) {
  LevelScan out;
  if (level.empty()) return out;
  std::vector<std::uint8_t> outcome(level.size(), 0xff);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto d = is_potentially(level[i], h, budget);
      outcome[i] = static_cast<std::uint8_t>(d.value);
      if (d.value == Decision::no) {
        out.first_no = i;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= level.size() || i > best.load()) break;
        const auto d = is_potentially(level[i], h, budget);
        outcome[i] = static_cast<std::uint8_t>(d.value);
        if (d.value == Decision::no) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    const int nw = std::min<std::size_t>(jobs, level.size());
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    out.first_no = best.load();
  }
  const std::size_t last =
      out.first_no == SIZE_MAX ? level.size() - 1 : out.first_no;
  for (std::size_t i = 0; i <= last; ++i)
    if (outcome[i] == static_cast<std::uint8_t>(Decision::unknown)) ++out.unknowns;
  out.decided = last + 1;
  return out;
}

}  // namespace detail

/// Scans graphical sequences in decreasing-sum order; the first sequence that
/// is not potentially H pins sigma at its sum plus 2. Budget exhaustion never
/// yields a silently wrong sigma: it shows up in unknown_count.
inline SigmaRecord sigma_oracle(const PatternGraph& h, int n,
                                const SearchBudget& budget = {}, int jobs = 1) {
  if (n < 1) throw input_error("sigma_oracle: n must be >= 1");
  SigmaRecord rec;
  rec.pattern = h;
  rec.n = n;
  if (h.min_vertices() > n) {
    rec.impossible = true;
    return rec;
  }
  for (int s = n * (n - 1); s >= 0; s -= 2) {
    std::vector<DegreeSequence> level;
    for_each_bounded_partition(n, s, n - 1, [&](const std::vector<int>& p) {
      DegreeSequence ds = DegreeSequence::from_sorted(p);
      if (is_graphical(ds)) level.push_back(std::move(ds));
      return true;
    });
    const auto scan = detail::scan_level(level, h, budget, jobs);
    rec.sequences_checked += scan.decided;
    rec.unknown_count += scan.unknowns;
    if (scan.first_no != SIZE_MAX) {
      rec.sigma = s + 2;
      rec.witness = level[scan.first_no];
      return rec;
    }
  }
  rec.sigma = 0;  // every graphical sequence of this length is potentially H
  return rec;
}

struct FormulaValue {
  int value = 0;
  bool valid = false;  // true only inside the stated parameter range

  friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

/// sigma(C_{2m+1}, n) = m(2n-m-1)+2, stated for m >= 3, n >= 3m; the m = 2
/// case coincides with the known sigma(C_5, n) = 4n-4 for n >= 5.
inline FormulaValue formula_odd_cycle(int m, int n) {
  if (m < 1 || n < 1) throw input_error("formula parameters must be positive");
  return {m * (2 * n - m - 1) + 2, (m >= 3 && n >= 3 * m) || (m == 2 && n >= 5)};
}

/// sigma(C_{2m+2}, n) = m(2n-m-1)+4, stated for m >= 3, n >= 5m-2; the m = 2
/// case coincides with sigma(C_6, n) = 4n-2 for n >= 7.
inline FormulaValue formula_even_cycle(int m, int n) {
  if (m < 1 || n < 1) throw input_error("formula parameters must be positive");
  return {m * (2 * n - m - 1) + 4, (m >= 3 && n >= 5 * m - 2) || (m == 2 && n >= 7)};
}

/// Upper bound for sigma(C_{2m+2}, 3m+t): m(2n-m-1) + 2m + 2 - 2*floor(t/2).
inline int lemma4_upper_bound(int m, int t) {
  if (m < 3 || t < 0 || t > 2 * m - 2) throw input_error("lemma4: require m >= 3, 0 <= t <= 2m-2");
  const int n = 3 * m + t;
  return m * (2 * n - m - 1) + 2 * m + 2 - 2 * (t / 2);
}

/// The closed-form threshold for patterns where one is known, with its
/// validity range. nullopt when no closed form is in scope.
inline std::optional<FormulaValue> closed_form_sigma(const PatternGraph& h, int n) {
  switch (h.kind) {
    case PatternKind::matching: {
      const int p = h.size;
      return FormulaValue{(p - 1) * (2 * n - 2) + 2, p >= 2 && n >= 2 * p};
    }
    case PatternKind::clique:
      if (h.size == 3) return FormulaValue{2 * n, n >= 6};
      return std::nullopt;
    case PatternKind::cycle: {
      const int k = h.size;
      if (k == 3) return FormulaValue{2 * n, n >= 6};
      if (k == 4) return FormulaValue{2 * ((3 * n - 1) / 2), n >= 4};
      if (k == 5) return formula_odd_cycle(2, n);
      if (k == 6) {
        if (n == 6) return FormulaValue{24, true};
        return formula_even_cycle(2, n);
      }
      if (k % 2 == 1) return formula_odd_cycle((k - 1) / 2, n);
      return formula_even_cycle((k - 2) / 2, n);
    }
  }
  return std::nullopt;
}

/// Machine check of the extremal constructions: the join graph's degree
/// sequence admits no realization containing the target cycle, so its sum
/// (threshold - 2) bounds sigma from below.
struct LowerBoundReport {
  bool even_kind = false;
  int m = 0;
  int n = 0;
  DegreeSequence sequence;
  int sigma_sequence = 0;
  int threshold = 0;
  int target_cycle = 0;
  std::uint64_t realizations = 0;
  bool cycle_free = false;
  bool certified = false;
};

inline LowerBoundReport verify_lower_bound(bool even_kind, int m, int n,
                                           const SearchBudget& budget = {}) {
  LowerBoundReport rep;
  rep.even_kind = even_kind;
  rep.m = m;
  rep.n = n;
  const SimpleGraph g = even_kind ? construct_join_k2(m, n) : construct_join_empty(m, n);
  rep.sequence = degree_sequence_of(g);
  rep.sigma_sequence = rep.sequence.sigma();
  rep.threshold = m * (2 * n - m - 1) + (even_kind ? 4 : 2);
  rep.target_cycle = even_kind ? 2 * m + 2 : 2 * m + 1;
  bool found = false;
  const auto st = walk_realizations(rep.sequence, budget, [&](const SimpleGraph& r) {
    ++rep.realizations;
    if (rep.target_cycle <= n && find_cycle(r, rep.target_cycle)) {
      found = true;
      return false;
    }
    return true;
  });
  rep.cycle_free = !found;
  rep.certified = st.status == WalkStatus::exhausted && rep.cycle_free &&
                  rep.sigma_sequence == rep.threshold - 2;
  return rep;
}

enum class Theorem2Result { holds, fails, unknown };

/// Hypothesis check: (i) some realization has a (2m+1)-cycle whose outside
/// vertices all have degree m and form an independent set; (ii) no
/// realization contains a (2m+2)-cycle. The cycle in (i) is chosen
/// existentially over (realization, cycle) pairs.
inline Theorem2Result check_theorem2_hypotheses(const DegreeSequence& s, int m,
                                                const SearchBudget& budget = {}) {
  if (m < 3) throw input_error("theorem 2 requires m >= 3");
  if (!is_graphical(s)) throw non_graphical_error("sequence is not graphical");
  const int k = 2 * m + 1;
  const int n = s.length();
  if (n < k) return Theorem2Result::fails;
  int count_m = 0;
  for (int d : s.terms())
    if (d == m) ++count_m;
  if (count_m < n - k) return Theorem2Result::fails;  // outside vertices need degree m

  if (n >= 2 * m + 2) {
    const auto pii = is_potentially(s, PatternGraph::cycle(2 * m + 2), budget);
    if (pii.value == Decision::yes) return Theorem2Result::fails;
    if (pii.value == Decision::unknown) return Theorem2Result::unknown;
  }

  bool found = false;
  const auto st = walk_realizations(s, budget, [&](const SimpleGraph& g) {
    const bool stopped = !for_each_cycle(g, k, [&](const std::vector<int>& cyc) {
      std::uint64_t cmask = 0;
      for (int v : cyc) cmask |= std::uint64_t{1} << v;
      const std::uint64_t outside = g.vertex_mask() & ~cmask;
      std::uint64_t os = outside;
      while (os) {
        const int v = std::countr_zero(os);
        os &= os - 1;
        if (g.degree(v) != m) return true;
        if (g.neighbor_mask(v) & outside) return true;  // not independent
      }
      found = true;
      return false;
    });
    return !stopped;
  });
  if (found) return Theorem2Result::holds;
  if (st.status == WalkStatus::budget_exceeded) return Theorem2Result::unknown;
  return Theorem2Result::fails;
}

// ---- SigmaRecord serialization ----

inline nlohmann::json sigma_record_to_json(const SigmaRecord& r) {
  nlohmann::json j;
  j["pattern"] = r.pattern.name();
  j["n"] = r.n;
  if (r.impossible)
    j["sigma"] = "impossible";
  else
    j["sigma"] = r.sigma;
  if (r.witness)
    j["witness"] = r.witness->terms();
  else
    j["witness"] = nullptr;
  j["sequences_checked"] = r.sequences_checked;
  j["unknown"] = r.unknown_count;
  return j;
}

inline SigmaRecord sigma_record_from_json(const nlohmann::json& j) {
  SigmaRecord r;
  auto p = PatternGraph::parse(j.at("pattern").get<std::string>());
  if (!p) throw input_error("bad pattern name in record");
  r.pattern = *p;
  r.n = j.at("n").get<int>();
  if (j.at("sigma").is_string()) {
    if (j["sigma"].get<std::string>() != "impossible") throw input_error("bad sigma value");
    r.impossible = true;
  } else {
    r.sigma = j.at("sigma").get<int>();
  }
  if (!j.at("witness").is_null())
    r.witness = DegreeSequence::normalize(j["witness"].get<std::vector<int>>());
  r.sequences_checked = j.at("sequences_checked").get<std::uint64_t>();
  r.unknown_count = j.at("unknown").get<std::uint64_t>();
  return r;
}

inline constexpr const char* kSigmaCsvHeader = "pattern,n,sigma,witness,sequences_checked,unknown";

inline std::string sigma_record_to_csv(const SigmaRecord& r) {
  std::ostringstream out;
  out << r.pattern.name() << ',' << r.n << ',';
  if (r.impossible)
    out << "impossible";
  else
    out << r.sigma;
  out << ',';
  if (r.witness) out << r.witness->to_string(' ');
  out << ',' << r.sequences_checked << ',' << r.unknown_count;
  return out.str();
}

inline SigmaRecord sigma_record_from_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 6) throw input_error("bad csv record");
  SigmaRecord r;
  auto p = PatternGraph::parse(fields[0]);
  if (!p) throw input_error("bad pattern name in record");
  r.pattern = *p;
  r.n = std::stoi(fields[1]);
  if (fields[2] == "impossible")
    r.impossible = true;
  else
    r.sigma = std::stoi(fields[2]);
  if (!fields[3].empty()) {
    auto raw = parse_sequence_line(fields[3]);
    if (!raw) throw input_error("bad witness field");
    r.witness = DegreeSequence::normalize(*raw);
  }
  r.sequences_checked = std::stoull(fields[4]);
  r.unknown_count = std::stoull(fields[5]);
  return r;
}

}  // namespace potg
