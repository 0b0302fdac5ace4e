#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "potg/degree_sequence.hpp"
#include "potg/errors.hpp"
#include "potg/graph.hpp"
#include "potg/pattern.hpp"
#include "potg/realize.hpp"

namespace potg {

/// Edge interchange: removes ab and cd, inserts ac and bd. Preserves every
/// vertex degree and simplicity when valid.
struct TwoSwitchMove {
  int a, b, c, d;

  TwoSwitchMove inverse() const { return {a, c, b, d}; }

  friend bool operator==(const TwoSwitchMove&, const TwoSwitchMove&) = default;
};

inline bool move_valid(const SimpleGraph& g, const TwoSwitchMove& m) {
  const std::array<int, 4> vs{m.a, m.b, m.c, m.d};
  for (int i = 0; i < 4; ++i) {
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) return false;
  }
  return g.has_edge(m.a, m.b) && g.has_edge(m.c, m.d) && !g.has_edge(m.a, m.c) &&
         !g.has_edge(m.b, m.d);
}

/// Visits every valid move once, in a deterministic order: sorted edge pairs,
/// both pairings of each disjoint pair. fn(const TwoSwitchMove&) -> bool;
/// false stops. Returns false iff stopped early.
template <typename Fn>
bool for_each_two_switch(const SimpleGraph& g, Fn&& fn) {
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a, b] = es[i];
      const auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!g.has_edge(a, c) && !g.has_edge(b, d)) {
        if (!fn(TwoSwitchMove{a, b, c, d})) return false;
      }
      if (!g.has_edge(a, d) && !g.has_edge(b, c)) {
        if (!fn(TwoSwitchMove{a, b, d, c})) return false;
      }
    }
  }
  return true;
}

inline std::vector<TwoSwitchMove> valid_two_switches(const SimpleGraph& g) {
  std::vector<TwoSwitchMove> out;
  for_each_two_switch(g, [&](const TwoSwitchMove& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline SimpleGraph apply_two_switch(const SimpleGraph& g, const TwoSwitchMove& m) {
  if (!move_valid(g, m)) throw input_error("invalid two-switch move");
  SimpleGraph h = g;
  h.remove_edge(m.a, m.b);
  h.remove_edge(m.c, m.d);
  h.add_edge(m.a, m.c);
  h.add_edge(m.b, m.d);
  return h;
}

struct SearchBudget {
  std::uint64_t max_states = 5'000'000;
  std::uint64_t max_moves = 400'000'000;
};

enum class WalkStatus { exhausted, stopped, budget_exceeded };

struct WalkStats {
  WalkStatus status = WalkStatus::exhausted;
  std::uint64_t states = 0;
  std::uint64_t moves = 0;
};

namespace detail {

// Upper-triangle edge bitset; fits graphs up to 32 vertices.
struct PackedEdges {
  std::array<std::uint64_t, 8> w{};
  friend bool operator==(const PackedEdges&, const PackedEdges&) = default;
};

struct PackedEdgesHash {
  std::size_t operator()(const PackedEdges& p) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : p.w) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline int tri_index(int u, int v) {  // u < v
  return v * (v - 1) / 2 + u;
}

inline PackedEdges pack_edges(const SimpleGraph& g) {
  PackedEdges p;
  for (auto [u, v] : g.edges()) {
    const int i = tri_index(u, v);
    p.w[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return p;
}

inline SimpleGraph unpack_edges(const PackedEdges& p, int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const int i = tri_index(u, v);
      if ((p.w[i >> 6] >> (i & 63)) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace detail

/// Breadth-first closure of `start` under 2-switches, deduplicated by the
/// labeled edge set. visit(const SimpleGraph&) -> bool; false stops the walk.
template <typename Visit>
WalkStats walk_from(const SimpleGraph& start, const SearchBudget& budget, Visit&& visit) {
  if (budget.max_states == 0 || budget.max_moves == 0)
    throw input_error("search budget must be positive");
  if (start.order() > 32) throw input_error("realization walk limited to 32 vertices");
  const int n = start.order();
  WalkStats st;
  std::unordered_set<detail::PackedEdges, detail::PackedEdgesHash> seen;
  std::deque<detail::PackedEdges> frontier;
  const auto key0 = detail::pack_edges(start);
  seen.insert(key0);
  frontier.push_back(key0);
  st.states = 1;
  if (!visit(start)) {
    st.status = WalkStatus::stopped;
    return st;
  }
  while (!frontier.empty()) {
    const SimpleGraph g = detail::unpack_edges(frontier.front(), n);
    frontier.pop_front();
    const bool cont = for_each_two_switch(g, [&](const TwoSwitchMove& m) {
      if (++st.moves > budget.max_moves) {
        st.status = WalkStatus::budget_exceeded;
        return false;
      }
      SimpleGraph h = g;
      h.remove_edge(m.a, m.b);
      h.remove_edge(m.c, m.d);
      h.add_edge(m.a, m.c);
      h.add_edge(m.b, m.d);
      const auto key = detail::pack_edges(h);
      if (!seen.insert(key).second) return true;
      if (seen.size() > budget.max_states) {
        st.status = WalkStatus::budget_exceeded;
        return false;
      }
      ++st.states;
      if (!visit(h)) {
        st.status = WalkStatus::stopped;
        return false;
      }
      frontier.push_back(key);
      return true;
    });
    if (!cont) return st;
  }
  st.status = WalkStatus::exhausted;
  return st;
}

/// Walk of the full realization space of S, rooted at the greedy realization.
template <typename Visit>
WalkStats walk_realizations(const DegreeSequence& s, const SearchBudget& budget,
                            Visit&& visit) {
  return walk_from(realize(s), budget, visit);
}

struct RealizationSet {
  std::vector<SimpleGraph> graphs;
  bool complete = false;  // false iff the budget cut the walk short
  WalkStats stats;
};

/// Every labeled realization of S exactly once; `complete` is false when the
/// budget was hit before closure.
inline RealizationSet enumerate_realizations(const DegreeSequence& s,
                                             const SearchBudget& budget = {}) {
  RealizationSet out;
  out.stats = walk_realizations(s, budget, [&](const SimpleGraph& g) {
    out.graphs.push_back(g);
    return true;
  });
  out.complete = out.stats.status == WalkStatus::exhausted;
  return out;
}

enum class Decision { yes, no, unknown };

struct PatternDecision {
  Decision value = Decision::unknown;
  std::optional<SimpleGraph> witness;  // containing (potentially) or lacking (forcibly) H
  WalkStats stats;
};

/// Does some realization of S contain H? Early exit on the first witness;
/// "no" only after exhausting the realization space.
inline PatternDecision is_potentially(const DegreeSequence& s, const PatternGraph& h,
                                      const SearchBudget& budget = {}) {
  PatternDecision d;
  d.stats = walk_realizations(s, budget, [&](const SimpleGraph& g) {
    if (contains_pattern(g, h)) {
      d.witness = g;
      return false;
    }
    return true;
  });
  switch (d.stats.status) {
    case WalkStatus::stopped:
      d.value = Decision::yes;
      break;
    case WalkStatus::exhausted:
      d.value = Decision::no;
      break;
    case WalkStatus::budget_exceeded:
      d.value = Decision::unknown;
      break;
  }
  return d;
}

/// Does every realization of S contain H? "no" carries the counterexample.
inline PatternDecision is_forcibly(const DegreeSequence& s, const PatternGraph& h,
                                   const SearchBudget& budget = {}) {
  PatternDecision d;
  d.stats = walk_realizations(s, budget, [&](const SimpleGraph& g) {
    if (!contains_pattern(g, h)) {
      d.witness = g;
      return false;
    }
    return true;
  });
  switch (d.stats.status) {
    case WalkStatus::stopped:
      d.value = Decision::no;
      break;
    case WalkStatus::exhausted:
      d.value = Decision::yes;
      break;
    case WalkStatus::budget_exceeded:
      d.value = Decision::unknown;
      break;
  }
  return d;
}

}  // namespace potg
