#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "potg/errors.hpp"
#include "potg/graph.hpp"

namespace potg {

enum class PatternKind { cycle, clique, matching };

/// Target subgraph: C_k, K_k or pK_2. Containment is plain subgraph (not
/// induced), and cycle containment means exact length k.
struct PatternGraph {
  PatternKind kind;
  int size;  // k for cycles/cliques, p for matchings

  static PatternGraph cycle(int k) {
    if (k < 3) throw input_error("cycle length must be >= 3");
    return {PatternKind::cycle, k};
  }
  static PatternGraph clique(int k) {
    if (k < 1) throw input_error("clique size must be >= 1");
    return {PatternKind::clique, k};
  }
  static PatternGraph matching(int p) {
    if (p < 1) throw input_error("matching size must be >= 1");
    return {PatternKind::matching, p};
  }

  int min_vertices() const {
    return kind == PatternKind::matching ? 2 * size : size;
  }

  std::string name() const {
    switch (kind) {
      case PatternKind::cycle:
        return "C" + std::to_string(size);
      case PatternKind::clique:
        return "K" + std::to_string(size);
      case PatternKind::matching:
        return std::to_string(size) + "K2";
    }
    return {};
  }

  /// Inverse of name(): "C7", "K3", "2K2".
  static std::optional<PatternGraph> parse(std::string_view s) {
    auto digits = [](std::string_view t) -> std::optional<int> {
      if (t.empty()) return std::nullopt;
      int v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1000) return std::nullopt;
      }
      return v;
    };
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'K')) {
      if (auto k = digits(s.substr(1))) {
        if (s[0] == 'C' && *k >= 3) return cycle(*k);
        if (s[0] == 'K' && *k >= 1) return clique(*k);
      }
      return std::nullopt;
    }
    if (auto pos = s.find("K2"); pos != std::string_view::npos && pos + 2 == s.size()) {
      if (auto p = digits(s.substr(0, pos)); p && *p >= 1) return matching(*p);
    }
    return std::nullopt;
  }

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;
};

/// An embedded k-cycle w_0 w_1 ... w_{k-1} w_0 (indices wrap mod k).
struct CycleWitness {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  int at(int i) const {
    const int k = length();
    return vertices[((i % k) + k) % k];
  }

  bool valid_in(const SimpleGraph& g) const {
    const int k = length();
    if (k < 3) return false;
    std::uint64_t seen = 0;
    for (int v : vertices) {
      if (v < 0 || v >= g.order()) return false;
      if ((seen >> v) & 1u) return false;
      seen |= std::uint64_t{1} << v;
    }
    for (int i = 0; i < k; ++i)
      if (!g.has_edge(vertices[i], vertices[(i + 1) % k])) return false;
    return true;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << v;
    return m;
  }

  bool contains(int v) const { return (mask() >> v) & 1u; }
};

namespace detail {

template <typename Fn>
bool cycle_dfs(const SimpleGraph& g, int k, int anchor, std::uint64_t used,
               std::vector<int>& path, Fn& fn) {
  const int v = path.back();
  if (static_cast<int>(path.size()) == k) {
    if (!g.has_edge(v, anchor)) return true;
    if (path[1] > path.back()) return true;  // one orientation per cycle
    return fn(path);
  }
  std::uint64_t cand = g.neighbor_mask(v) & ~used & g.vertex_mask();
  // anchor is the minimum label on the cycle
  cand &= anchor == 63 ? 0 : ~((std::uint64_t{1} << (anchor + 1)) - 1);
  while (cand) {
    const int w = std::countr_zero(cand);
    cand &= cand - 1;
    path.push_back(w);
    if (!cycle_dfs(g, k, anchor, used | (std::uint64_t{1} << w), path, fn)) return false;
    path.pop_back();
  }
  return true;
}

inline bool clique_dfs(const SimpleGraph& g, int k, int depth, std::uint64_t cand,
                       std::vector<int>& cur) {
  if (depth == k) return true;
  if (std::popcount(cand) < k - depth) return false;
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;  // cand now holds only labels > v
    cur.push_back(v);
    if (clique_dfs(g, k, depth + 1, cand & g.neighbor_mask(v), cur)) return true;
    cur.pop_back();
  }
  return false;
}

inline bool matching_dfs(const std::vector<std::pair<int, int>>& es, std::size_t idx,
                         int need, std::uint64_t used,
                         std::vector<std::pair<int, int>>& out) {
  if (need == 0) return true;
  for (std::size_t i = idx; i + need <= es.size(); ++i) {
    auto [u, v] = es[i];
    const std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (used & bits) continue;
    out.push_back(es[i]);
    if (matching_dfs(es, i + 1, need - 1, used | bits, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

/// Visits every k-cycle of g once (fixed anchor = minimum label, fixed
/// orientation). fn(const std::vector<int>&) -> bool; false stops.
/// Returns false iff stopped early.
template <typename Fn>
bool for_each_cycle(const SimpleGraph& g, int k, Fn&& fn) {
  if (k < 3) throw input_error("cycle length must be >= 3");
  if (k > g.order()) return true;
  std::vector<int> path;
  path.reserve(k);
  for (int s = 0; s <= g.order() - 1; ++s) {
    path.assign(1, s);
    if (!detail::cycle_dfs(g, k, s, std::uint64_t{1} << s, path, fn)) return false;
  }
  return true;
}

inline std::optional<CycleWitness> find_cycle(const SimpleGraph& g, int k) {
  std::optional<CycleWitness> found;
  for_each_cycle(g, k, [&](const std::vector<int>& path) {
    found = CycleWitness{path};
    return false;
  });
  return found;
}

inline std::optional<std::vector<int>> find_clique(const SimpleGraph& g, int k) {
  if (k < 1) throw input_error("clique size must be >= 1");
  if (k > g.order()) return std::nullopt;
  std::vector<int> cur;
  cur.reserve(k);
  if (detail::clique_dfs(g, k, 0, g.vertex_mask(), cur)) return cur;
  return std::nullopt;
}

inline std::optional<std::vector<std::pair<int, int>>> find_matching(const SimpleGraph& g,
                                                                     int p) {
  if (p < 1) throw input_error("matching size must be >= 1");
  if (2 * p > g.order()) return std::nullopt;
  const auto es = g.edges();
  std::vector<std::pair<int, int>> out;
  out.reserve(p);
  if (detail::matching_dfs(es, 0, p, 0, out)) return out;
  return std::nullopt;
}

using PatternWitness =
    std::variant<CycleWitness, std::vector<int>, std::vector<std::pair<int, int>>>;

inline std::optional<PatternWitness> find_pattern(const SimpleGraph& g,
                                                  const PatternGraph& h) {
  switch (h.kind) {
    case PatternKind::cycle:
      if (auto c = find_cycle(g, h.size)) return PatternWitness{*c};
      return std::nullopt;
    case PatternKind::clique:
      if (auto c = find_clique(g, h.size)) return PatternWitness{*c};
      return std::nullopt;
    case PatternKind::matching:
      if (auto m = find_matching(g, h.size)) return PatternWitness{*m};
      return std::nullopt;
  }
  return std::nullopt;
}

inline bool contains_pattern(const SimpleGraph& g, const PatternGraph& h) {
  return find_pattern(g, h).has_value();
}

}  // namespace potg
