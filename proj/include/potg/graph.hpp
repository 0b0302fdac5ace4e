#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "potg/degree_sequence.hpp"
#include "potg/errors.hpp"

namespace potg {

inline constexpr int kMaxVertices = 64;

/// Labeled simple graph on vertices 0..n-1, adjacency as one bitmask per
/// vertex. Value-like; graphs compare equal iff their labeled edge sets do.
class SimpleGraph {
 public:
  SimpleGraph() : n_(0) {}

  explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw input_error("vertex count out of range");
  }

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighbor_mask(v)); }

  int edge_count() const {
    int twice = 0;
    for (auto m : adj_) twice += std::popcount(m);
    return twice / 2;
  }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  /// Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u) {
      std::uint64_t m = adj_[u] & ~((u == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (u + 1)) - 1));
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& rows() const { return adj_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex label out of range");
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

struct SimpleGraphHash {
  std::size_t operator()(const SimpleGraph& g) const {
    std::size_t h = static_cast<std::size_t>(g.order());
    for (auto m : g.rows()) h = h * 1000003u ^ static_cast<std::size_t>(m);
    return h;
  }
};

inline DegreeSequence degree_sequence_of(const SimpleGraph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return DegreeSequence::normalize(std::move(d));
}

/// K_m joined to n-m isolated vertices: clique vertices 0..m-1 are adjacent
/// to everything; the rest form an independent set. sigma = m(2n-m-1).
inline SimpleGraph construct_join_empty(int m, int n) {
  if (m < 1 || m >= n) throw input_error("require 1 <= m < n");
  SimpleGraph g(n);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// As construct_join_empty plus one edge between the first two non-clique
/// vertices (m and m+1). sigma = m(2n-m-1) + 2.
inline SimpleGraph construct_join_k2(int m, int n) {
  if (m < 1 || m + 2 > n) throw input_error("require 1 <= m and m+2 <= n");
  SimpleGraph g = construct_join_empty(m, n);
  g.add_edge(m, m + 1);
  return g;
}

/// Graph text format: first noncomment line is n, then one `u v` edge per
/// line, 0-based labels.
inline SimpleGraph read_graph_text(std::istream& in) {
  std::string line;
  int n = -1;
  SimpleGraph g;
  while (std::getline(in, line)) {
    auto vals = parse_sequence_line(line);
    if (!vals) continue;
    if (n < 0) {
      if (vals->size() != 1) throw input_error("expected vertex count line");
      n = (*vals)[0];
      g = SimpleGraph(n);
      continue;
    }
    if (vals->size() != 2) throw input_error("expected `u v` edge line");
    g.add_edge((*vals)[0], (*vals)[1]);
  }
  if (n < 0) throw input_error("empty graph file");
  return g;
}

inline void write_graph_text(std::ostream& out, const SimpleGraph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace potg
