#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "potg/errors.hpp"
#include "potg/graph.hpp"
#include "potg/pattern.hpp"
#include "potg/switchspace.hpp"

namespace potg {

/// Inputs for extending a k-cycle to a (k+1)-cycle inside the same degree
/// sequence: x off the cycle with degree >= floor(k/2)+1, w on the cycle with
/// degree >= 3.
struct ExtensionContext {
  SimpleGraph g;
  CycleWitness cycle;
  int x = -1;
  int w = -1;
};

struct ExtensionOutcome {
  SimpleGraph graph;
  CycleWitness cycle;
};

namespace detail {

inline CycleWitness splice_after(const CycleWitness& c, int pos,
                                 const std::vector<int>& inserted, int skip) {
  // vertices c[0..pos], then `inserted`, then c[pos+1+skip ..].
  const int k = c.length();
  std::vector<int> out;
  out.reserve(k + static_cast<int>(inserted.size()) - skip);
  for (int i = 0; i <= pos; ++i) out.push_back(c.vertices[i]);
  for (int v : inserted) out.push_back(v);
  for (int i = pos + 1 + skip; i < k; ++i) out.push_back(c.vertices[i]);
  return CycleWitness{std::move(out)};
}

}  // namespace detail

/// If x is adjacent to two consecutive cycle vertices w_r, w_{r+1}, the
/// (k+1)-cycle w_0 .. w_r x w_{r+1} .. already exists; no edges change.
inline std::optional<ExtensionOutcome> lemma_a_insert(const SimpleGraph& g,
                                                      const CycleWitness& c, int x) {
  if (!c.valid_in(g) || c.contains(x)) throw input_error("lemma (a): x must lie off a valid cycle");
  const int k = c.length();
  for (int r = 0; r < k; ++r) {
    if (g.has_edge(c.at(r), x) && g.has_edge(c.at(r + 1), x)) {
      CycleWitness w = detail::splice_after(c, r, {x}, 0);
      if (r == k - 1) {
        // x sits between w_{k-1} and w_0; appending at the end keeps the order
        w = CycleWitness{c.vertices};
        w.vertices.push_back(x);
      }
      return ExtensionOutcome{g, std::move(w)};
    }
  }
  return std::nullopt;
}

/// Interchange step: with x, y off the cycle, xy an edge, w_r x an edge and
/// w_r y a non-edge, either the longer cycle already exists (w_{r+1} x edge)
/// or swapping {w_r w_{r+1}, xy} for {w_{r+1} x, w_r y} creates one. Degrees
/// are preserved. r is a 0-based position on the cycle.
inline ExtensionOutcome lemma_b_swap(const SimpleGraph& g, const CycleWitness& c, int x,
                                     int y, int r) {
  const int k = c.length();
  if (!c.valid_in(g)) throw input_error("lemma (b): invalid cycle");
  if (r < 0 || r >= k) throw input_error("lemma (b): cycle position out of range");
  if (c.contains(x) || c.contains(y) || x == y)
    throw input_error("lemma (b): x, y must be distinct vertices off the cycle");
  if (!g.has_edge(x, y)) throw input_error("lemma (b): xy must be an edge");
  const int wr = c.at(r);
  const int wr1 = c.at(r + 1);
  if (!g.has_edge(wr, x)) throw input_error("lemma (b): w_r x must be an edge");
  if (g.has_edge(wr, y)) throw input_error("lemma (b): w_r y must be a non-edge");
  CycleWitness longer = detail::splice_after(c, r, {x}, 0);
  if (r == k - 1) {
    longer = CycleWitness{c.vertices};
    longer.vertices.push_back(x);
  }
  if (g.has_edge(wr1, x)) return {g, std::move(longer)};
  SimpleGraph h = g;
  h.remove_edge(wr, wr1);
  h.remove_edge(x, y);
  h.add_edge(wr1, x);
  h.add_edge(wr, y);
  return {std::move(h), std::move(longer)};
}

/// With w_r x and w_{r+2} x edges and xy an edge: if w_{r+2} y is present the
/// cycle w_0 .. w_r x y w_{r+2} .. exists as-is; otherwise lemma (b) applies
/// at position r+2.
inline ExtensionOutcome lemma_c_route(const SimpleGraph& g, const CycleWitness& c, int x,
                                      int y, int r) {
  const int k = c.length();
  if (!c.valid_in(g)) throw input_error("lemma (c): invalid cycle");
  if (r < 0 || r >= k) throw input_error("lemma (c): cycle position out of range");
  if (c.contains(x) || c.contains(y) || x == y)
    throw input_error("lemma (c): x, y must be distinct vertices off the cycle");
  if (!g.has_edge(x, y)) throw input_error("lemma (c): xy must be an edge");
  if (!g.has_edge(c.at(r), x) || !g.has_edge(c.at(r + 2), x))
    throw input_error("lemma (c): w_r x and w_{r+2} x must be edges");
  if (g.has_edge(c.at(r + 2), y)) {
    // Replace w_{r+1} by the path x y.
    std::vector<int> out;
    out.reserve(k + 1);
    for (int i = 0; i <= r; ++i) out.push_back(c.at(i));
    out.push_back(x);
    out.push_back(y);
    for (int i = r + 2; i < r + k; ++i) out.push_back(c.at(i));
    return {g, CycleWitness{std::move(out)}};
  }
  return lemma_b_swap(g, c, x, y, (r + 2) % k);
}

enum class ExtendStatus { already_present, guided, fallback, budget_exhausted };

struct ExtendResult {
  SimpleGraph graph;
  std::optional<CycleWitness> cycle;
  ExtendStatus status = ExtendStatus::budget_exhausted;
  WalkStats stats;
};

namespace detail {

// Case 1 interchange: u has a cycle neighbor w_i and two outside neighbors;
// swap {w_{i+1} w_{i+2}, u x2} for {w_{i+2} u, w_{i+1} x2} and test for the
// longer cycle.
inline std::optional<ExtendResult> try_case1(const SimpleGraph& g, const CycleWitness& c,
                                             int target_len) {
  const int k = c.length();
  const std::uint64_t cyc = c.mask();
  const std::uint64_t outside = g.vertex_mask() & ~cyc;
  std::uint64_t us = outside;
  while (us) {
    const int u = std::countr_zero(us);
    us &= us - 1;
    const std::uint64_t out_nb = g.neighbor_mask(u) & outside;
    if (std::popcount(out_nb) < 2) continue;
    for (int i = 0; i < k; ++i) {
      if (!g.has_edge(c.at(i), u)) continue;
      const int w1 = c.at(i + 1);
      const int w2 = c.at(i + 2);
      if (g.has_edge(w2, u)) continue;  // inserted edge must be absent
      std::uint64_t x2s = out_nb;
      while (x2s) {
        const int x2 = std::countr_zero(x2s);
        x2s &= x2s - 1;
        if (g.has_edge(w1, x2) || x2 == w1 || x2 == w2) continue;
        SimpleGraph h = g;
        h.remove_edge(w1, w2);
        h.remove_edge(u, x2);
        h.add_edge(w2, u);
        h.add_edge(w1, x2);
        if (auto longer = find_cycle(h, target_len))
          return ExtendResult{std::move(h), std::move(longer), ExtendStatus::guided, {}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Produces a same-degree-sequence graph containing a (k+1)-cycle, following
/// the guided moves first (lemma (a)/(b)/(c), then the two interchange
/// patterns) and falling back to a bounded 2-switch closure search. A
/// budget_exhausted result means the fallback ran dry, which contradicts the
/// underlying theorem and is surfaced as such.
inline ExtendResult extend_cycle(const ExtensionContext& ctx,
                                 const SearchBudget& budget = {}) {
  const SimpleGraph& g = ctx.g;
  const CycleWitness& c = ctx.cycle;
  const int k = c.length();
  if (k < 4) throw input_error("extend_cycle: cycle length must be >= 4");
  if (!c.valid_in(g)) throw input_error("extend_cycle: invalid cycle witness");
  if (ctx.x < 0 || ctx.x >= g.order() || c.contains(ctx.x))
    throw input_error("extend_cycle: x must lie off the cycle");
  if (ctx.w < 0 || ctx.w >= g.order() || !c.contains(ctx.w))
    throw input_error("extend_cycle: w must lie on the cycle");
  if (g.degree(ctx.x) < k / 2 + 1)
    throw input_error("extend_cycle: d(x) must be at least floor(k/2)+1");
  if (g.degree(ctx.w) < 3) throw input_error("extend_cycle: d(w) must be at least 3");

  const int target_len = k + 1;
  if (auto longer = find_cycle(g, target_len))
    return {g, std::move(longer), ExtendStatus::already_present, {}};

  const std::uint64_t outside = g.vertex_mask() & ~c.mask();

  // Lemma (b)/(c) scans over adjacent pairs off the cycle.
  std::uint64_t us = outside;
  while (us) {
    const int u = std::countr_zero(us);
    us &= us - 1;
    std::uint64_t vs = g.neighbor_mask(u) & outside;
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      for (int r = 0; r < k; ++r) {
        if (!g.has_edge(c.at(r), u)) continue;
        if (g.has_edge(c.at(r + 2), u)) {
          auto out = lemma_c_route(g, c, u, v, r);
          if (out.cycle.valid_in(out.graph) &&
              out.cycle.length() == target_len)
            return {std::move(out.graph), std::move(out.cycle), ExtendStatus::guided, {}};
        } else if (!g.has_edge(c.at(r), v)) {
          auto out = lemma_b_swap(g, c, u, v, r);
          if (out.cycle.valid_in(out.graph) &&
              out.cycle.length() == target_len)
            return {std::move(out.graph), std::move(out.cycle), ExtendStatus::guided, {}};
        }
      }
    }
  }

  // Case 1 interchange from the theorem's proof.
  if (auto res = detail::try_case1(g, c, target_len)) return std::move(*res);

  // Case 2: u off the cycle with no cycle neighbors; route an edge from a
  // high-degree cycle vertex over to u, then retry Case 1.
  std::uint64_t u2s = outside;
  while (u2s) {
    const int u = std::countr_zero(u2s);
    u2s &= u2s - 1;
    if (g.neighbor_mask(u) & c.mask()) continue;
    const std::uint64_t out_nb = g.neighbor_mask(u) & outside;
    if (std::popcount(out_nb) < 3) continue;
    for (int i = 0; i < k; ++i) {
      const int wv = c.at(i);
      if (g.degree(wv) < 3 || g.has_edge(wv, u)) continue;
      // chord or off-cycle neighbors of wv
      std::uint64_t x4s = g.neighbor_mask(wv);
      x4s &= ~((std::uint64_t{1} << c.at(i + 1)) | (std::uint64_t{1} << c.at(i - 1)));
      while (x4s) {
        const int x4 = std::countr_zero(x4s);
        x4s &= x4s - 1;
        if (x4 == u) continue;
        std::uint64_t x3s = out_nb & ~(std::uint64_t{1} << x4);
        while (x3s) {
          const int x3 = std::countr_zero(x3s);
          x3s &= x3s - 1;
          if (g.has_edge(x3, x4) || x3 == wv) continue;
          SimpleGraph h = g;
          h.remove_edge(wv, x4);
          h.remove_edge(u, x3);
          h.add_edge(wv, u);
          h.add_edge(x3, x4);
          if (auto longer = find_cycle(h, target_len))
            return {std::move(h), std::move(longer), ExtendStatus::guided, {}};
          if (c.valid_in(h)) {
            if (auto res = detail::try_case1(h, c, target_len)) return std::move(*res);
          }
        }
      }
    }
  }

  // Fallback: bounded closure search over the same-sequence space.
  ExtendResult res;
  res.graph = g;
  res.stats = walk_from(g, budget, [&](const SimpleGraph& h) {
    if (auto longer = find_cycle(h, target_len)) {
      res.graph = h;
      res.cycle = std::move(longer);
      return false;
    }
    return true;
  });
  res.status = res.stats.status == WalkStatus::stopped ? ExtendStatus::fallback
                                                       : ExtendStatus::budget_exhausted;
  return res;
}

}  // namespace potg
