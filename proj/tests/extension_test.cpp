#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "potg/extension.hpp"
#include "potg/switchspace.hpp"

using potg::CycleWitness;
using potg::ExtensionContext;
using potg::ExtendStatus;
using potg::SimpleGraph;

namespace {

SimpleGraph cycle_on(int n, int k) {
  SimpleGraph g(n);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

CycleWitness witness_0_to(int k) {
  std::vector<int> vs(k);
  for (int i = 0; i < k; ++i) vs[i] = i;
  return CycleWitness{std::move(vs)};
}

}  // namespace

TEST_CASE("lemma (a): consecutive cycle neighbors give the longer cycle for free") {
  auto g = cycle_on(5, 4);
  const auto c = witness_0_to(4);
  g.add_edge(4, 0);
  g.add_edge(4, 1);
  const auto out = potg::lemma_a_insert(g, c, 4);
  REQUIRE(out.has_value());
  CHECK(out->graph == g);  // no edges modified
  CHECK(out->cycle.length() == 5);
  CHECK(out->cycle.valid_in(g));

  auto g2 = cycle_on(5, 4);
  g2.add_edge(4, 0);
  g2.add_edge(4, 2);  // only opposite vertices
  CHECK_FALSE(potg::lemma_a_insert(g2, witness_0_to(4), 4).has_value());

  auto g3 = cycle_on(5, 4);
  CHECK_FALSE(potg::lemma_a_insert(g3, witness_0_to(4), 4).has_value());
}

TEST_CASE("lemma (b): the interchange creates a (k+1)-cycle") {
  // C_4 on 0..3, x=4 adjacent to w_0, y=5 adjacent to x.
  auto g = cycle_on(6, 4);
  g.add_edge(4, 0);
  g.add_edge(4, 5);
  const auto c = witness_0_to(4);
  const auto out = potg::lemma_b_swap(g, c, 4, 5, 0);
  CHECK(out.cycle.length() == 5);
  CHECK(out.cycle.valid_in(out.graph));
  CHECK(potg::degree_sequence_of(out.graph) == potg::degree_sequence_of(g));
  // exactly two edges removed and two inserted
  int removed = 0, inserted = 0;
  for (auto [u, v] : g.edges())
    if (!out.graph.has_edge(u, v)) ++removed;
  for (auto [u, v] : out.graph.edges())
    if (!g.has_edge(u, v)) ++inserted;
  CHECK(removed == 2);
  CHECK(inserted == 2);

  // with w_1 x already present the original graph has the cycle
  auto g2 = g;
  g2.add_edge(4, 1);
  const auto out2 = potg::lemma_b_swap(g2, c, 4, 5, 0);
  CHECK(out2.graph == g2);
  CHECK(out2.cycle.valid_in(g2));

  // w_r y an edge violates the precondition
  auto g3 = g;
  g3.add_edge(5, 0);
  CHECK_THROWS_AS(potg::lemma_b_swap(g3, c, 4, 5, 0), potg::input_error);
}

TEST_CASE("lemma (c): route through x and y, or delegate to lemma (b)") {
  // C_5 on 0..4, x=5, y=6; edges w_0 x, w_2 x, xy, w_2 y.
  auto g = cycle_on(7, 5);
  g.add_edge(5, 0);
  g.add_edge(5, 2);
  g.add_edge(5, 6);
  g.add_edge(6, 2);
  const auto c = witness_0_to(5);
  const auto out = potg::lemma_c_route(g, c, 5, 6, 0);
  CHECK(out.graph == g);  // cycle already present
  CHECK(out.cycle.length() == 6);
  CHECK(out.cycle.valid_in(g));

  // without w_2 y the call delegates to the interchange at r+2
  auto g2 = cycle_on(7, 5);
  g2.add_edge(5, 0);
  g2.add_edge(5, 2);
  g2.add_edge(5, 6);
  const auto out2 = potg::lemma_c_route(g2, c, 5, 6, 0);
  CHECK(out2.cycle.length() == 6);
  CHECK(out2.cycle.valid_in(out2.graph));
  CHECK(potg::degree_sequence_of(out2.graph) == potg::degree_sequence_of(g2));

  auto g3 = cycle_on(7, 5);
  g3.add_edge(5, 0);
  g3.add_edge(5, 6);
  CHECK_THROWS_AS(potg::lemma_c_route(g3, c, 5, 6, 0), potg::input_error);
}

TEST_CASE("extend_cycle on the worked k=4 instance") {
  // C_4 plus x=4 adjacent to w_0 and w_2, pendant 5 adjacent to x.
  auto g = cycle_on(6, 4);
  g.add_edge(4, 0);
  g.add_edge(4, 2);
  g.add_edge(4, 5);
  ExtensionContext ctx{g, witness_0_to(4), 4, 0};
  REQUIRE(g.degree(4) == 3);  // floor(4/2)+1
  REQUIRE(g.degree(0) == 3);
  const auto res = potg::extend_cycle(ctx);
  CHECK(res.status != ExtendStatus::budget_exhausted);
  REQUIRE(res.cycle.has_value());
  CHECK(res.cycle->length() == 5);
  CHECK(res.cycle->valid_in(res.graph));
  CHECK(potg::degree_sequence_of(res.graph) == potg::degree_sequence_of(g));
  // independent confirmation on the degree sequence
  CHECK(potg::is_potentially(potg::degree_sequence_of(g), potg::PatternGraph::cycle(5)).value ==
        potg::Decision::yes);
}

TEST_CASE("extend_cycle precondition checks") {
  auto g = cycle_on(6, 4);
  g.add_edge(4, 0);
  g.add_edge(4, 2);  // d(x) = 2 = floor(k/2), too small
  ExtensionContext ctx{g, witness_0_to(4), 4, 0};
  CHECK_THROWS_AS(potg::extend_cycle(ctx), potg::input_error);

  auto g2 = cycle_on(6, 4);
  g2.add_edge(4, 0);
  g2.add_edge(4, 2);
  g2.add_edge(4, 5);
  CHECK_THROWS_AS(potg::extend_cycle({g2, witness_0_to(4), 0, 0}), potg::input_error);  // x on C
  CHECK_THROWS_AS(potg::extend_cycle({g2, witness_0_to(4), 4, 5}), potg::input_error);  // w off C
  CHECK_THROWS_AS(potg::extend_cycle({g2, CycleWitness{{0, 1, 2}}, 4, 0}), potg::input_error);
}

TEST_CASE("extend_cycle idempotent fast path") {
  auto h = cycle_on(6, 4);
  h.add_edge(4, 0);
  h.add_edge(4, 1);
  h.add_edge(4, 5);
  // lemma (a) situation: C_5 = 0 4 1 2 3 already exists
  ExtensionContext ctx{h, witness_0_to(4), 4, 0};
  const auto res = potg::extend_cycle(ctx);
  CHECK(res.status == ExtendStatus::already_present);
  CHECK(res.graph == h);
  REQUIRE(res.cycle.has_value());
  CHECK(res.cycle->valid_in(h));
}

TEST_CASE("randomized theorem-1 instances always extend") {
  std::mt19937 rng(424242);
  int done = 0;
  while (done < 120) {
    const int k = 4 + static_cast<int>(rng() % 5);      // 4..8
    const int n = k + 2 + static_cast<int>(rng() % (13 - k - 2));  // <= 12
    SimpleGraph g(n);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    const int x = k;
    // boost d(x) to floor(k/2)+1 with random neighbors
    const int need = k / 2 + 1;
    std::vector<int> targets;
    for (int v = 0; v < n; ++v)
      if (v != x) targets.push_back(v);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (int i = 0; i < need; ++i) g.add_edge(x, targets[i]);
    // sprinkle extra edges
    const int extra = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < extra; ++i) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    // make sure some cycle vertex has degree >= 3
    int w = -1;
    for (int v = 0; v < k; ++v)
      if (g.degree(v) >= 3) w = v;
    if (w < 0) {
      g.add_edge(0, 2);  // chord; all cycle degrees were 2, so it was absent
      w = 0;
    }
    if (g.degree(x) < need) continue;
    ExtensionContext ctx{g, witness_0_to(k), x, w};
    const auto res = potg::extend_cycle(ctx);
    CHECK(res.status != ExtendStatus::budget_exhausted);
    REQUIRE(res.cycle.has_value());
    CHECK(res.cycle->length() == k + 1);
    CHECK(res.cycle->valid_in(res.graph));
    CHECK(potg::degree_sequence_of(res.graph) == potg::degree_sequence_of(g));
    ++done;
  }
}
