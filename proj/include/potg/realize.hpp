#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "potg/degree_sequence.hpp"
#include "potg/errors.hpp"
#include "potg/graph.hpp"

namespace potg {

/// Havel-Hakimi construction. Deterministic: each round connects the vertex
/// of largest residual degree (smallest label on ties) to the next-largest
/// residuals. The result's degree multiset equals s.
inline SimpleGraph realize(const DegreeSequence& s) {
  if (!is_graphical(s)) throw non_graphical_error("sequence is not graphical");
  const int n = s.length();
  SimpleGraph g(n);
  std::vector<std::pair<int, int>> rem;  // (residual degree, label)
  rem.reserve(n);
  for (int v = 0; v < n; ++v) rem.emplace_back(s.terms()[v], v);
  for (int round = 0; round < n; ++round) {
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    const int d = rem[0].first;
    if (d == 0) break;
    const int v = rem[0].second;
    rem[0].first = 0;
    for (int j = 1; j <= d; ++j) {
      --rem[j].first;
      g.add_edge(v, rem[j].second);
    }
  }
  return g;
}

}  // namespace potg
