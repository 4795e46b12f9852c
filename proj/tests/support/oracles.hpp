#pragma once

// Brute-force reference computations. Nothing here calls the enumeration,
// canonical labeling or codec code paths under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "mis/graph.hpp"

namespace mis::testing {

using EdgeSet = std::set<std::pair<int, int>>;

/// Edges by checking every pair with adjacent().
inline EdgeSet edge_set(const Graph& g) {
  EdgeSet out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.emplace(u, v);
  return out;
}

inline EdgeSet edges_of(std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet out;
  for (auto [u, v] : pairs) out.emplace(std::min(u, v), std::max(u, v));
  return out;
}

inline bool subset_independent(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (((s >> u) & 1) && ((s >> v) & 1) && g.adjacent(u, v)) return false;
  return true;
}

inline bool subset_clique(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (((s >> u) & 1) && ((s >> v) & 1) && !g.adjacent(u, v)) return false;
  return true;
}

/// All maximal independent sets (as bit masks), ascending by mask.
inline std::vector<std::uint64_t> brute_force_mis(const Graph& g) {
  std::vector<std::uint64_t> out;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!subset_independent(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1) && subset_independent(g, s | (std::uint64_t{1} << v))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

/// Number of maximal cliques of each size.
inline std::vector<std::uint64_t> brute_force_clique_profile(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!subset_clique(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1) && subset_clique(g, s | (std::uint64_t{1} << v))) maximal = false;
    if (maximal) ++counts[std::popcount(s)];
  }
  return counts;
}

/// Upper-triangle bit string (column order) under the labeling perm, where
/// perm[i] is the original vertex placed at position i.
inline std::vector<bool> triangle_under(const Graph& g, const std::vector<int>& perm) {
  std::vector<bool> bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]));
  return bits;
}

/// Minimum triangle string over all n! labelings, no pruning.
inline std::vector<bool> brute_force_min_triangle(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best = triangle_under(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, triangle_under(g, perm));
  return best;
}

inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return brute_force_min_triangle(a) == brute_force_min_triangle(b);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace mis::testing
