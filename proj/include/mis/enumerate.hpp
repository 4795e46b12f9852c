#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

using Count = std::uint64_t;

/// A counter would have wrapped past 2^64 - 1.
class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Input order exceeds what an exponential helper accepts.
class OrderLimitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of maximal independent sets (or maximal cliques) of each size.
///
/// counts has n + 1 entries; counts[s] is the coefficient of x^s in the
/// maximal independence polynomial.
struct SizeProfile {
  int n = 0;
  std::vector<Count> counts;

  /// counts[s], or 0 when s is outside [0, n].
  Count at(int s) const;
  /// Sum over all sizes; the total number of maximal sets.
  Count total() const;
  /// Largest size with a nonzero count.
  int max_size() const;

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// Visits every maximal clique of g once, in the deterministic order of the
/// pivoted recursion. Returns the number of cliques visited.
Count enumerate_maximal_cliques(const Graph& g, const std::function<void(VertexSet)>& visit);

/// Visits every maximal independent set of g once. Order is fixed by vertex
/// indices: maximal cliques of the complement, branching in ascending order.
Count enumerate_mis(const Graph& g, const std::function<void(VertexSet)>& visit);

SizeProfile maximal_clique_size_profile(const Graph& g);
SizeProfile mis_size_profile(const Graph& g);

/// Coefficients of I_max(G; x), constant term first, trailing zeros dropped.
std::vector<Count> maximal_independence_polynomial(const Graph& g);

/// "3x^2", "x+2x^3", "1" for the graph on zero vertices.
std::string polynomial_string(const std::vector<Count>& coefficients);

/// Maximum order accepted by the subset-scan helpers.
inline constexpr int kSubsetScanMaxOrder = 24;

/// counts[s] = number of independent sets of size s, including non-maximal
/// ones. Subset scan; throws OrderLimitError above 24 vertices.
std::vector<Count> independent_set_counts(const Graph& g);

/// Reference profile by scanning all 2^n subsets: a subset counts iff it is
/// independent and adding any single vertex breaks independence.
SizeProfile oracle_mis_size_profile(const Graph& g);

bool is_independent(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);
bool is_maximal_independent(const Graph& g, VertexSet s);
bool is_maximal_clique(const Graph& g, VertexSet s);

}  // namespace mis
