#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "mis/enumerate.hpp"
#include "mis/graph.hpp"

namespace mis {

/// Largest order accepted by canonical_form.
inline constexpr int kCanonMaxOrder = 10;

/// Labeling-invariant representative of a graph's isomorphism class.
///
/// key holds the upper adjacency triangle in graph6 column order
/// (0,1),(0,2),(1,2),(0,3),..., first pair in the most significant of the
/// n(n-1)/2 used bits, under the labeling that minimizes it.
struct CanonicalForm {
  int n = 0;
  std::uint64_t key = 0;

  friend constexpr bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend constexpr auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form by pruned permutation search. Vertices are first grouped
/// by an invariant (degree, then sorted neighbor degrees) and positions are
/// filled class by class; a branch is cut as soon as its key prefix exceeds
/// the best found. Throws OrderLimitError above 10 vertices.
CanonicalForm canonical_form(const Graph& g);

/// The canonically labeled representative.
Graph to_graph(const CanonicalForm& form);

/// graph6 text of the canonically labeled representative.
std::string to_string(const CanonicalForm& form);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace mis
