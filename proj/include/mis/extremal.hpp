#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mis/canon.hpp"
#include "mis/codec.hpp"
#include "mis/enumerate.hpp"
#include "mis/graph.hpp"

namespace mis {

/// Invalid order/size arguments to the extremal constructions.
class ExtremalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity of the induction split failed; this indicates a defect in
/// the enumeration, never expected on valid input.
class SplitIdentityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad verifier input: mixed orders, empty stream, t outside [1, n].
class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n = q*t + r with 0 <= r < t, and f = q^(t-r) * (q+1)^r.
struct BoundDecomposition {
  int n = 0;
  int t = 1;
  int q = 0;
  int r = 0;
  Count f = 0;

  friend bool operator==(const BoundDecomposition&, const BoundDecomposition&) = default;
};

/// Maximum number of size-t maximal independent sets over n-vertex graphs.
/// Throws ExtremalError for t < 1 or n < 0, and CountOverflow if f does
/// not fit in 64 bits.
BoundDecomposition bound_f(int n, int t);

/// (t-r) K_q + r K_{q+1}, blocks labeled consecutively, K_q blocks first.
/// Requires 1 <= t <= n.
Graph build_H(int n, int t);

/// Complete k-partite graph with k-r parts of size q and r of size q+1 (in
/// that order), where n = q*k + r. Requires 1 <= k <= n.
Graph build_turan(int n, int k);

/// Degree threshold under which every t vertices share a neighbor:
/// delta >= n - q when r > 0, delta >= n - q + 1 when r = 0. When it holds
/// the graph has no maximal clique of size exactly t.
bool no_t_clique_condition(const Graph& g, int t);

/// Which branch of the inductive argument (clique side) a pair (G, t) takes.
enum class Subcase { kTrivial, k1a, k1b, k2a, k2b };

std::string_view to_string(Subcase subcase);

/// kTrivial when t = 1 or n < t; otherwise 1a/1b (r > 0) or 2a/2b (r = 0)
/// by the degree threshold.
Subcase classify_subcase(const Graph& g, int t);

/// Split of the t-maximal cliques of G by containment of v.
struct SplitReport {
  Vertex v = 0;
  int t = 1;
  Count a_count = 0;       ///< t-maximal cliques containing v
  Count b_count = 0;       ///< t-maximal cliques avoiding v
  Count nbhd_count = 0;    ///< (t-1)-maximal cliques of G[N(v)]
  Count gminus_count = 0;  ///< t-maximal cliques of G - v
  Count total = 0;         ///< t-maximal cliques of G
};

/// Lowest-index vertex of minimum degree.
Vertex auto_split_vertex(const Graph& g);

/// Computes the four counts by direct enumeration and checks
/// a = nbhd, a + b = total, b <= gminus (throws SplitIdentityError otherwise).
/// v defaults to auto_split_vertex(g).
SplitReport induction_split(const Graph& g, int t, std::optional<Vertex> v = std::nullopt);

/// Exhaustive ceiling without opt-in, and with it.
inline constexpr int kLabeledDefaultMaxOrder = 7;
inline constexpr int kLabeledOptInMaxOrder = 8;

/// The graph whose edges are the set bits of mask, bit k standing for the
/// k-th pair in column order (0,1),(0,2),(1,2),(0,3),...
Graph labeled_graph(int n, std::uint64_t mask);

/// Every labeled simple graph on n vertices, indexed by edge mask.
class LabeledGraphs {
 public:
  /// Throws OrderLimitError for n > 7 unless allow_order_8 is set, and for
  /// n > 8 always.
  explicit LabeledGraphs(int n, bool allow_order_8 = false);

  int order() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << (n_ * (n_ - 1) / 2); }
  Graph operator[](std::uint64_t index) const { return labeled_graph(n_, index); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < size(); ++i) f((*this)[i]);
  }

 private:
  int n_;
};

inline LabeledGraphs labeled_graphs(int n, bool allow_order_8 = false) { return LabeledGraphs(n, allow_order_8); }

/// Which count the verifier maximizes: maximal independent sets of G (the
/// theorem's statement) or maximal cliques of G (its complemented form).
enum class Side { kMis, kClique };

std::string_view to_string(Side side);
std::optional<Side> parse_side(std::string_view name);

/// build_H for the MIS side, build_turan for the clique side.
Graph expected_extremal(int n, int t, Side side);

struct VerifyOptions {
  Side side = Side::kMis;
  int workers = 1;
};

struct VerifyTarget {
  int t = 1;
  Graph expected;
};

struct ExtremalReport {
  int n = 0;
  int t = 1;
  Side side = Side::kMis;
  BoundDecomposition bound;
  Count max_observed = 0;
  /// Distinct canonical forms of the graphs whose count equals bound.f,
  /// ascending. Empty when n exceeds the canonical-labeling ceiling.
  std::vector<CanonicalForm> attainers;
  bool attainers_canonicalized = true;
  /// Number of examined graphs whose count equals bound.f.
  std::uint64_t attainer_graphs = 0;
  std::optional<CanonicalForm> expected;
  bool bound_holds = true;
  /// attainers == {expected}. Only conclusive under exhaustive coverage.
  bool unique_attainer = false;
  std::uint64_t graphs_examined = 0;
  bool exhaustive = false;
  std::string coverage;
};

/// Scans every labeled graph of the source once and fills one report per
/// target. Work is split into contiguous index ranges across workers and
/// merged in index order, so reports do not depend on the worker count.
std::vector<ExtremalReport> verify_bound(const LabeledGraphs& source, std::span<const VerifyTarget> targets,
                                         const VerifyOptions& options = {});

/// Same over a graph stream; all graphs must share one order. Codec errors
/// propagate with their line numbers.
std::vector<ExtremalReport> verify_bound(GraphStream& source, std::span<const VerifyTarget> targets,
                                         const VerifyOptions& options = {});

/// Builds the targets once the stream's order is known.
using TargetFactory = std::function<std::vector<VerifyTarget>(int n)>;

std::vector<ExtremalReport> verify_bound(GraphStream& source, const TargetFactory& make_targets,
                                         const VerifyOptions& options = {});

ExtremalReport verify_bound(const LabeledGraphs& source, int t, const Graph& expected,
                            const VerifyOptions& options = {});

/// Targets t in ts with expected_extremal(n, t, side).
std::vector<VerifyTarget> default_targets(int n, std::span<const int> ts, Side side);

/// Maximum total number of maximal independent sets over n-vertex graphs:
/// 3^(n/3), 4*3^((n-4)/3) or 2*3^((n-2)/3) by n mod 3. Requires n >= 2.
Count moon_moser_total(int n);

}  // namespace mis
