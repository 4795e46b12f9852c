#include "mis/enumerate.hpp"

#include <numeric>
#include <sstream>

namespace mis {

namespace {

void checked_add(Count& acc, Count delta) {
  if (__builtin_add_overflow(acc, delta, &acc)) throw CountOverflow("maximal set counter overflowed 64 bits");
}

/// Pivoted Bron-Kerbosch over bit rows. `clique` is the current clique,
/// `candidates` extend it, `excluded` were already branched on.
///
/// The pivot is the vertex of candidates | excluded whose neighborhood
/// covers the most candidates, lowest index on ties; only candidates outside
/// its neighborhood are branched on, in ascending order.
template <typename Visitor>
class CliqueExpander {
 public:
  CliqueExpander(const Graph& g, Visitor& visitor) : rows_(g.rows()), visitor_(visitor) {}

  void run(VertexSet all) { expand(VertexSet(), all, VertexSet()); }

 private:
  void expand(VertexSet clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) visitor_(clique);
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    (candidates | excluded).for_each([&](Vertex u) {
      const int cover = (candidates & rows_[u]).size();
      if (cover > best) {
        best = cover;
        pivot = u;
      }
    });
    const VertexSet branch = candidates - rows_[pivot];
    branch.for_each([&](Vertex v) {
      expand(clique.with(v), candidates & rows_[v], excluded & rows_[v]);
      candidates.erase(v);
      excluded.insert(v);
    });
  }

  std::span<const VertexSet> rows_;
  Visitor& visitor_;
};

template <typename Visitor>
void for_each_maximal_clique(const Graph& g, Visitor& visitor) {
  CliqueExpander<Visitor> expander(g, visitor);
  expander.run(g.vertices());
}

struct SizeCounter {
  std::vector<Count>* counts;
  void operator()(VertexSet clique) { checked_add((*counts)[clique.size()], 1); }
};

struct CallbackVisitor {
  const std::function<void(VertexSet)>* visit;
  Count visited = 0;
  void operator()(VertexSet s) {
    (*visit)(s);
    checked_add(visited, 1);
  }
};

void check_scan_order(const Graph& g, const char* what) {
  if (g.order() > kSubsetScanMaxOrder) {
    throw OrderLimitError(std::string(what) + " scans all subsets and accepts at most " +
                          std::to_string(kSubsetScanMaxOrder) + " vertices, got " + std::to_string(g.order()));
  }
}

/// independent[S] for every subset S of the vertex set.
std::vector<bool> independence_table(const Graph& g) {
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  std::vector<bool> independent(subsets);
  independent[0] = true;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const VertexSet set(s);
    const Vertex low = set.first();
    const VertexSet rest = set.without(low);
    independent[s] = independent[rest.bits()] && !g.rows()[low].intersects(rest);
  }
  return independent;
}

}  // namespace

Count SizeProfile::at(int s) const {
  return s >= 0 && s < static_cast<int>(counts.size()) ? counts[s] : 0;
}

Count SizeProfile::total() const {
  Count sum = 0;
  for (Count c : counts) checked_add(sum, c);
  return sum;
}

int SizeProfile::max_size() const {
  for (int s = static_cast<int>(counts.size()) - 1; s >= 0; --s)
    if (counts[s] != 0) return s;
  return -1;
}

Count enumerate_maximal_cliques(const Graph& g, const std::function<void(VertexSet)>& visit) {
  CallbackVisitor visitor{&visit};
  for_each_maximal_clique(g, visitor);
  return visitor.visited;
}

Count enumerate_mis(const Graph& g, const std::function<void(VertexSet)>& visit) {
  return enumerate_maximal_cliques(complement(g), visit);
}

SizeProfile maximal_clique_size_profile(const Graph& g) {
  SizeProfile profile{g.order(), std::vector<Count>(g.order() + 1, 0)};
  SizeCounter counter{&profile.counts};
  for_each_maximal_clique(g, counter);
  return profile;
}

SizeProfile mis_size_profile(const Graph& g) { return maximal_clique_size_profile(complement(g)); }

std::vector<Count> maximal_independence_polynomial(const Graph& g) {
  auto coefficients = mis_size_profile(g).counts;
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  return coefficients;
}

std::string polynomial_string(const std::vector<Count>& coefficients) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t s = 0; s < coefficients.size(); ++s) {
    const Count c = coefficients[s];
    if (c == 0) continue;
    if (any) os << '+';
    if (s == 0 || c != 1) os << c;
    if (s >= 1) os << 'x';
    if (s >= 2) os << '^' << s;
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

std::vector<Count> independent_set_counts(const Graph& g) {
  check_scan_order(g, "independent_set_counts");
  const auto independent = independence_table(g);
  std::vector<Count> counts(g.order() + 1, 0);
  for (std::uint64_t s = 0; s < independent.size(); ++s)
    if (independent[s]) ++counts[VertexSet(s).size()];
  return counts;
}

SizeProfile oracle_mis_size_profile(const Graph& g) {
  check_scan_order(g, "oracle_mis_size_profile");
  const auto independent = independence_table(g);
  SizeProfile profile{g.order(), std::vector<Count>(g.order() + 1, 0)};
  for (std::uint64_t s = 0; s < independent.size(); ++s) {
    if (!independent[s]) continue;
    const VertexSet set(s);
    bool maximal = true;
    (g.vertices() - set).for_each([&](Vertex v) { maximal = maximal && !independent[set.with(v).bits()]; });
    if (maximal) ++profile.counts[set.size()];
  }
  return profile;
}

bool is_independent(const Graph& g, VertexSet s) {
  bool ok = s.is_subset_of(g.vertices());
  s.for_each([&](Vertex v) { ok = ok && !g.rows()[v].intersects(s); });
  return ok;
}

bool is_clique(const Graph& g, VertexSet s) {
  bool ok = s.is_subset_of(g.vertices());
  s.for_each([&](Vertex v) { ok = ok && s.without(v).is_subset_of(g.rows()[v]); });
  return ok;
}

bool is_maximal_independent(const Graph& g, VertexSet s) {
  if (!is_independent(g, s)) return false;
  bool maximal = true;
  (g.vertices() - s).for_each([&](Vertex v) { maximal = maximal && g.rows()[v].intersects(s); });
  return maximal;
}

bool is_maximal_clique(const Graph& g, VertexSet s) {
  if (!is_clique(g, s)) return false;
  bool maximal = true;
  (g.vertices() - s).for_each([&](Vertex v) { maximal = maximal && !s.is_subset_of(g.rows()[v]); });
  return maximal;
}

}  // namespace mis
