#include "mis/canon.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "mis/codec.hpp"

namespace mis {

namespace {

int pair_bits(int n) { return n * (n - 1) / 2; }

/// Per-vertex invariant: degree, then the sorted degrees of its neighbors,
/// packed so that larger means "placed later".
std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> inv(n);
  for (Vertex v = 0; v < n; ++v) {
    std::array<int, kCanonMaxOrder> nbr{};
    int k = 0;
    g.rows()[v].for_each([&](Vertex u) { nbr[k++] = g.degree(u); });
    std::sort(nbr.begin(), nbr.begin() + k);
    std::uint64_t packed = static_cast<std::uint64_t>(g.degree(v));
    for (int i = 0; i < kCanonMaxOrder; ++i) packed = packed * 16 + static_cast<std::uint64_t>(i < k ? nbr[i] + 1 : 0);
    inv[v] = packed;
  }
  return inv;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(pair_bits(g.order())) {
    invariant_ = vertex_invariants(g);
    slot_invariant_ = invariant_;
    std::sort(slot_invariant_.begin(), slot_invariant_.end());
  }

  std::uint64_t run() {
    extend(0, VertexSet(), 0);
    return best_;
  }

 private:
  void extend(int pos, VertexSet used, std::uint64_t prefix) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    const int bits_after = pair_bits(pos + 1);
    for (Vertex v = 0; v < n_; ++v) {
      if (used.contains(v) || invariant_[v] != slot_invariant_[pos]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      const std::uint64_t next = (prefix << pos) | column;
      if (have_best_ && next > (best_ >> (total_bits_ - bits_after))) continue;
      perm_[pos] = v;
      extend(pos + 1, used.with(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<std::uint64_t> invariant_;
  std::vector<std::uint64_t> slot_invariant_;
  std::array<Vertex, kCanonMaxOrder> perm_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonMaxOrder) {
    throw OrderLimitError("canonical labeling supports at most " + std::to_string(kCanonMaxOrder) +
                          " vertices, got " + std::to_string(g.order()));
  }
  return CanonicalForm{g.order(), CanonSearch(g).run()};
}

Graph to_graph(const CanonicalForm& form) {
  GraphBuilder b(form.n);
  int k = pair_bits(form.n) - 1;
  for (Vertex j = 1; j < form.n; ++j)
    for (Vertex i = 0; i < j; ++i, --k)
      if ((form.key >> k) & 1U) b.add_edge(i, j);
  return b.build();
}

std::string to_string(const CanonicalForm& form) { return graph6_encode(to_graph(form)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kCanonMaxOrder || b.order() > kCanonMaxOrder) {
    throw OrderLimitError("isomorphism test supports at most " + std::to_string(kCanonMaxOrder) + " vertices");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mis
