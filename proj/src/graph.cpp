#include "mis/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mis {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  });
  out += '}';
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
  }
}

}  // namespace

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  g_.n_ = n;
}

Graph Graph::empty(int n) { return GraphBuilder(n).build(); }

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return b.build();
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  check_order(static_cast<int>(rows.size()));
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  std::copy(rows.begin(), rows.end(), g.rows_.begin());
  if (!is_well_formed(g)) throw GraphError("adjacency rows are not a simple undirected graph");
  return g;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return rows_[v];
}

int Graph::min_degree() const {
  if (n_ == 0) throw GraphError("minimum degree of the graph on zero vertices is undefined");
  int best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, rows_[v].size());
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += rows_[v].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    (rows_[u] - VertexSet::range(u + 1)).for_each([&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.set_row(v, g.rows()[v].complement(n).without(v));
  return b.build();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw GraphError("vertex set " + s.to_string() + " is not within order " + std::to_string(g.order()));
  }
  std::array<Vertex, kMaxOrder> new_label{};
  int next = 0;
  s.for_each([&](Vertex v) { new_label[v] = next++; });
  GraphBuilder b(next);
  s.for_each([&](Vertex v) {
    (g.rows()[v] & s).for_each([&](Vertex u) {
      if (u > v) b.add_edge(new_label[v], new_label[u]);
    });
  });
  return b.build();
}

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices().without(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxOrder) {
    throw GraphError("disjoint union of orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) +
                     " exceeds 64 vertices");
  }
  GraphBuilder out(n);
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out.build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation length does not match graph order");
  VertexSet seen;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen.contains(p)) throw GraphError("relabeling is not a permutation");
    seen.insert(p);
  }
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

bool is_well_formed(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet row = g.rows()[v];
    if (!row.is_subset_of(all) || row.contains(v)) return false;
    bool symmetric = true;
    row.for_each([&](Vertex u) { symmetric = symmetric && g.rows()[u].contains(v); });
    if (!symmetric) return false;
  }
  return true;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ',';
    os << '(' << u << ',' << v << ')';
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace mis
