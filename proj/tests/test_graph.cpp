#include <doctest.h>

#include "mis/extremal.hpp"
#include "mis/graph.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace mis;
using mis::testing::edge_set;
using mis::testing::edges_of;

namespace {

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("from_edges builds exactly the given adjacencies") {
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(edge_set(p4) == edges_of({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(p4 == path(4));

  const Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3 == Graph::complete(3));

  const Graph k2 = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(k2 == Graph::complete(2));
  CHECK(k2.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad endpoints and loops") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::empty(65), GraphError);
  CHECK_NOTHROW(Graph::empty(64));
}

TEST_CASE("from_rows validates symmetry") {
  const VertexSet good[] = {VertexSet{1}, VertexSet{0}};
  CHECK(Graph::from_rows(good) == Graph::complete(2));
  const VertexSet asymmetric[] = {VertexSet{1}, VertexSet{}};
  CHECK_THROWS_AS(Graph::from_rows(asymmetric), GraphError);
  const VertexSet loop[] = {VertexSet{0}};
  CHECK_THROWS_AS(Graph::from_rows(loop), GraphError);
  const VertexSet out_of_range[] = {VertexSet{2}, VertexSet{}};
  CHECK_THROWS_AS(Graph::from_rows(out_of_range), GraphError);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph::empty(3));
  CHECK(complement(complement(path(4))) == path(4));
  // 2K2 on {0,1},{2,3}: complement edges are the four cross pairs, a 4-cycle.
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(edge_set(complement(two_k2)) == edges_of({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(mis::testing::brute_force_isomorphic(complement(two_k2), cycle(4)));
  CHECK(complement(Graph()) == Graph());
}

TEST_CASE("induced_subgraph relabels in ascending order") {
  CHECK(induced_subgraph(path(4), VertexSet{0, 1, 2}) == path(3));
  CHECK(induced_subgraph(Graph::complete(5), VertexSet{1, 3, 4}) == Graph::complete(3));
  // C5 on {0,2,3}: only 23 survives, relabeled to (1,2).
  CHECK(edge_set(induced_subgraph(cycle(5), VertexSet{0, 2, 3})) == edges_of({{1, 2}}));
  CHECK(induced_subgraph(cycle(5), VertexSet{}) == Graph());
  CHECK_THROWS_AS(induced_subgraph(path(4), VertexSet{4}), GraphError);
}

TEST_CASE("delete_vertex") {
  CHECK(delete_vertex(Graph::complete(3), 0) == Graph::complete(2));
  CHECK(delete_vertex(path(4), 3) == path(3));
  // C5 - 2 keeps 01, 34, 40 -> relabeled 01, 23, 03: a path 1-0-3-2.
  const Graph c5_minus = delete_vertex(cycle(5), 2);
  CHECK(edge_set(c5_minus) == edges_of({{0, 1}, {2, 3}, {0, 3}}));
  CHECK(mis::testing::brute_force_isomorphic(c5_minus, path(4)));
  CHECK_THROWS_AS(delete_vertex(path(4), 4), GraphError);
  CHECK_THROWS_AS(delete_vertex(path(4), -1), GraphError);
}

TEST_CASE("disjoint_union") {
  CHECK(disjoint_union(Graph::complete(1), Graph::complete(1)) == Graph::empty(2));
  const Graph k2k3 = disjoint_union(Graph::complete(2), Graph::complete(3));
  CHECK(k2k3.order() == 5);
  CHECK(k2k3.edge_count() == 4);
  // K3 + K3 against the complement of K_{3,3} built by hand.
  const Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(edge_set(disjoint_union(Graph::complete(3), Graph::complete(3))) == edge_set(complement(k33)));
  CHECK(disjoint_union(Graph::complete(3), Graph::complete(3)) == complement(build_turan(6, 2)));
  CHECK_THROWS_AS(disjoint_union(Graph::empty(40), Graph::empty(25)), GraphError);
  CHECK(disjoint_union(Graph::empty(40), Graph::empty(24)).order() == 64);
}

TEST_CASE("degrees") {
  CHECK(cycle(5).min_degree() == 2);
  CHECK(path(4).min_degree() == 1);
  CHECK(path(4).degree(1) == 2);
  CHECK(build_turan(7, 3).min_degree() == 4);
  CHECK_THROWS_AS(Graph().min_degree(), GraphError);
  CHECK_THROWS_AS(path(4).degree(4), GraphError);
}

TEST_CASE("relabel") {
  const std::vector<Vertex> reverse = {3, 2, 1, 0};
  CHECK(relabel(path(4), reverse) == path(4));
  const std::vector<Vertex> rotate = {1, 2, 3, 4, 0};
  CHECK(relabel(cycle(5), rotate) == cycle(5));
  const std::vector<Vertex> bad = {0, 0, 1, 2};
  CHECK_THROWS_AS(relabel(path(4), bad), GraphError);
}

TEST_CASE("structural properties on a random suite") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = mis::testing::random_order(rng, 0, 20);
    const Graph g = mis::testing::random_graph(rng, n, mis::testing::random_density(rng));
    REQUIRE(is_well_formed(g));
    CHECK(complement(complement(g)) == g);
    CHECK(is_well_formed(complement(g)));
    CHECK(induced_subgraph(g, g.vertices()) == g);
    for (Vertex v = 0; v < n; ++v) {
      const Graph d = delete_vertex(g, v);
      CHECK(d == induced_subgraph(g, g.vertices().without(v)));
      CHECK(is_well_formed(d));
    }

    const int m = mis::testing::random_order(rng, 0, 12);
    const Graph h = mis::testing::random_graph(rng, m, 0.5);
    const Graph u = disjoint_union(g, h);
    REQUIRE(is_well_formed(u));
    for (Vertex v = 0; v < n; ++v) CHECK(u.degree(v) == g.degree(v));
    for (Vertex v = 0; v < m; ++v) CHECK(u.degree(n + v) == h.degree(v));
    CHECK(u.edge_count() == g.edge_count() + h.edge_count());
  }
}

}  // TEST_SUITE
