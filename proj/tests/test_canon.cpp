#include <doctest.h>

#include "mis/canon.hpp"
#include "mis/extremal.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace mis;

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

TEST_SUITE("canon") {

TEST_CASE("canonical_form examples") {
  const std::vector<Vertex> reverse = {3, 2, 1, 0};
  CHECK(canonical_form(path(4)) == canonical_form(relabel(path(4), reverse)));
  CHECK(canonical_form(cycle(4)) != canonical_form(path(4)));
  const Graph k2k3 = disjoint_union(Graph::complete(2), Graph::complete(3));
  CHECK(canonical_form(k2k3) == canonical_form(complement(build_turan(5, 2))));
  CHECK(mis::testing::brute_force_isomorphic(k2k3, complement(build_turan(5, 2))));
  CHECK(canonical_form(Graph()) == CanonicalForm{0, 0});
  CHECK(canonical_form(Graph::empty(1)) == CanonicalForm{1, 0});
}

TEST_CASE("is_isomorphic examples") {
  CHECK(is_isomorphic(cycle(5), complement(cycle(5))));
  CHECK(mis::testing::brute_force_isomorphic(cycle(5), complement(cycle(5))));
  CHECK_FALSE(is_isomorphic(disjoint_union(Graph::complete(3), Graph::complete(3)), build_turan(6, 2)));
  CHECK_FALSE(is_isomorphic(Graph::empty(3), Graph::empty(4)));

  std::mt19937_64 rng(4242);
  const Graph g = mis::testing::random_graph(rng, 9, 0.5);
  CHECK(is_isomorphic(g, relabel(g, mis::testing::random_permutation(rng, 9))));
}

TEST_CASE("ceiling") {
  CHECK_NOTHROW(canonical_form(Graph::complete(10)));
  CHECK_THROWS_AS(canonical_form(Graph::empty(11)), OrderLimitError);
  CHECK_THROWS_AS(is_isomorphic(Graph::empty(11), Graph::empty(11)), OrderLimitError);
  CHECK_THROWS_AS(is_isomorphic(Graph::empty(11), Graph::empty(3)), OrderLimitError);
}

TEST_CASE("representative is isomorphic to the input and is a fixed point") {
  std::mt19937_64 rng(4243);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = mis::testing::random_graph(rng, mis::testing::random_order(rng, 0, 7), 0.5);
    const CanonicalForm form = canonical_form(g);
    const Graph rep = to_graph(form);
    CHECK(mis::testing::brute_force_isomorphic(rep, g));
    CHECK(canonical_form(rep) == form);
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(4244);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = mis::testing::random_order(rng, 0, 8);
    const Graph g = mis::testing::random_graph(rng, n, mis::testing::random_density(rng));
    CHECK(canonical_form(relabel(g, mis::testing::random_permutation(rng, n))) == canonical_form(g));
  }
}

TEST_CASE("agrees with the unpruned all-permutations minimum") {
  std::mt19937_64 rng(4245);
  std::vector<Graph> suite;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = mis::testing::random_order(rng, 3, 6);
    // Mix relabeled copies into the suite so positive pairs occur.
    const Graph g = mis::testing::random_graph(rng, n, 0.5);
    suite.push_back(g);
    suite.push_back(relabel(g, mis::testing::random_permutation(rng, n)));
  }
  std::vector<std::vector<bool>> brute;
  for (const Graph& g : suite) brute.push_back(mis::testing::brute_force_min_triangle(g));
  int positives = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t j = i; j < suite.size(); ++j) {
      const bool expected = suite[i].order() == suite[j].order() && brute[i] == brute[j];
      CHECK(is_isomorphic(suite[i], suite[j]) == expected);
      positives += expected ? 1 : 0;
    }
  }
  CHECK(positives > static_cast<int>(suite.size()));
}

TEST_CASE("to_string is graph6 of the representative") {
  CHECK(to_string(canonical_form(Graph::complete(3))) == "Bw");
  CHECK(to_string(canonical_form(Graph::empty(5))) == "D??");
}

}  // TEST_SUITE
