#include <doctest.h>

#include "chibound/clique.hpp"
#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/partition.hpp"
#include "chibound/patterns.hpp"
#include "support.hpp"

using namespace chibound;

TEST_CASE("max clique") {
  CHECK(max_clique(complete_graph(5)).count() == 5);
  CHECK(max_clique(cycle_graph(5)).count() == 2);
  CHECK(clique_number(g_star(5)) == 5);
  CHECK(clique_number(petersen_graph()) == 2);
  for (int i = 0; i < 60; ++i) {
    const Graph g = testing::random_graph(4 + i % 9, 0.5, 40 + i);
    CHECK(clique_number(g) == testing::naive_clique_number(g));
  }
}

TEST_CASE("first level on small graphs") {
  const auto k4 = build_partition(complete_graph(4), {0, 1, 2, 3});
  CHECK(k4.independents_union().empty());
  CHECK(k4.pair_union().empty());

  const auto c5 = build_partition(cycle_graph(5), {0, 1});
  CHECK(c5.i_class(1) == VertexSet(5, {2}));
  CHECK(c5.i_class(2) == VertexSet(5, {4}));
  CHECK(c5.c_class(1, 2) == VertexSet(5, {3}));

  // star: centre 0, leaves 1..3, A = (0, 1)
  const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = build_partition(star, {0, 1});
  CHECK(s.i_class(2) == VertexSet(4, {2, 3}));
  CHECK(s.part(2) == VertexSet(4, {1, 2, 3}));
  CHECK(s.part_of(3) == 2);
}

TEST_CASE("least missing pair rule") {
  // vertex 4 misses v_2 and v_4 of the K4 0..3
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 2}});
  const auto p = build_partition(g, {0, 1, 2, 3});
  CHECK(p.c_class(2, 4) == VertexSet(5, {4}));
  const auto q = build_partition(g, {3, 2, 1, 0});
  CHECK(q.c_class(1, 3) == VertexSet(5, {4}));
}

TEST_CASE("partition errors") {
  CHECK_THROWS_AS(build_partition(cycle_graph(5), {0, 2}), NotAClique);
  CHECK_THROWS_AS(build_partition(complete_graph(4), {0, 1, 1}), NotAClique);
  CHECK_THROWS_AS(build_partition(complete_graph(4), {0, 1, 2}), NotMaximum);
  CHECK_THROWS_AS(build_two_level(Graph{}), EmptyGraph);
}

TEST_CASE("two level on special graphs") {
  const auto mp = build_two_level(complete_multipartite({2, 2, 2, 2}));
  CHECK(mp.v2.empty());
  CHECK(mp.x2.empty());
  CHECK(mp.x3.empty());
  CHECK(mp.x1.count() == 8);

  const auto k1 = build_two_level(complete_graph(1));
  CHECK(k1.first.clique == std::vector<Vertex>{0});
  CHECK(k1.v2.empty());

  // G* alone: the h clique is the first-level clique, so V2 = {z2} ∪ Y and X3 stays empty
  const Graph g = g_star(4);
  const auto p = build_two_level(g);
  CHECK(p.first.clique == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(p.x3.empty());
  CHECK(p.v2 == VertexSet(9, {5, 6, 7, 8}));
  CHECK(verify_partition_axioms(g, p).empty());
}

TEST_CASE("supplied clique is honoured") {
  const Graph g = g_star(4);
  const auto p = build_two_level(g, std::vector<Vertex>{6, 7, 8, 4});
  CHECK(p.first.clique == std::vector<Vertex>{6, 7, 8, 4});
  CHECK(verify_partition_axioms(g, p).empty());
}

TEST_CASE("axiom checker catches a moved vertex") {
  const Graph g = cycle_graph(5);
  auto p = build_two_level(g, std::vector<Vertex>{0, 1});
  CHECK(verify_partition_axioms(g, p).empty());
  p.first.i_class(1).erase(2);
  p.first.i_class(2).insert(2);
  const auto v = verify_partition_axioms(g, p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].vertices == std::vector<Vertex>{2});
}

TEST_CASE("axioms hold on random class members") {
  CorpusOptions o;
  o.count = 200;
  o.n_min = 6;
  o.n_max = 20;
  o.seed = 11;
  for (const Graph& g : sample_class_corpus(o)) {
    const auto p = build_two_level(g);
    CHECK(verify_partition_axioms(g, p).empty());
    CHECK(p.second.omega() == clique_number_within(g, p.v2));
  }
}
