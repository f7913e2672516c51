#include <doctest.h>

#include <algorithm>

#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/patterns.hpp"
#include "support.hpp"

using namespace chibound;

namespace {
std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}
} // namespace

TEST_CASE("catalog shapes") {
  CHECK(pattern(PatternName::P3_2K1).graph.order() == 5);
  CHECK(pattern(PatternName::P3_2K1).graph.size() == 2);
  CHECK(pattern(PatternName::CO_P3_2K1).graph == complement(pattern(PatternName::P3_2K1).graph));
  CHECK(pattern(PatternName::C5).graph == cycle_graph(5));
  CHECK(pattern(PatternName::H).graph.size() == 5);
  CHECK(pattern(PatternName::CHAIR).graph.size() == 4);
  for (PatternName p : all_patterns()) CHECK(parse_pattern(pattern_slug(p)) == p);
  CHECK_THROWS_AS(parse_pattern("k7"), std::invalid_argument);
}

TEST_CASE("find_induced examples") {
  // C7 minus a P3 and its neighbours is a single edge, so no copy exists there
  CHECK_FALSE(find_induced(cycle_graph(7), PatternName::P3_2K1));
  CHECK_FALSE(testing::naive_find_induced(cycle_graph(7), pattern(PatternName::P3_2K1).graph));
  const auto w = find_induced(path_graph(7), PatternName::P3_2K1);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 4, 6});
  CHECK(find_induced(cycle_graph(8), PatternName::P3_2K1));
  CHECK_FALSE(find_induced(complete_graph(5), PatternName::P3_2K1));
  const auto c5 = find_induced(cycle_graph(5), PatternName::C5);
  REQUIRE(c5);
  CHECK(sorted(c5->vertices) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(find_induced_graph(cycle_graph(9), cycle_graph(7)), PatternTooLarge);
}

TEST_CASE("membership") {
  CHECK(is_class_member(cycle_graph(5)).in_class);
  CHECK(is_class_member(g_star(4)).in_class);
  const auto p7 = io::read_graph(testing::data_path("p7.col"));
  const auto r = is_class_member(p7);
  CHECK_FALSE(r.in_class);
  REQUIRE(r.violation);
  CHECK(r.violation->pattern == PatternName::P3_2K1);
  CHECK(witness_matches(p7, pattern(PatternName::P3_2K1).graph, r.violation->vertices));
  CHECK(is_class_member(complement(p7)).violation->pattern == PatternName::CO_P3_2K1);
}

TEST_CASE("union of cliques and C5 search") {
  CHECK(is_union_of_cliques(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
  CHECK_FALSE(is_union_of_cliques(path_graph(3)));
  CHECK_FALSE(is_union_of_cliques(cycle_graph(5)));
  const auto c = find_induced_c5(cycle_graph(5));
  REQUIRE(c);
  CHECK(sorted(c->vertices) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_induced_c5(complete_multipartite({3, 4})));
  CHECK_FALSE(find_induced_c5(cycle_graph(6)));
  const auto pc = find_induced_c5(petersen_graph());
  REQUIRE(pc);
  CHECK(witness_matches(petersen_graph(), cycle_graph(5), pc->vertices));
}

TEST_CASE("find_induced agrees with naive enumeration") {
  for (int i = 0; i < 150; ++i) {
    const int n = 4 + i % 6;
    const Graph g = testing::random_graph(n, 0.15 + 0.1 * (i % 7), 1000 + i);
    for (PatternName p : all_patterns()) {
      const auto fast = find_induced(g, p);
      const auto slow = testing::naive_find_induced(g, pattern(p).graph);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(sorted(fast->vertices) == *slow);
        CHECK(witness_matches(g, pattern(p).graph, fast->vertices));
      }
    }
    CHECK(is_class_member(g).in_class == testing::naive_is_member(g));
  }
}

TEST_CASE("violation containing a vertex") {
  const Graph p7 = path_graph(7);
  const auto w = find_violation_containing(p7, 6);
  REQUIRE(w);
  CHECK(std::find(w->vertices.begin(), w->vertices.end(), 6) != w->vertices.end());
  CHECK_FALSE(find_violation_containing(cycle_graph(5), 0));
}
