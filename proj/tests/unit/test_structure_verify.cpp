#include <doctest.h>

#include <map>

#include "chibound/clique.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/partition.hpp"
#include "chibound/structure_verify.hpp"
#include "support.hpp"

using namespace chibound;

namespace {

const char* const fixtures[] = {"case2.col",           "case3_2_1_1.col",      "case3_2_1_2.col",
                                "case3_2_1_x3_undominated.col", "case3_2_2_up2.col", "case3_2_earlyout.col",
                                "wlog_gap_omega4.col"};

std::vector<Graph> seed_graphs() {
  std::vector<Graph> out;
  for (const char* f : fixtures) out.push_back(io::read_graph(testing::data_path(f)));
  out.push_back(testing::up3_graph(4, 1));
  out.push_back(testing::up3_graph(5, 3));
  out.push_back(g_star(4));
  out.push_back(complete_multipartite({2, 2, 2, 2}));
  return out;
}

const LemmaReport& find(const std::vector<LemmaReport>& rs, LemmaId id) {
  for (const auto& r : rs)
    if (r.lemma_id == id) return r;
  throw std::logic_error("missing report");
}

} // namespace

TEST_CASE("lemma ids") {
  CHECK(all_lemma_ids().size() == 17);
  for (LemmaId id : all_lemma_ids()) CHECK(parse_lemma_id(lemma_id_name(id)) == id);
  CHECK(parse_lemma_id("lem-ut-v") == LemmaId::LEM_UT_V);
  CHECK_THROWS_AS(parse_lemma_id("LEM_9"), std::invalid_argument);
  CHECK(lemma_status_name(LemmaStatus::size_cap_exceeded) == "size_cap_exceeded");
}

TEST_CASE("every check holds on the fixtures") {
  for (const Graph& g : seed_graphs()) {
    const auto reports = verify_all(g, build_two_level(g));
    CHECK(reports.size() == 17);
    for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].lemma_id == all_lemma_ids()[i]);
    for (const auto& r : reports) {
      CAPTURE(lemma_id_name(r.lemma_id));
      CHECK(r.holds);
      CHECK(r.status != LemmaStatus::violated);
    }
  }
}

TEST_CASE("the dominated-U_p items apply on the constructed instances") {
  for (const Graph& g : {io::read_graph(testing::data_path("case3_2_2_up2.col")), testing::up3_graph(4, 2)}) {
    const auto rs = check_ut_up_lemma(g, build_two_level(g));
    for (const auto& r : rs) {
      CAPTURE(lemma_id_name(r.lemma_id));
      CHECK(r.status == LemmaStatus::holds);
    }
  }
}

TEST_CASE("hypotheses gate the checks") {
  const Graph mp = complete_multipartite({2, 2, 2, 2});
  const auto p = build_two_level(mp);
  for (const auto& r : check_prop1(mp, p)) CHECK(r.status == LemmaStatus::holds);
  for (const auto& r : check_indep_subset_lemma(mp, p)) CHECK(r.holds);
  CHECK(check_structural_theorem(mp, p).status == LemmaStatus::holds);

  // G* alone: X3 = ∅
  const Graph gs = g_star(4);
  for (const auto& r : check_ut_up_lemma(gs, build_two_level(gs))) CHECK(r.status == LemmaStatus::inapplicable);

  const Graph c5 = cycle_graph(5);
  for (const auto& r : verify_all(c5, build_two_level(c5))) {
    CHECK(r.status == LemmaStatus::inapplicable);
    CHECK(r.holds);
  }
  const Graph p7 = path_graph(7);
  for (const auto& r : check_v2_structure(p7, build_two_level(p7))) CHECK(r.status == LemmaStatus::inapplicable);
}

TEST_CASE("size cap on the independent-set enumeration") {
  const Graph g = io::read_graph(testing::data_path("case3_2_1_1.col"));
  const auto p = build_two_level(g);
  VerifyOptions o;
  o.indset_cap = 2;
  const auto rs = check_indep_subset_lemma(g, p, o);
  CHECK(rs[0].status == LemmaStatus::size_cap_exceeded);
  CHECK(rs[1].status == LemmaStatus::size_cap_exceeded);
  CHECK(rs[0].holds);
}

TEST_CASE("fault injection: removing an edge between two parts of X1") {
  const Graph mp = complete_multipartite({2, 2, 2, 2});
  GraphBuilder b(mp);
  b.remove_edge(1, 3);
  const Graph g = b.build();
  const auto r = check_structural_theorem(g, build_two_level(g), VerifyOptions{false, 25});
  CHECK(r.status == LemmaStatus::violated);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->vertices.size() == 3);
  const auto p1 = check_prop1(g, build_two_level(g), VerifyOptions{false, 25});
  CHECK(find(p1, LemmaId::PROP1_I).status == LemmaStatus::violated);
}

TEST_CASE("fault injection: U'_t enlarged to three vertices") {
  const Graph g = io::read_graph(testing::data_path("case3_2_2_up2.col"));
  auto p = build_two_level(g);
  int t = 0;
  for (int k = 1; k <= p.second.omega(); ++k)
    if (!p.second.i_class(k).empty()) t = k;
  REQUIRE(t != 0);
  const Vertex moved = p.x3.first();
  p.x3.erase(moved);
  p.x2.insert(moved);
  for (auto& c : p.second.pair_classes) c.erase(moved);
  p.second.i_class(t).insert(moved);
  const auto rs = check_ut_up_lemma(g, p, VerifyOptions{false, 25});
  const auto& r = find(rs, LemmaId::LEM_UT_I);
  CHECK(r.status == LemmaStatus::violated);
  CHECK(r.counterexample->vertices.size() == 3);
}

TEST_CASE("fault injection: a P3 across the cliques of X3") {
  const Graph g = io::read_graph(testing::data_path("case3_2_1_1.col"));
  auto p = build_two_level(g);
  // graft the partition onto a graph where two X3 vertices lose their edge
  REQUIRE(p.x3.count() >= 3);
  const auto x3 = p.x3.to_vector();
  GraphBuilder b(g);
  b.remove_edge(x3[0], x3[1]);
  const Graph h = b.build();
  const auto rs = check_v2_structure(h, p, VerifyOptions{false, 25});
  const auto& r = find(rs, LemmaId::LEM_V2_II);
  CHECK(r.status == LemmaStatus::violated);
  CHECK(r.counterexample->vertices.size() == 3);
}

TEST_CASE("fault injection: single edge toggles expose every check") {
  std::map<LemmaId, int> caught;
  const VerifyOptions forced{false, 25};
  for (const Graph& g : seed_graphs()) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        GraphBuilder b(g);
        if (b.adjacent(u, v)) b.remove_edge(u, v);
        else b.add_edge(u, v);
        const Graph h = b.build();
        for (const auto& r : verify_all(h, build_two_level(h), forced)) {
          if (r.status != LemmaStatus::violated) continue;
          CHECK_FALSE(r.holds);
          REQUIRE(r.counterexample);
          for (Vertex x : r.counterexample->vertices) CHECK((x >= 0 && x < h.order()));
          if (!r.counterexample->vertices.empty()) ++caught[r.lemma_id];
        }
      }
  }
  for (LemmaId id : all_lemma_ids()) CHECK_MESSAGE(caught[id] > 0, lemma_id_name(id));
}

TEST_CASE("no violation on sampled members") {
  CorpusOptions o;
  o.count = 80;
  o.n_min = 8;
  o.n_max = 18;
  o.omegas = {4, 5, 6};
  o.seed = 33;
  for (const Graph& g : sample_class_corpus(o)) {
    REQUIRE(clique_number(g) >= 4);
    const auto rs = verify_all(g, build_two_level(g));
    CHECK_FALSE(any_violation(rs));
  }
}
