#include <doctest.h>

#include "chibound/generators.hpp"
#include "chibound/graph_io.hpp"
#include "commands.hpp"
#include "support.hpp"

using namespace chibound;
using namespace chibound::cli;

namespace {
Input load(const std::string& name) { return load_input(testing::data_path(name), std::nullopt); }
} // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("argument helpers") {
  CHECK(parse_range("4..8") == std::pair{4, 8});
  CHECK(parse_range("5") == std::pair{5, 5});
  CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
  CHECK(parse_int_list("1,2,4,8") == std::vector<int>{1, 2, 4, 8});
  CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);
}

TEST_CASE("color c5") {
  const auto r = cmd_color(load("c5.col"), false, false);
  CHECK(r.exit_code == exit_ok);
  CHECK(r.outputs["palette_size"] == 3);
  CHECK(r.outputs["verified"] == true);
  CHECK(r.outputs["omega"] == 2);
  CHECK(r.outputs["case_path"].size() == 1);
  CHECK_FALSE(r.outputs.contains("trace"));
  CHECK(cmd_color(load("c5.col"), false, true).outputs.contains("trace"));
  CHECK(r.input_digest.size() == 64);
}

TEST_CASE("color reports gaps and non-members") {
  const auto gap = cmd_color(load("wlog_gap_omega4.col"), false, true);
  CHECK(gap.exit_code == exit_violation);
  CHECK(gap.outputs.contains("partial"));
  const auto fb = cmd_color(load("wlog_gap_omega4.col"), true, false);
  CHECK(fb.exit_code == exit_ok);
  CHECK(fb.outputs["palette_size"] == 5);
  CHECK(cmd_color(load("p7.col"), false, false).exit_code == exit_input);
}

TEST_CASE("check p7") {
  const auto r = cmd_check(load("p7.col"), std::nullopt);
  CHECK(r.exit_code == exit_ok);
  CHECK(r.outputs["in_class"] == false);
  CHECK(r.outputs["witness"]["pattern"] == "p3-2k1");
  CHECK(r.outputs["witness"]["vertices"].size() == 5);
  const auto c5 = cmd_check(load("c5.col"), std::string("c5"));
  CHECK(c5.outputs["found"] == true);
  CHECK(cmd_check(load("c5.col"), std::string("k9")).exit_code == exit_input);
}

TEST_CASE("partition dump") {
  const auto r = cmd_partition(load("c5.col"), std::vector<Vertex>{0, 1});
  CHECK(r.exit_code == exit_ok);
  CHECK(r.outputs["first"]["I"]["1"] == json::array({2}));
  CHECK(r.outputs["first"]["C"]["1,2"] == json::array({3}));
  CHECK(r.outputs["violations"].empty());
  CHECK(cmd_partition(load("c5.col"), std::vector<Vertex>{0, 2}).exit_code == exit_input);
}

TEST_CASE("oracles") {
  CHECK(cmd_chi(load("c5.col"), 20).outputs["value"] == 3);
  CHECK(cmd_alpha(load("c5.col"), 20).outputs["value"] == 2);
  CHECK(cmd_chi(load("case3_2_1_1.col"), 10).exit_code == exit_input);
}

TEST_CASE("verify") {
  const auto r = cmd_verify(load("case3_2_2_up2.col"), std::nullopt);
  CHECK(r.exit_code == exit_ok);
  CHECK(r.outputs["reports"].size() == 17);
  const auto one = cmd_verify(load("case3_2_2_up2.col"), std::string("lem-ut-iv"));
  REQUIRE(one.outputs["reports"].size() == 1);
  CHECK(one.outputs["reports"][0]["status"] == "holds");
  CHECK(cmd_verify(load("c5.col"), std::string("nope")).exit_code == exit_input);
}

TEST_CASE("gen") {
  std::optional<Graph> g;
  GenParams gp;
  gp.family = "gstar";
  gp.omega = 5;
  CHECK(cmd_gen(gp, g).exit_code == exit_ok);
  CHECK(*g == g_star(5));
  gp.family = "circulant";
  gp.n = 17;
  cmd_gen(gp, g);
  CHECK(*g == circulant(17, {1, 2, 4, 8}));
  gp.family = "random";
  gp.n = 10;
  gp.p = 0.4;
  gp.seed = 7;
  cmd_gen(gp, g);
  CHECK(*g == *random_class_graph(10, 0.4, 7, 1000));
  gp.family = "gstar";
  gp.omega = 3;
  CHECK(cmd_gen(gp, g).exit_code == exit_input);
  CHECK_FALSE(g);
}

TEST_CASE("suite over G* 4..8") {
  SuiteParams sp;
  sp.gstar_lo = 4;
  sp.gstar_hi = 8;
  const auto r = cmd_suite(sp);
  CHECK(r.exit_code == exit_ok);
  CHECK(r.outputs["graphs"] == 5);
  CHECK(r.outputs["failures"].empty());
  for (const auto& item : r.outputs["items"]) CHECK(item["chi"] == item["palette_size"]);
}

TEST_CASE("suite is deterministic across thread counts") {
  SuiteParams sp;
  sp.count = 40;
  sp.seed = 4;
  sp.corpus_dir = std::string(CHIBOUND_TEST_DATA);
  sp.threads = 1;
  const std::string one = cmd_suite(sp).to_json().dump();
  sp.threads = 4;
  const std::string four = cmd_suite(sp).to_json().dump();
  CHECK(one == four);
  // the gap fixture is in the data directory
  CHECK(cmd_suite(sp).exit_code == exit_violation);
}
