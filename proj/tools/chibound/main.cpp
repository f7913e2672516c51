#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chibound/errors.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/oracles.hpp"
#include "commands.hpp"

using namespace chibound;
using namespace chibound::cli;

namespace {

struct Common {
  std::string file;
  std::optional<std::string> format;
  bool compact = false;
};

int emit(const RunReport& r, bool compact) {
  std::cout << (compact ? r.to_json().dump() : r.to_json().dump(2)) << '\n';
  if (!compact && !r.summary.empty()) std::cerr << r.summary << '\n';
  return r.exit_code;
}

int input_failure(const std::string& command, const std::string& what, bool compact) {
  RunReport r{command, ""};
  r.outputs["error"] = what;
  r.exit_code = exit_input;
  r.summary = command + ": " + what;
  std::cout << (compact ? r.to_json().dump() : r.to_json().dump(2)) << '\n';
  std::cerr << r.summary << '\n';
  return exit_input;
}

template <class Fn>
int with_input(const std::string& command, const Common& c, Fn&& fn) {
  Input in;
  try {
    in = load_input(c.file, c.format);
  } catch (const std::exception& e) {
    return input_failure(command, e.what(), c.compact);
  }
  return emit(fn(in), c.compact);
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("file", c.file, "graph file (.col = DIMACS, otherwise edge list)")->required();
  sub->add_option("--format", c.format, "dimacs | edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));
  sub->add_flag("--json", c.compact, "compact JSON, no stderr summary");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chibound: colouring and structure checks for (P3+2K1, co-(P3+2K1))-free graphs"};
  app.require_subcommand(1);
  int code = 0;

  Common check_c;
  std::optional<std::string> pattern_name;
  auto* check = app.add_subcommand("check", "class membership, or search for one pattern");
  add_common(check, check_c);
  check->add_option("--pattern", pattern_name, "p3-2k1, co-p3-2k1, p3-k1, p3, c5, chair, h, triangle");
  check->callback([&] { code = with_input("check", check_c, [&](const Input& in) { return cmd_check(in, pattern_name); }); });

  Common part_c;
  std::optional<std::vector<Vertex>> clique;
  auto* part = app.add_subcommand("partition", "two-level partition dump");
  add_common(part, part_c);
  part->add_option("--clique", clique, "ordered maximum clique (0-based ids)")->delimiter(',');
  part->callback([&] { code = with_input("partition", part_c, [&](const Input& in) { return cmd_partition(in, clique); }); });

  Common color_c;
  bool fallback = false, trace = false;
  auto* col = app.add_subcommand("color", "colour with at most omega+1 colours (7 for omega = 3)");
  add_common(col, color_c);
  col->add_flag("--fallback-exact", fallback, "finish with the exact oracle on a proof gap");
  col->add_flag("--trace", trace, "include the full case trace");
  col->callback([&] { code = with_input("color", color_c, [&](const Input& in) { return cmd_color(in, fallback, trace); }); });

  Common chi_c;
  int chi_cap = default_oracle_cap;
  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  add_common(chi, chi_c);
  chi->add_option("--cap", chi_cap, "vertex limit")->capture_default_str();
  chi->callback([&] { code = with_input("chi", chi_c, [&](const Input& in) { return cmd_chi(in, chi_cap); }); });

  Common alpha_c;
  int alpha_cap = default_oracle_cap;
  auto* alpha = app.add_subcommand("alpha", "exact independence number");
  add_common(alpha, alpha_c);
  alpha->add_option("--cap", alpha_cap, "vertex limit")->capture_default_str();
  alpha->callback([&] { code = with_input("alpha", alpha_c, [&](const Input& in) { return cmd_alpha(in, alpha_cap); }); });

  Common verify_c;
  std::optional<std::string> lemma;
  auto* ver = app.add_subcommand("verify", "structural lemma checks");
  add_common(ver, verify_c);
  ver->add_option("--lemma", lemma, "only this check, e.g. PROP1_II or lem-ut-v");
  ver->callback([&] { code = with_input("verify", verify_c, [&](const Input& in) { return cmd_verify(in, lemma); }); });

  GenParams gp;
  std::string lengths_text = "1,2,4,8";
  std::optional<std::string> gen_out;
  bool gen_compact = false;
  auto* gen = app.add_subcommand("gen", "write a generated graph as DIMACS");
  gen->add_option("family", gp.family, "gstar | circulant | random")
      ->required()
      ->check(CLI::IsMember({"gstar", "circulant", "random"}));
  gen->add_option("--omega", gp.omega, "gstar clique number")->capture_default_str();
  gen->add_option("--n", gp.n, "order")->capture_default_str();
  gen->add_option("--lengths", lengths_text, "circulant distances")->capture_default_str();
  gen->add_option("--p", gp.p, "random edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--seed", gp.seed, "random seed")->capture_default_str();
  gen->add_option("--max-tries", gp.max_tries, "rejection sampler budget")->capture_default_str();
  gen->add_option("--max-omega", gp.max_omega, "use the structured sampler with this clique bound");
  gen->add_option("-o,--output", gen_out, "write DIMACS here and print the report instead");
  gen->add_flag("--json", gen_compact, "compact JSON report");
  gen->callback([&] {
    try {
      gp.lengths = parse_int_list(lengths_text);
    } catch (const std::invalid_argument& e) {
      code = input_failure("gen", e.what(), gen_compact);
      return;
    }
    std::optional<Graph> g;
    RunReport r = cmd_gen(gp, g);
    if (!g) {
      code = emit(r, gen_compact);
      return;
    }
    if (gen_out) {
      std::ofstream f(*gen_out);
      if (!f) {
        code = input_failure("gen", "cannot write " + *gen_out, gen_compact);
        return;
      }
      io::write_dimacs(f, *g);
      r.outputs["file"] = *gen_out;
      code = emit(r, gen_compact);
      return;
    }
    io::write_dimacs(std::cout, *g);
    if (!gen_compact) std::cerr << r.summary << '\n';
    code = r.exit_code;
  });

  SuiteParams sp;
  std::optional<std::string> gstar_range;
  std::string omegas_text = "1,2,4,5,6";
  bool suite_compact = false;
  auto* suite = app.add_subcommand("suite", "batch verification over a corpus, G* range and/or sampled members");
  suite->add_option("--corpus", sp.corpus_dir, "directory of graph files");
  suite->add_option("--format", sp.format, "dimacs | edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));
  suite->add_option("--gstar-range", gstar_range, "e.g. 4..8");
  suite->add_option("--count", sp.count, "number of sampled class members")->capture_default_str();
  suite->add_option("--n-min", sp.n_min)->capture_default_str();
  suite->add_option("--n-max", sp.n_max)->capture_default_str();
  suite->add_option("--omegas", omegas_text, "clique numbers to cycle through")->capture_default_str();
  suite->add_option("--seed", sp.seed)->capture_default_str();
  suite->add_option("--cap", sp.cap, "exact chi vertex limit")->capture_default_str();
  suite->add_option("--threads", sp.threads, "0 = all cores")->capture_default_str();
  suite->add_flag("--json", suite_compact, "compact JSON, no stderr summary");
  suite->callback([&] {
    try {
      if (gstar_range) std::tie(sp.gstar_lo, sp.gstar_hi) = parse_range(*gstar_range);
      sp.omegas = parse_int_list(omegas_text);
    } catch (const std::invalid_argument& e) {
      code = input_failure("suite", e.what(), suite_compact);
      return;
    }
    code = emit(cmd_suite(sp), suite_compact);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input;
  }
  return code;
}
