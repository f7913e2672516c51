#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "chibound/clique.hpp"
#include "chibound/errors.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/oracles.hpp"

namespace chibound::cli {

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["outputs"] = outputs;
  j["exit_code"] = exit_code;
  return j;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

Input load_input(const std::string& path, const std::optional<std::string>& format) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string bytes = buf.str();
  const io::Format f = format ? io::parse_format(*format) : io::detect_format(path);
  std::istringstream in(bytes);
  Input out;
  out.graph = f == io::Format::dimacs ? io::read_dimacs(in) : io::read_edgelist(in);
  out.digest = sha256_hex(bytes);
  return out;
}

json vertices_json(const VertexSet& s) {
  json arr = json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

json witness_json(const std::optional<PatternWitness>& w) {
  if (!w) return nullptr;
  json j;
  j["pattern"] = std::string(pattern_slug(w->pattern));
  j["vertices"] = w->vertices;
  return j;
}

namespace {

json level_json(const WagonPartition& w) {
  json j;
  j["clique"] = w.clique;
  json is = json::object();
  for (int k = 1; k <= w.omega(); ++k) is[std::to_string(k)] = vertices_json(w.i_class(k));
  j["I"] = is;
  json cs = json::object();
  for (const auto& [i, jj] : w.pairs())
    if (!w.c_class(i, jj).empty()) cs[std::to_string(i) + "," + std::to_string(jj)] = vertices_json(w.c_class(i, jj));
  j["C"] = cs;
  return j;
}

RunReport input_error(const std::string& command, const std::string& digest, const std::string& what) {
  RunReport r{command, digest};
  r.outputs["error"] = what;
  r.exit_code = exit_input;
  r.summary = command + ": " + what;
  return r;
}

} // namespace

json partition_json(const TwoLevelPartition& p) {
  json j;
  j["omega"] = p.first.omega();
  j["first"] = level_json(p.first);
  j["v1"] = vertices_json(p.v1);
  j["v2"] = vertices_json(p.v2);
  j["second"] = level_json(p.second);
  j["x1"] = vertices_json(p.x1);
  j["x2"] = vertices_json(p.x2);
  j["x3"] = vertices_json(p.x3);
  return j;
}

json trace_json(const CaseTrace& t) {
  json j;
  j["omega"] = t.omega;
  json path = json::array();
  for (CaseLabel l : t.case_path) path.push_back(std::string(case_label_name(l)));
  j["case_path"] = path;
  json piv = json::object();
  for (const auto& [k, v] : t.pivots) piv[k] = v;
  j["pivots"] = piv;
  j["notes"] = t.notes;
  return j;
}

json coloring_json(const Coloring& c, bool trace) {
  json j;
  j["colors"] = c.colors;
  j["palette_size"] = c.palette_size;
  j["omega"] = c.trace.omega;
  json path = json::array();
  for (CaseLabel l : c.trace.case_path) path.push_back(std::string(case_label_name(l)));
  j["case_path"] = path;
  if (trace) j["trace"] = trace_json(c.trace);
  return j;
}

json lemma_json(const LemmaReport& r) {
  json j;
  j["lemma_id"] = std::string(lemma_id_name(r.lemma_id));
  j["status"] = std::string(lemma_status_name(r.status));
  j["holds"] = r.holds;
  if (r.counterexample) {
    json ce;
    ce["description"] = r.counterexample->description;
    ce["vertices"] = r.counterexample->vertices;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

RunReport cmd_check(const Input& in, const std::optional<std::string>& pattern_name) {
  RunReport r{"check", in.digest};
  const Graph& g = in.graph;
  r.outputs["n"] = g.order();
  r.outputs["m"] = g.size();
  if (pattern_name) {
    PatternName name;
    try {
      name = parse_pattern(*pattern_name);
    } catch (const std::invalid_argument& e) {
      return input_error("check", in.digest, e.what());
    }
    const auto hit = find_induced(g, name);
    r.outputs["pattern"] = std::string(pattern_slug(name));
    r.outputs["found"] = hit.has_value();
    r.outputs["witness"] = witness_json(hit);
    r.summary = std::string("check: induced ") + std::string(pattern_slug(name)) + (hit ? " found" : " absent");
    return r;
  }
  const auto m = is_class_member(g);
  r.outputs["in_class"] = m.in_class;
  r.outputs["witness"] = witness_json(m.violation);
  r.summary = m.in_class ? "check: class member" : "check: not a class member";
  return r;
}

RunReport cmd_partition(const Input& in, const std::optional<std::vector<Vertex>>& clique) {
  RunReport r{"partition", in.digest};
  try {
    const auto p = build_two_level(in.graph, clique);
    r.outputs = partition_json(p);
    json viol = json::array();
    for (const auto& v : verify_partition_axioms(in.graph, p)) {
      json jv;
      jv["rule"] = v.rule;
      jv["vertices"] = v.vertices;
      jv["detail"] = v.detail;
      viol.push_back(jv);
    }
    r.outputs["violations"] = viol;
    r.exit_code = viol.empty() ? exit_ok : exit_violation;
    r.summary = "partition: ω = " + std::to_string(p.first.omega()) + ", |V2| = " + std::to_string(p.v2.count()) +
                ", |X3| = " + std::to_string(p.x3.count()) + (viol.empty() ? "" : ", AXIOM VIOLATIONS");
  } catch (const Error& e) {
    return input_error("partition", in.digest, e.what());
  }
  return r;
}

RunReport cmd_color(const Input& in, bool fallback_exact, bool trace) {
  RunReport r{"color", in.digest};
  try {
    ColorOptions o;
    o.fallback_exact = fallback_exact;
    const Coloring c = color(in.graph, o);
    r.outputs = coloring_json(c, trace);
    r.outputs["bound"] = coloring_bound(c.trace.omega);
    r.outputs["verified"] = verify_coloring(in.graph, c);
    r.summary = "color: " + std::to_string(c.palette_size) + " colors, ω = " + std::to_string(c.trace.omega);
  } catch (const ProofGapError& e) {
    r.outputs["error"] = std::string("proof gap: ") + e.what();
    r.outputs["blocking_vertex"] = e.blocking_vertex();
    r.outputs["partial"] = coloring_json(e.partial(), true);
    r.exit_code = exit_violation;
    r.summary = std::string("color: PROOF GAP: ") + e.what();
  } catch (const NotInClass& e) {
    return input_error("color", in.digest, e.what());
  }
  return r;
}

RunReport cmd_chi(const Input& in, int cap) {
  RunReport r{"chi", in.digest};
  try {
    ChromaticOptions o;
    o.cap = cap;
    const auto res = exact_chromatic_number(in.graph, o);
    r.outputs["value"] = res.value;
    r.outputs["certificate"] = res.certificate;
    r.summary = "chi: " + std::to_string(res.value);
  } catch (const SizeCapExceeded& e) {
    return input_error("chi", in.digest, e.what());
  }
  return r;
}

RunReport cmd_alpha(const Input& in, int cap) {
  RunReport r{"alpha", in.digest};
  try {
    const auto res = independence_number(in.graph, cap);
    r.outputs["value"] = res.value;
    r.outputs["certificate"] = res.certificate;
    r.summary = "alpha: " + std::to_string(res.value);
  } catch (const SizeCapExceeded& e) {
    return input_error("alpha", in.digest, e.what());
  }
  return r;
}

RunReport cmd_verify(const Input& in, const std::optional<std::string>& lemma) {
  RunReport r{"verify", in.digest};
  std::optional<LemmaId> only;
  if (lemma) {
    try {
      only = parse_lemma_id(*lemma);
    } catch (const std::invalid_argument& e) {
      return input_error("verify", in.digest, e.what());
    }
  }
  if (in.graph.order() == 0) return input_error("verify", in.digest, "empty graph");
  const auto p = build_two_level(in.graph);
  const bool member = is_class_member(in.graph).in_class;
  json reports = json::array();
  int violated = 0;
  for (const auto& rep : verify_all(in.graph, p)) {
    if (only && rep.lemma_id != *only) continue;
    if (rep.status == LemmaStatus::violated) ++violated;
    reports.push_back(lemma_json(rep));
  }
  r.outputs["in_class"] = member;
  r.outputs["reports"] = reports;
  r.exit_code = member && violated > 0 ? exit_violation : exit_ok;
  r.summary = "verify: " + std::to_string(reports.size()) + " checks, " + std::to_string(violated) + " violated";
  return r;
}

RunReport cmd_gen(const GenParams& params, std::optional<Graph>& out) {
  std::ostringstream key;
  key << params.family << ' ' << params.omega << ' ' << params.n << ' ' << params.p << ' ' << params.seed << ' '
      << params.max_tries << ' ' << params.max_omega;
  for (int l : params.lengths) key << ' ' << l;
  RunReport r{"gen", sha256_hex(key.str())};
  r.outputs["family"] = params.family;
  try {
    if (params.family == "gstar") {
      out = g_star(params.omega);
      r.outputs["omega"] = params.omega;
    } else if (params.family == "circulant") {
      out = circulant(params.n, params.lengths);
      r.outputs["n"] = params.n;
      r.outputs["lengths"] = params.lengths;
    } else if (params.family == "random") {
      if (params.max_omega > 0) {
        StructuredOptions so;
        so.n = params.n;
        so.seed = params.seed;
        so.core = params.max_omega >= 2 ? CoreKind::multipartite : CoreKind::none;
        so.core_omega = params.max_omega;
        so.max_omega = params.max_omega;
        out = random_structured_class_graph(so);
      } else {
        out = random_class_graph(params.n, params.p, params.seed, params.max_tries);
      }
      r.outputs["n"] = params.n;
      r.outputs["seed"] = params.seed;
      if (!out) {
        r.outputs["error"] = "no class member found within the try budget";
        r.exit_code = exit_input;
        r.summary = "gen: sampler gave up";
        return r;
      }
    } else {
      return input_error("gen", r.input_digest, "unknown family '" + params.family + "'");
    }
  } catch (const Error& e) {
    out.reset();
    return input_error("gen", r.input_digest, e.what());
  } catch (const std::invalid_argument& e) {
    out.reset();
    return input_error("gen", r.input_digest, e.what());
  }
  r.outputs["order"] = out->order();
  r.outputs["size"] = out->size();
  r.summary = "gen: " + params.family + " with " + std::to_string(out->order()) + " vertices";
  return r;
}

json suite_item(const Graph& g, const std::string& name, int cap, std::vector<std::string>& failures) {
  json j;
  j["name"] = name;
  j["n"] = g.order();
  j["m"] = g.size();
  auto fail = [&](const std::string& what) { failures.push_back(name + ": " + what); };
  const auto member = is_class_member(g);
  j["in_class"] = member.in_class;
  if (!member.in_class) {
    j["witness"] = witness_json(member.violation);
    return j;
  }
  const int w = clique_number(g);
  j["omega"] = w;
  const int bound = coloring_bound(w);
  int palette = -1;
  try {
    const Coloring c = color(g);
    palette = c.palette_size;
    j["palette_size"] = palette;
    json path = json::array();
    for (CaseLabel l : c.trace.case_path) path.push_back(std::string(case_label_name(l)));
    j["case_path"] = path;
    if (!verify_coloring(g, c)) fail("improper coloring");
    if (palette > bound) fail("palette " + std::to_string(palette) + " above bound " + std::to_string(bound));
  } catch (const ProofGapError& e) {
    j["proof_gap"] = e.what();
    fail(std::string("proof gap: ") + e.what());
  }
  if (g.order() <= cap) {
    ChromaticOptions o;
    o.cap = cap;
    const int chi = exact_chromatic_number(g, o).value;
    j["chi"] = chi;
    if (palette >= 0 && w != 3 && (palette - chi < 0 || palette - chi > 1))
      fail("palette - χ = " + std::to_string(palette - chi));
    if (w == 3 && chi > 6) fail("ω = 3 graph with χ = " + std::to_string(chi));
  }
  if (name.rfind("gstar-", 0) == 0 && palette != w + 1) fail("G* not colored with exactly ω+1 colors");
  if (w >= 4) {
    const auto reports = verify_all(g, build_two_level(g));
    json bad = json::array();
    for (const auto& rep : reports)
      if (rep.status == LemmaStatus::violated) bad.push_back(lemma_json(rep));
    j["lemma_violations"] = bad;
    if (!bad.empty()) fail(std::to_string(bad.size()) + " lemma violations");
  }
  return j;
}

RunReport cmd_suite(const SuiteParams& params) {
  std::vector<std::pair<std::string, Graph>> items;
  std::ostringstream key;
  try {
    if (params.corpus_dir) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(*params.corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        const Input in = load_input(f.string(), params.format);
        key << in.digest;
        items.emplace_back(f.filename().string(), in.graph);
      }
    }
  } catch (const std::exception& e) {
    return input_error("suite", "", e.what());
  }
  for (int w = params.gstar_lo; w <= params.gstar_hi; ++w) {
    if (w < 4) return input_error("suite", "", "G* needs ω >= 4");
    items.emplace_back("gstar-" + std::to_string(w), g_star(w));
  }
  if (params.count > 0) {
    CorpusOptions o;
    o.count = params.count;
    o.n_min = params.n_min;
    o.n_max = params.n_max;
    o.omegas = params.omegas;
    o.seed = params.seed;
    int i = 0;
    for (auto& g : sample_class_corpus(o)) items.emplace_back("sample-" + std::to_string(i++), std::move(g));
  }
  key << " gstar " << params.gstar_lo << ".." << params.gstar_hi << " count " << params.count << " n " << params.n_min
      << ".." << params.n_max << " seed " << params.seed << " cap " << params.cap;
  for (int w : params.omegas) key << ' ' << w;

  std::vector<json> results(items.size());
  std::vector<std::vector<std::string>> failures(items.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(params.threads > 0 ? static_cast<unsigned>(params.threads) : hw,
                                              static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++)
      results[i] = suite_item(items[i].second, items[i].first, params.cap, failures[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  RunReport r{"suite", sha256_hex(key.str())};
  json all_fail = json::array();
  int members = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (results[i]["in_class"].get<bool>()) ++members;
    for (const auto& f : failures[i]) all_fail.push_back(f);
  }
  r.outputs["graphs"] = items.size();
  r.outputs["members"] = members;
  r.outputs["failures"] = all_fail;
  r.outputs["items"] = results;
  r.exit_code = all_fail.empty() ? exit_ok : exit_violation;
  r.summary = "suite: " + std::to_string(items.size()) + " graphs, " + std::to_string(members) + " members, " +
              std::to_string(all_fail.size()) + " failures";
  return r;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected a..b");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "' in list");
    }
  }
  return out;
}

} // namespace chibound::cli
