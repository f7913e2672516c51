#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chibound/coloring.hpp"
#include "chibound/graph.hpp"
#include "chibound/partition.hpp"
#include "chibound/patterns.hpp"
#include "chibound/structure_verify.hpp"

namespace chibound::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 2;
inline constexpr int exit_input = 3;

struct RunReport {
  RunReport() = default;
  RunReport(std::string cmd, std::string digest) : command(std::move(cmd)), input_digest(std::move(digest)) {}

  std::string command;
  std::string input_digest; // hex SHA-256
  json outputs = json::object();
  int exit_code = exit_ok;
  std::string summary; // one line for stderr

  json to_json() const;
};

std::string sha256_hex(const std::string& bytes);

struct Input {
  Graph graph;
  std::string digest;
};

/// Reads and hashes a graph file. Throws ParseError / std::runtime_error.
Input load_input(const std::string& path, const std::optional<std::string>& format);

json vertices_json(const VertexSet& s);
json witness_json(const std::optional<PatternWitness>& w);
json partition_json(const TwoLevelPartition& p);
json coloring_json(const Coloring& c, bool trace);
json trace_json(const CaseTrace& t);
json lemma_json(const LemmaReport& r);

RunReport cmd_check(const Input& in, const std::optional<std::string>& pattern);
RunReport cmd_partition(const Input& in, const std::optional<std::vector<Vertex>>& clique);
RunReport cmd_color(const Input& in, bool fallback_exact, bool trace);
RunReport cmd_chi(const Input& in, int cap);
RunReport cmd_alpha(const Input& in, int cap);
RunReport cmd_verify(const Input& in, const std::optional<std::string>& lemma);

struct GenParams {
  std::string family; // gstar | circulant | random
  int omega = 4;
  int n = 17;
  std::vector<int> lengths{1, 2, 4, 8};
  double p = 0.5;
  std::uint64_t seed = 1;
  int max_tries = 1000;
  int max_omega = 0; // random: > 0 selects the structured sampler
};

/// Returns the report and, on success, the generated graph.
RunReport cmd_gen(const GenParams& params, std::optional<Graph>& out);

struct SuiteParams {
  std::optional<std::string> corpus_dir;
  std::optional<std::string> format;
  int gstar_lo = 0, gstar_hi = -1; // empty range by default
  int count = 0;
  int n_min = 6, n_max = 16;
  std::vector<int> omegas{1, 2, 4, 5, 6};
  std::uint64_t seed = 1;
  int cap = 20;
  int threads = 0; // 0 = hardware concurrency
};

RunReport cmd_suite(const SuiteParams& params);

/// Per-graph suite pipeline: membership, coloring, bound, exact χ (n <= cap),
/// lemma checks (ω >= 4). `failures` collects invariant violations.
json suite_item(const Graph& g, const std::string& name, int cap, std::vector<std::string>& failures);

/// "4..8" -> {4, 8}; "5" -> {5, 5}. Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

} // namespace chibound::cli
