#pragma once

#include <optional>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

inline constexpr int default_oracle_cap = 20;

/// An exact graph invariant together with a certificate attaining it: a
/// 1-based color per vertex for χ, a vertex list for α and ω.
struct OracleResult {
  int value = 0;
  std::vector<int> certificate;
};

struct ChromaticOptions {
  int cap = default_oracle_cap;
  /// Also use ⌈n/α⌉ as a lower bound (α computed exactly).
  bool independence_bound = true;
};

/// DSATUR branch and bound seeded with a maximum clique. Throws SizeCapExceeded
/// above options.cap vertices.
OracleResult exact_chromatic_number(const Graph& g, const ChromaticOptions& options = {});

/// α(G) with a maximum independent set. Throws SizeCapExceeded above cap.
OracleResult independence_number(const Graph& g, int cap = default_oracle_cap);

/// ω(G) with a maximum clique.
OracleResult clique_oracle(const Graph& g);

/// A proper coloring with colors 1..budget, or nullopt when none exists.
/// Exact (exhaustive) search; no size cap.
std::optional<std::vector<int>> color_with_budget(const Graph& g, int budget);

/// True iff `colors` assigns a color >= 1 to every vertex and no edge is monochromatic.
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

} // namespace chibound
