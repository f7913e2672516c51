#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/errors.hpp"
#include "chibound/graph.hpp"

namespace chibound {

/// Branches of the constructive coloring. CASE3_2_1_X3_UNDOMINATED is the
/// part of Case 3.2.1 where some vertex of X3 has no neighbor in U_p;
/// FALLBACK_EXACT marks a coloring completed by the exact oracle.
enum class CaseLabel {
  SMALL_OMEGA,
  OMEGA3_CHI2,
  OMEGA3_C5,
  CASE1,
  CASE2,
  CASE3_1,
  CASE3_2_EARLYOUT,
  CASE3_2_1_X3_UNDOMINATED,
  CASE3_2_1_1,
  CASE3_2_1_2,
  CASE3_2_2_UP3,
  CASE3_2_2_UP2,
  FALLBACK_EXACT,
};

std::string_view case_label_name(CaseLabel label);

struct CaseTrace {
  int omega = 0;
  std::vector<CaseLabel> case_path;
  /// Pivotal vertices and indices by role ("t", "p", "z1", "z2", "y1",
  /// "h_omega", "a", "s", ...). Vertex roles hold host ids; "t", "p" and "s"
  /// hold 1-based class indices or colors.
  std::map<std::string, int> pivots;
  std::vector<std::string> notes;

  bool has(CaseLabel label) const;
};

struct Coloring {
  std::vector<int> colors; // 1-based color per vertex, 0 = uncolored
  int palette_size = 0;    // largest color used
  CaseTrace trace;
};

/// A step the proof guarantees found no legal color, or a structural fact the
/// proof relies on did not hold. Carries the partial coloring.
class ProofGapError : public Error {
public:
  ProofGapError(const std::string& what, Coloring partial, Vertex blocking)
      : Error(what), partial_(std::move(partial)), blocking_(blocking) {}
  const Coloring& partial() const { return partial_; }
  const CaseTrace& trace() const { return partial_.trace; }
  Vertex blocking_vertex() const { return blocking_; }

private:
  Coloring partial_;
  Vertex blocking_;
};

/// Palette guaranteed for the class: ω+1 for ω = 2 and ω >= 4, 7 for ω = 3,
/// ω for ω <= 1.
int coloring_bound(int omega);

struct ColorOptions {
  /// On ProofGapError finish with the exact oracle instead of throwing.
  bool fallback_exact = false;
};

/// Proper coloring within coloring_bound(ω). Throws NotInClass for graphs
/// outside the class and ProofGapError (strict mode) when a proof step fails.
Coloring color(const Graph& g, const ColorOptions& options = {});

/// ω <= 2: exact coloring within the 3-color budget.
Coloring color_small_omega(const Graph& g);

/// ω = 3: the seven-color scheme around the first-level partition.
Coloring color_omega3(const Graph& g);

/// ω >= 4: the (ω+1)-coloring built on the two-level partition.
Coloring color_omega_ge4(const Graph& g);

/// Splits V(h) into at most `budget` independent sets by exact search.
/// Throws BudgetInfeasible when no such split exists.
std::vector<VertexSet> partition_p3k1free_graph(const Graph& h, int budget);

/// Throws UncoloredVertex when some vertex has no color; otherwise true iff proper.
bool verify_coloring(const Graph& g, const Coloring& c);

} // namespace chibound
