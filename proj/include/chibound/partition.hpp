#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Partition of V(G) around an ordered maximum clique A = (v_1..v_ω):
///   I_k     = vertices outside A missing exactly v_k,
///   C_{i,j} = vertices outside A whose two smallest missing indices are i < j.
/// Class indices are 1-based as in v_1..v_ω; pairs (i,j) are stored in
/// lexicographic order.
struct WagonPartition {
  std::size_t universe = 0;
  std::vector<Vertex> clique;
  std::vector<VertexSet> independents; // I_k at index k-1
  std::vector<VertexSet> pair_classes; // C_{i,j} in lexicographic order

  int omega() const { return static_cast<int>(clique.size()); }

  static std::size_t pair_index(int i, int j, int omega);
  std::vector<std::pair<int, int>> pairs() const;

  const VertexSet& i_class(int k) const { return independents[static_cast<std::size_t>(k - 1)]; }
  VertexSet& i_class(int k) { return independents[static_cast<std::size_t>(k - 1)]; }
  const VertexSet& c_class(int i, int j) const { return pair_classes[pair_index(i, j, omega())]; }
  VertexSet& c_class(int i, int j) { return pair_classes[pair_index(i, j, omega())]; }
  Vertex v(int k) const { return clique[static_cast<std::size_t>(k - 1)]; }

  /// U_k = {v_k} ∪ I_k.
  VertexSet part(int k) const;
  VertexSet clique_set() const;
  VertexSet independents_union() const;
  /// ∪ U_k.
  VertexSet dominated() const;
  /// ∪ C_{i,j}.
  VertexSet pair_union() const;
  /// k with v ∈ U_k, or 0.
  int part_of(Vertex v) const;
};

/// Second-level partition of ⟨V2⟩ with X1 = V1, X2 = A' ∪ (∪I'_k), X3 = ∪C'_{i,j}.
/// All sets use host vertex ids.
struct TwoLevelPartition {
  WagonPartition first;
  VertexSet v1;
  VertexSet v2;
  WagonPartition second; // A', I'_k, C'_{i,j}
  VertexSet x1;
  VertexSet x2;
  VertexSet x3;
};

/// Builds the first-level partition for an ordered clique. Throws NotAClique
/// when `clique` is not a clique (or repeats / leaves the graph) and NotMaximum
/// when it is smaller than ω(G).
WagonPartition build_partition(const Graph& g, const std::vector<Vertex>& clique);

/// Same rules without the maximality check; used when the caller has just
/// computed the clique as maximum.
WagonPartition build_partition_unchecked(const Graph& g, const std::vector<Vertex>& clique);

/// Uses the lexicographically least maximum clique at both levels unless a
/// first-level clique is supplied. Throws EmptyGraph when n = 0.
TwoLevelPartition build_two_level(const Graph& g,
                                  const std::optional<std::vector<Vertex>>& clique = std::nullopt);

struct PartitionViolation {
  std::string rule;
  std::vector<Vertex> vertices;
  std::string detail;
};

/// Checks disjointness, coverage, class membership rules and the C_{i,j}
/// neighbor property at both levels, plus the V1/V2/X1/X2/X3 bookkeeping.
std::vector<PartitionViolation> verify_partition_axioms(const Graph& g, const TwoLevelPartition& p);

} // namespace chibound
