#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

enum class PatternName { P3_2K1, CO_P3_2K1, P3_K1, P3, C5, CHAIR, H, TRIANGLE };

inline constexpr int max_pattern_order = 6;

struct Pattern {
  PatternName name;
  Graph graph;
};

/// Catalog entry. P3_2K1 is the path 0-1-2 plus isolated 3, 4; H is the paths
/// 0-1-2 and 3-4-5 joined by the edge 1-4; CHAIR is 0 adjacent to 1, 2, 3 with
/// the extra edge 3-4.
const Pattern& pattern(PatternName name);
const std::vector<PatternName>& all_patterns();

/// CLI spelling: p3-2k1, co-p3-2k1, p3-k1, p3, c5, chair, h, triangle.
std::string_view pattern_slug(PatternName name);
/// Throws std::invalid_argument on an unknown slug.
PatternName parse_pattern(std::string_view slug);

/// An induced copy of a pattern: vertices[i] is the host vertex playing
/// pattern vertex i.
struct PatternWitness {
  PatternName pattern;
  std::vector<Vertex> vertices;
};

/// Lexicographically least vertex set inducing a copy of the pattern.
std::optional<PatternWitness> find_induced(const Graph& g, PatternName p);

/// Same search for an arbitrary pattern graph; throws PatternTooLarge above
/// max_pattern_order vertices. The result is ordered as in find_induced.
std::optional<std::vector<Vertex>> find_induced_graph(const Graph& g, const Graph& pattern);

/// Least induced copy that uses vertex v.
std::optional<std::vector<Vertex>> find_induced_graph_containing(const Graph& g, const Graph& pattern,
                                                                 Vertex v);

/// True iff `vertices` (ordered as pattern vertices) induce exactly the pattern.
bool witness_matches(const Graph& g, const Graph& pattern, const std::vector<Vertex>& vertices);

struct MembershipReport {
  bool in_class = true;
  std::optional<PatternWitness> violation; // induced P3∪2K1 or its complement
};

/// Membership in the {P3∪2K1, co-(P3∪2K1)}-free class.
MembershipReport is_class_member(const Graph& g);

/// A forbidden pattern occurrence that uses vertex v, if any.
std::optional<PatternWitness> find_violation_containing(const Graph& g, Vertex v);

/// P3-free test: every connected component is complete.
bool is_union_of_cliques(const Graph& g);

std::optional<PatternWitness> find_induced_c5(const Graph& g);

} // namespace chibound
