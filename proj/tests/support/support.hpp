#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound::testing {

std::string data_path(const std::string& name);

/// Plain G(n, p) draw, no membership filter.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Reference pattern search: every k-subset in lexicographic order, every
/// bijection onto the pattern. Returns the sorted vertex set.
std::optional<std::vector<Vertex>> naive_find_induced(const Graph& g, const Graph& pattern);

/// Class membership via naive_find_induced.
bool naive_is_member(const Graph& g);

/// Smallest k admitting a proper k-coloring, by plain backtracking in vertex order.
int naive_chromatic_number(const Graph& g);

int naive_clique_number(const Graph& g);
int naive_independence_number(const Graph& g);

/// K_w plus two I_p vertices plus an embedded G*(w) such that U_p has three
/// vertices dominating V2; lands in the |U_p| = 3 branch. 3w+3 vertices.
Graph up3_graph(int w, int p);

} // namespace chibound::testing
