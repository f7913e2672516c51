#pragma once

#include "chibound/graph.hpp"

namespace chibound {

/// Exact maximum clique. Among all maximum cliques the lexicographically
/// least vertex set is returned. Throws EmptyGraph when n = 0.
VertexSet max_clique(const Graph& g);

/// Lexicographically least maximum clique of ⟨within⟩ (empty if within is empty).
VertexSet max_clique_within(const Graph& g, const VertexSet& within);

/// ω(G); 0 for the empty graph.
int clique_number(const Graph& g);

/// ω(⟨within⟩).
int clique_number_within(const Graph& g, const VertexSet& within);

/// Number of classes used by a greedy sequential coloring of ⟨p⟩ in
/// ascending vertex order; an upper bound on ω(⟨p⟩).
int greedy_color_bound(const Graph& g, const VertexSet& p);

} // namespace chibound
