#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chibound/vertex_set.hpp"

namespace chibound {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency.
/// Immutable once built; build through GraphBuilder or from_edge_list.
class Graph {
public:
  Graph() = default;

  /// Throws EndpointOutOfRange or SelfLoop. Repeated pairs collapse to one edge.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t size() const;
  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }
  VertexSet vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  friend class GraphBuilder;
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g) : n_(g.n_), adj_(g.adj_) {}

  int order() const { return n_; }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  /// Appends an isolated vertex and returns its id.
  Vertex add_vertex();
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  Graph build() const;

private:
  void check(Vertex u, Vertex v) const;
  int n_;
  std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

/// Induced subgraph re-indexed 0..|s|-1 in ascending host order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host; // local id -> host id

  VertexSet lift(const VertexSet& local, std::size_t host_universe) const;
};

/// Throws VertexOutOfRange when s reaches outside g.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// Every s-t pair adjacent. Throws OverlappingSets when s and t meet.
bool is_complete_between(const Graph& g, const VertexSet& s, const VertexSet& t);
/// True when no edge joins s and t.
bool is_anticomplete_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// N(T) ∩ S, where N(T) is the union of neighborhoods of T.
VertexSet neighbors_in(const Graph& g, const VertexSet& t, const VertexSet& s);

} // namespace chibound
