#include "chibound/graph.hpp"

#include <string>

#include "chibound/errors.hpp"

namespace chibound {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw EndpointOutOfRange("negative vertex count " + std::to_string(n));
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw EndpointOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return b.build();
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n)
    : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw EndpointOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n_) + ")");
  if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  adj_[static_cast<std::size_t>(u)].erase(v);
  adj_[static_cast<std::size_t>(v)].erase(u);
  return *this;
}

Vertex GraphBuilder::add_vertex() {
  const auto grown = static_cast<std::size_t>(n_ + 1);
  for (auto& row : adj_) {
    VertexSet wider(grown);
    for (Vertex v : row) wider.insert(v);
    row = std::move(wider);
  }
  adj_.emplace_back(grown);
  return n_++;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.adj_ = adj_;
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t host_universe) const {
  VertexSet out(host_universe);
  for (Vertex v : local) out.insert(to_host[static_cast<std::size_t>(v)]);
  return out;
}

namespace {

// Re-homes s onto the graph's universe so kernels see equal word counts.
VertexSet rehome(const Graph& g, const VertexSet& s) {
  if (s.universe() == static_cast<std::size_t>(g.order())) return s;
  VertexSet out = g.empty_set();
  for (Vertex v : s) {
    if (v >= g.order())
      throw VertexOutOfRange("vertex " + std::to_string(v) + " is not in a graph of order " +
                             std::to_string(g.order()));
    out.insert(v);
  }
  return out;
}

} // namespace

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const VertexSet members = rehome(g, s);
  InducedSubgraph out;
  out.to_host = members.to_vector();
  const int k = static_cast<int>(out.to_host.size());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(out.to_host[static_cast<std::size_t>(i)])] = i;
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    const Vertex host = out.to_host[static_cast<std::size_t>(i)];
    for (Vertex w : g.neighbors(host) & members) {
      const int j = local[static_cast<std::size_t>(w)];
      if (i < j) b.add_edge(i, j);
    }
  }
  out.graph = b.build();
  return out;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  const VertexSet members = rehome(g, s);
  for (Vertex v : members)
    if (g.neighbors(v).intersects(members)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const VertexSet members = rehome(g, s);
  const std::size_t k = members.count();
  for (Vertex v : members)
    if (g.neighbors(v).intersection_count(members) != k - 1) return false;
  return true;
}

bool is_complete_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const VertexSet a = rehome(g, s);
  const VertexSet b = rehome(g, t);
  if (a.intersects(b)) throw OverlappingSets("is_complete_between requires disjoint sets");
  for (Vertex v : a)
    if (!b.is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const VertexSet a = rehome(g, s);
  const VertexSet b = rehome(g, t);
  for (Vertex v : a)
    if (g.neighbors(v).intersects(b)) return false;
  return true;
}

VertexSet neighbors_in(const Graph& g, const VertexSet& t, const VertexSet& s) {
  const VertexSet from = rehome(g, t);
  VertexSet out = g.empty_set();
  for (Vertex v : from) out |= g.neighbors(v);
  out &= rehome(g, s);
  return out;
}

} // namespace chibound
