#include "chibound/clique.hpp"

#include <vector>

#include "chibound/errors.hpp"

namespace chibound {
namespace {

VertexSet on_graph(const Graph& g, const VertexSet& s) {
  if (s.universe() == static_cast<std::size_t>(g.order())) return s;
  VertexSet out = g.empty_set();
  for (Vertex v : s) {
    if (v >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    out.insert(v);
  }
  return out;
}

// Branch and bound with greedy-coloring bounds (MCQ-style): vertices are
// expanded from the highest color class down, and a branch is cut once the
// current size plus its color number cannot beat the incumbent.
class CliqueNumberSearch {
public:
  explicit CliqueNumberSearch(const Graph& g) : g_(g) {}

  int run(const VertexSet& candidates) {
    best_ = 0;
    expand(0, candidates);
    return best_;
  }

private:
  void expand(int size, VertexSet p) {
    std::vector<Vertex> order;
    std::vector<int> color;
    color_sort(p, order, color);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + color[i] <= best_) return;
      const Vertex v = order[i];
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(size + 1, std::move(next));
      }
      p.erase(v);
    }
  }

  void color_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& color) const {
    VertexSet uncolored = p;
    int k = 0;
    while (!uncolored.empty()) {
      ++k;
      VertexSet open = uncolored;
      while (!open.empty()) {
        const Vertex v = open.first();
        open.erase(v);
        open -= g_.neighbors(v);
        uncolored.erase(v);
        order.push_back(v);
        color.push_back(k);
      }
    }
  }

  const Graph& g_;
  int best_ = 0;
};

// Depth-first search over increasing vertex sequences; the first clique of the
// target size reached is the lexicographically least one.
class LeastCliqueSearch {
public:
  LeastCliqueSearch(const Graph& g, int target) : g_(g), target_(target) {}

  bool run(const VertexSet& candidates) {
    chosen_.clear();
    return extend(candidates);
  }
  const std::vector<Vertex>& clique() const { return chosen_; }

private:
  bool extend(const VertexSet& p) {
    if (static_cast<int>(chosen_.size()) == target_) return true;
    const int need = target_ - static_cast<int>(chosen_.size());
    if (static_cast<int>(p.count()) < need) return false;
    if (greedy_color_bound(g_, p) < need) return false;
    for (Vertex v : p) {
      VertexSet next = p & g_.neighbors(v);
      // only larger ids keep the sequence increasing
      for (Vertex u : next) {
        if (u > v) break;
        next.erase(u);
      }
      chosen_.push_back(v);
      if (extend(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int target_;
  std::vector<Vertex> chosen_;
};

} // namespace

int greedy_color_bound(const Graph& g, const VertexSet& p) {
  VertexSet uncolored = p;
  int k = 0;
  while (!uncolored.empty()) {
    ++k;
    VertexSet open = uncolored;
    while (!open.empty()) {
      const Vertex v = open.first();
      open.erase(v);
      open -= g.neighbors(v);
      uncolored.erase(v);
    }
  }
  return k;
}

int clique_number_within(const Graph& g, const VertexSet& within) {
  const VertexSet p = on_graph(g, within);
  if (p.empty()) return 0;
  CliqueNumberSearch search(g);
  return search.run(p);
}

int clique_number(const Graph& g) { return clique_number_within(g, g.vertices()); }

VertexSet max_clique_within(const Graph& g, const VertexSet& within) {
  const VertexSet p = on_graph(g, within);
  const int omega = clique_number_within(g, p);
  VertexSet out = g.empty_set();
  if (omega == 0) return out;
  LeastCliqueSearch search(g, omega);
  search.run(p);
  for (Vertex v : search.clique()) out.insert(v);
  return out;
}

VertexSet max_clique(const Graph& g) {
  if (g.order() == 0) throw EmptyGraph("maximum clique of the empty graph is undefined");
  return max_clique_within(g, g.vertices());
}

} // namespace chibound
