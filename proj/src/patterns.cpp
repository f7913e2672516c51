#include "chibound/patterns.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "chibound/errors.hpp"

namespace chibound {
namespace {

Pattern make(PatternName name, int n, std::initializer_list<Edge> edges) {
  return {name, Graph::from_edge_list(n, edges)};
}

const std::vector<Pattern>& catalog() {
  static const std::vector<Pattern> table = [] {
    std::vector<Pattern> t;
    t.push_back(make(PatternName::P3_2K1, 5, {{0, 1}, {1, 2}}));
    t.push_back({PatternName::CO_P3_2K1, complement(t.back().graph)});
    t.push_back(make(PatternName::P3_K1, 4, {{0, 1}, {1, 2}}));
    t.push_back(make(PatternName::P3, 3, {{0, 1}, {1, 2}}));
    t.push_back(make(PatternName::C5, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    t.push_back(make(PatternName::CHAIR, 5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}));
    t.push_back(make(PatternName::H, 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}}));
    t.push_back(make(PatternName::TRIANGLE, 3, {{0, 1}, {1, 2}, {0, 2}}));
    return t;
  }();
  return table;
}

struct Slug {
  PatternName name;
  std::string_view slug;
};

constexpr std::array<Slug, 8> slugs{{
    {PatternName::P3_2K1, "p3-2k1"},
    {PatternName::CO_P3_2K1, "co-p3-2k1"},
    {PatternName::P3_K1, "p3-k1"},
    {PatternName::P3, "p3"},
    {PatternName::C5, "c5"},
    {PatternName::CHAIR, "chair"},
    {PatternName::H, "h"},
    {PatternName::TRIANGLE, "triangle"},
}};

// Enumerates vertex subsets in lexicographic order, pruning partial subsets
// whose induced degrees or edge counts cannot extend to the pattern.
class InducedSearch {
public:
  InducedSearch(const Graph& host, const Graph& pattern) : g_(host), p_(pattern), k_(pattern.order()) {
    if (k_ > max_pattern_order)
      throw PatternTooLarge("pattern has " + std::to_string(k_) + " vertices; the limit is " +
                            std::to_string(max_pattern_order));
    pattern_edges_ = static_cast<int>(p_.size());
    for (Vertex v = 0; v < k_; ++v) {
      const int d = p_.degree(v);
      pattern_degrees_.push_back(d);
      max_degree_ = std::max(max_degree_, d);
      min_degree_ = std::min(min_degree_, d);
    }
    sorted_pattern_degrees_ = pattern_degrees_;
    std::sort(sorted_pattern_degrees_.begin(), sorted_pattern_degrees_.end());
  }

  std::optional<std::vector<Vertex>> run(std::optional<Vertex> forced) {
    chosen_.clear();
    degrees_.clear();
    edges_ = 0;
    forced_ = forced;
    if (k_ == 0) return std::vector<Vertex>{};
    if (k_ > g_.order()) return std::nullopt;
    if (forced_) {
      if (!push(*forced_)) return std::nullopt;
    }
    return extend(0);
  }

private:
  bool push(Vertex w) {
    int added = 0;
    degrees_.push_back(0);
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      if (g_.adjacent(chosen_[i], w)) {
        ++degrees_[i];
        ++degrees_.back();
        ++added;
      }
    }
    chosen_.push_back(w);
    edges_ += added;
    return feasible();
  }

  void pop() {
    const Vertex w = chosen_.back();
    chosen_.pop_back();
    degrees_.pop_back();
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      if (g_.adjacent(chosen_[i], w)) {
        --degrees_[i];
        --edges_;
      }
    }
  }

  bool feasible() const {
    const int m = static_cast<int>(chosen_.size());
    if (edges_ > pattern_edges_) return false;
    if (m * (m - 1) / 2 - edges_ > k_ * (k_ - 1) / 2 - pattern_edges_) return false;
    for (int d : degrees_) {
      if (d > max_degree_) return false;
      if (m - 1 - d > k_ - 1 - min_degree_) return false;
    }
    return true;
  }

  std::optional<std::vector<Vertex>> extend(Vertex from) {
    if (static_cast<int>(chosen_.size()) == k_) return match();
    const int need = k_ - static_cast<int>(chosen_.size());
    for (Vertex w = from; w < g_.order(); ++w) {
      if (forced_ && w == *forced_) continue;
      const int available = g_.order() - w - (forced_ && *forced_ > w ? 1 : 0);
      if (available < need) break;
      if (push(w)) {
        if (auto hit = extend(w + 1)) return hit;
      }
      pop();
    }
    return std::nullopt;
  }

  // Maps pattern vertices onto chosen_ by backtracking; returns the host
  // vertices in pattern order.
  std::optional<std::vector<Vertex>> match() {
    std::vector<int> sorted = degrees_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != sorted_pattern_degrees_) return std::nullopt;
    std::vector<int> assign(static_cast<std::size_t>(k_), -1); // pattern -> index in chosen_
    std::vector<bool> used(static_cast<std::size_t>(k_), false);
    if (!assign_from(0, assign, used)) return std::nullopt;
    std::vector<Vertex> out(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) out[static_cast<std::size_t>(i)] = chosen_[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
    return out;
  }

  bool assign_from(int pv, std::vector<int>& assign, std::vector<bool>& used) const {
    if (pv == k_) return true;
    for (int c = 0; c < k_; ++c) {
      if (used[static_cast<std::size_t>(c)] || degrees_[static_cast<std::size_t>(c)] != pattern_degrees_[static_cast<std::size_t>(pv)]) continue;
      bool ok = true;
      for (int q = 0; q < pv && ok; ++q) {
        const Vertex hq = chosen_[static_cast<std::size_t>(assign[static_cast<std::size_t>(q)])];
        ok = p_.adjacent(pv, q) == g_.adjacent(chosen_[static_cast<std::size_t>(c)], hq);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(c)] = true;
      assign[static_cast<std::size_t>(pv)] = c;
      if (assign_from(pv + 1, assign, used)) return true;
      used[static_cast<std::size_t>(c)] = false;
    }
    assign[static_cast<std::size_t>(pv)] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  int k_;
  int pattern_edges_ = 0;
  int max_degree_ = 0;
  int min_degree_ = max_pattern_order;
  std::vector<int> pattern_degrees_;
  std::vector<int> sorted_pattern_degrees_;
  std::optional<Vertex> forced_;
  std::vector<Vertex> chosen_;
  std::vector<int> degrees_;
  int edges_ = 0;
};

} // namespace

const Pattern& pattern(PatternName name) {
  for (const auto& p : catalog())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown pattern");
}

const std::vector<PatternName>& all_patterns() {
  static const std::vector<PatternName> names = [] {
    std::vector<PatternName> out;
    for (const auto& s : slugs) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::string_view pattern_slug(PatternName name) {
  for (const auto& s : slugs)
    if (s.name == name) return s.slug;
  return "?";
}

PatternName parse_pattern(std::string_view slug) {
  for (const auto& s : slugs)
    if (s.slug == slug) return s.name;
  throw std::invalid_argument("unknown pattern `" + std::string(slug) + "`");
}

std::optional<std::vector<Vertex>> find_induced_graph(const Graph& g, const Graph& p) {
  InducedSearch search(g, p);
  return search.run(std::nullopt);
}

std::optional<std::vector<Vertex>> find_induced_graph_containing(const Graph& g, const Graph& p, Vertex v) {
  if (v < 0 || v >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
  InducedSearch search(g, p);
  auto hit = search.run(v);
  return hit;
}

std::optional<PatternWitness> find_induced(const Graph& g, PatternName name) {
  if (auto hit = find_induced_graph(g, pattern(name).graph)) return PatternWitness{name, std::move(*hit)};
  return std::nullopt;
}

bool witness_matches(const Graph& g, const Graph& p, const std::vector<Vertex>& vertices) {
  if (static_cast<int>(vertices.size()) != p.order()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) return false;
      if (g.adjacent(vertices[i], vertices[j]) != p.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        return false;
    }
  }
  return true;
}

MembershipReport is_class_member(const Graph& g) {
  MembershipReport report;
  for (PatternName name : {PatternName::P3_2K1, PatternName::CO_P3_2K1}) {
    if (auto w = find_induced(g, name)) {
      report.in_class = false;
      report.violation = std::move(w);
      return report;
    }
  }
  return report;
}

std::optional<PatternWitness> find_violation_containing(const Graph& g, Vertex v) {
  for (PatternName name : {PatternName::P3_2K1, PatternName::CO_P3_2K1}) {
    if (auto hit = find_induced_graph_containing(g, pattern(name).graph, v))
      return PatternWitness{name, std::move(*hit)};
  }
  return std::nullopt;
}

bool is_union_of_cliques(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    for (Vertex u : g.neighbors(v)) {
      VertexSet other = g.neighbors(u);
      other.insert(u);
      if (!(other == closed)) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_induced_c5(const Graph& g) { return find_induced(g, PatternName::C5); }

} // namespace chibound
