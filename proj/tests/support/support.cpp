#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>

#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound::testing {

std::string data_path(const std::string& name) { return std::string(CHIBOUND_TEST_DATA) + "/" + name; }

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

namespace {

bool matches_some_bijection(const Graph& g, const Graph& pattern, const std::vector<Vertex>& subset) {
  std::vector<int> perm(subset.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < pattern.order() && ok; ++i)
      for (int j = i + 1; j < pattern.order() && ok; ++j)
        ok = pattern.adjacent(i, j) == g.adjacent(subset[perm[i]], subset[perm[j]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace

std::optional<std::vector<Vertex>> naive_find_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order(), k = pattern.order();
  if (k > n) return std::nullopt;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (matches_some_bijection(g, pattern, idx)) return idx;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool naive_is_member(const Graph& g) {
  return !naive_find_induced(g, pattern(PatternName::P3_2K1).graph) &&
         !naive_find_induced(g, pattern(PatternName::CO_P3_2K1).graph);
}

int naive_chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int k = 1;; ++k) {
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int c = 1; c <= k; ++c) {
        bool free = true;
        for (int u = 0; u < v && free; ++u) free = !(g.adjacent(u, v) && col[u] == c);
        if (!free) continue;
        col[v] = c;
        if (go(v + 1)) return true;
      }
      col[v] = 0;
      return false;
    };
    if (go(0)) return k;
  }
}

int naive_clique_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

int naive_independence_number(const Graph& g) { return naive_clique_number(complement(g)); }

Graph up3_graph(int w, int p) {
  const int n = 3 * w + 3;
  GraphBuilder b(n);
  for (int i = 0; i < w; ++i)
    for (int j = i + 1; j < w; ++j) b.add_edge(i, j);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < w; ++i)
      if (i != p - 1) b.add_edge(w + e, i);
  const int off = w + 2;
  auto y = [&](int r) { return off + r - 1; };
  const int z1 = off + w - 1, z2 = off + w;
  auto h = [&](int i) { return off + w + i; };
  for (int r = 1; r < w; ++r) {
    for (int s = r + 1; s < w; ++s) b.add_edge(y(r), y(s));
    b.add_edge(z1, y(r));
    b.add_edge(z2, y(r));
    b.add_edge(z1, h(r));
  }
  for (int i = 1; i <= w; ++i)
    for (int j = i + 1; j <= w; ++j) b.add_edge(h(i), h(j));
  b.add_edge(z2, h(w));
  // U_p = {v_p, w, w+1} as y1, y2, y3
  const int y1 = p - 1, y2 = w, y3 = w + 1;
  for (int r = 1; r < w; ++r) {
    b.add_edge(y1, y(r));
    b.add_edge(y2, h(r));
  }
  b.add_edge(y1, h(w));
  b.add_edge(y2, z2);
  b.add_edge(y3, h(w));
  b.add_edge(y3, z1);
  b.add_edge(y3, z2);
  return b.build();
}

} // namespace chibound::testing
