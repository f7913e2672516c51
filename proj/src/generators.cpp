#include "chibound/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "chibound/clique.hpp"
#include "chibound/errors.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  if (n >= 3) b.add_edge(n - 1, 0);
  return b.build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);         // outer cycle
    b.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    b.add_edge(i, 5 + i);               // spokes
  }
  return b.build();
}

Graph g_star(int omega) {
  if (omega < 4) throw OmegaTooSmall("g_star needs ω >= 4, got " + std::to_string(omega));
  const int n = 2 * omega + 1;
  auto h = [](int i) { return i - 1; }; // h_1..h_ω
  const Vertex z1 = omega;
  const Vertex z2 = omega + 1;
  auto y = [omega](int r) { return omega + 1 + r; }; // y_1..y_{ω-1}
  GraphBuilder b(n);
  for (int i = 1; i <= omega; ++i)
    for (int j = i + 1; j <= omega; ++j) b.add_edge(h(i), h(j));
  for (int r = 1; r < omega; ++r) {
    for (int s = r + 1; s < omega; ++s) b.add_edge(y(r), y(s));
    b.add_edge(z1, y(r));
    b.add_edge(z2, y(r));
    b.add_edge(z1, h(r));
  }
  b.add_edge(z2, h(omega));
  return b.build();
}

Graph circulant(int n, const std::vector<int>& lengths) {
  if (n < 1) throw InvalidLength("circulant needs n >= 1");
  std::vector<bool> allowed(static_cast<std::size_t>(n / 2 + 1), false);
  for (int len : lengths) {
    if (len < 1 || 2 * len > n)
      throw InvalidLength("chord length " + std::to_string(len) + " outside [1, " + std::to_string(n / 2) + "]");
    allowed[static_cast<std::size_t>(len)] = true;
  }
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (allowed[static_cast<std::size_t>(std::min(j - i, n - (j - i)))]) b.add_edge(i, j);
  return b.build();
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw EmptyPartList("complete_multipartite needs at least one part");
  std::vector<int> part_of;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 1) throw std::invalid_argument("part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[k]), static_cast<int>(k));
  }
  const int n = static_cast<int>(part_of.size());
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) b.add_edge(u, v);
  return b.build();
}

Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return b.build();
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::vector<Vertex> Rng::permutation(int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[below(static_cast<std::uint64_t>(i) + 1)]);
  return perm;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<Graph> random_class_graph(int n, double p, std::uint64_t seed, int max_tries) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(p)) b.add_edge(u, v);
    Graph g = b.build();
    if (is_class_member(g).in_class) return g;
  }
  return std::nullopt;
}

namespace {

Graph core_graph(const StructuredOptions& o, Rng& rng) {
  switch (o.core) {
  case CoreKind::none:
    return empty_graph(1);
  case CoreKind::gstar:
    return g_star(o.core_omega);
  case CoreKind::multipartite: {
    std::vector<int> sizes;
    int budget = std::max(o.n - o.core_omega, 0);
    for (int k = 0; k < o.core_omega; ++k) {
      const int extra = budget > 0 ? rng.between(0, std::min(budget, 2)) : 0;
      budget -= extra;
      sizes.push_back(1 + extra);
    }
    return complete_multipartite(sizes);
  }
  }
  return empty_graph(1);
}

bool within_omega(const Graph& g, Vertex v, int max_omega) {
  if (max_omega <= 0) return true;
  return clique_number_within(g, g.neighbors(v)) + 1 <= max_omega;
}

} // namespace

std::optional<Graph> random_structured_class_graph(const StructuredOptions& o) {
  Rng rng(o.seed);
  Graph g = core_graph(o, rng);
  if (g.order() > o.n) return std::nullopt;
  while (g.order() < o.n) {
    bool grown = false;
    for (int attempt = 0; attempt < o.tries_per_vertex && !grown; ++attempt) {
      GraphBuilder b(g);
      const Vertex fresh = b.add_vertex();
      if (rng.chance(0.5)) {
        const double q = 0.15 + 0.7 * rng.unit();
        for (Vertex w = 0; w < fresh; ++w)
          if (rng.chance(q)) b.add_edge(fresh, w);
      } else {
        // perturbed copy of an existing neighborhood
        const auto model = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(fresh)));
        for (Vertex w = 0; w < fresh; ++w) {
          bool edge = w == model ? rng.chance(0.5) : g.adjacent(model, w);
          if (rng.chance(0.1)) edge = !edge;
          if (edge) b.add_edge(fresh, w);
        }
      }
      Graph candidate = b.build();
      if (!within_omega(candidate, fresh, o.max_omega)) continue;
      if (find_violation_containing(candidate, fresh)) continue;
      g = std::move(candidate);
      grown = true;
    }
    if (!grown) return std::nullopt;
  }
  if (o.max_omega > 0 && clique_number(g) > o.max_omega) return std::nullopt;
  if (o.shuffle) g = permute(g, rng.permutation(g.order()));
  return g;
}

std::vector<Graph> sample_class_corpus(const CorpusOptions& o) {
  std::vector<Graph> out;
  if (o.omegas.empty() || o.count <= 0) return out;
  std::uint64_t stream = o.seed;
  std::size_t turn = 0;
  // a target that keeps failing yields its turn after 200 misses
  const int max_draws = o.count * 400;
  int misses = 0;
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < o.count; ++draw) {
    const int target = o.omegas[turn % o.omegas.size()];
    stream = mix_seed(stream);
    Rng rng(stream);
    const int lo = std::max(o.n_min, std::max(target, 1));
    if (lo > o.n_max) {
      ++turn;
      continue;
    }
    const int n = rng.between(lo, o.n_max);
    std::optional<Graph> g;
    if (target <= 1) {
      g = empty_graph(n);
    } else if (target <= 3) {
      if (rng.chance(0.5)) {
        g = random_class_graph(n, 0.2 + 0.5 * rng.unit(), rng.next(), 50);
      } else {
        StructuredOptions so{n, rng.next(), CoreKind::none, 1, target, 60, true};
        g = random_structured_class_graph(so);
      }
    } else {
      const bool star = 2 * target + 1 <= n && rng.chance(0.35);
      StructuredOptions so{n, rng.next(), star ? CoreKind::gstar : CoreKind::multipartite, target, target, 60, true};
      g = random_structured_class_graph(so);
    }
    if (!g || clique_number(*g) != target) {
      if (++misses >= 200) {
        misses = 0;
        ++turn;
      }
      continue;
    }
    misses = 0;
    out.push_back(std::move(*g));
    ++turn;
  }
  return out;
}

} // namespace chibound
