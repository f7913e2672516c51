#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

// Named families.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();

/// Tight example for ω >= 4: vertices h_1..h_ω = 0..ω-1, z_1 = ω, z_2 = ω+1,
/// y_r = ω+1+r. The h's and the y's form cliques, both z's see every y, z_1
/// sees h_1..h_{ω-1} and z_2 sees h_ω only. Throws OmegaTooSmall for ω < 4.
Graph g_star(int omega);

/// i ~ j iff the cyclic distance between i and j is in `lengths`.
/// Throws InvalidLength unless 1 <= ℓ <= n/2 for every length.
Graph circulant(int n, const std::vector<int>& lengths);

/// Parts of the given sizes, in order; edges join distinct parts.
/// Throws EmptyPartList for an empty list and std::invalid_argument for a size < 1.
Graph complete_multipartite(const std::vector<int>& sizes);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, const std::vector<Vertex>& perm);

/// Seedable generator. The engine is std::mt19937_64 (its output sequence is
/// fixed by the C++ standard). Reals are (x >> 11) * 2^-53 and bounded integers
/// use rejection on x mod b, so draws reproduce on every conforming platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(double p) { return unit() < p; }
  std::vector<Vertex> permutation(int n);

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent child seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Rejection sampler: draws G(n, p) graphs (edges in lexicographic pair order)
/// until one is a class member. nullopt after max_tries draws.
std::optional<Graph> random_class_graph(int n, double p, std::uint64_t seed, int max_tries);

enum class CoreKind { none, multipartite, gstar };

/// Structured corpus enrichment: start from a core class member and append
/// vertices one at a time with random neighborhoods (fresh or a perturbed copy
/// of an existing vertex), keeping an addition only when the graph stays in the
/// class and within max_omega. Not a uniform sampler.
struct StructuredOptions {
  int n = 10;
  std::uint64_t seed = 0;
  CoreKind core = CoreKind::multipartite;
  int core_omega = 4;
  int max_omega = 0; // 0: unbounded
  int tries_per_vertex = 60;
  bool shuffle = true;
};

std::optional<Graph> random_structured_class_graph(const StructuredOptions& options);

struct CorpusOptions {
  int count = 100;
  int n_min = 5;
  int n_max = 16;
  std::vector<int> omegas{1, 2, 4, 5, 6};
  std::uint64_t seed = 1;
};

/// `count` class members cycling through the requested clique numbers.
std::vector<Graph> sample_class_corpus(const CorpusOptions& options);

} // namespace chibound
