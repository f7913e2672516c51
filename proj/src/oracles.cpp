#include "chibound/oracles.hpp"

#include <algorithm>

#include "chibound/clique.hpp"
#include "chibound/errors.hpp"

namespace chibound {
namespace {

// Exact coloring by DSATUR branch and bound. The clique vertices are fixed to
// colors 1..|clique| up front; new colors are opened one at a time so color
// permutations are never revisited.
class DsaturSearch {
public:
  DsaturSearch(const Graph& g, const std::vector<Vertex>& clique, int limit, int lower_bound)
      : g_(g), n_(g.order()), limit_(limit), lower_bound_(lower_bound), color_(static_cast<std::size_t>(n_), 0),
        counts_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(limit + 2), 0)),
        saturation_(static_cast<std::size_t>(n_), 0), free_degree_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) free_degree_[static_cast<std::size_t>(v)] = g.degree(v);
    seed_ = clique;
  }

  /// Searches for colorings with at most limit colors, tightening as better
  /// ones are found. Returns the best coloring (empty if none within limit).
  std::vector<int> run(bool first_only) {
    first_only_ = first_only;
    best_colors_ = limit_ + 1;
    int used = 0;
    for (Vertex v : seed_) {
      if (used + 1 > limit_) return {};
      assign(v, ++used);
    }
    colored_ = static_cast<int>(seed_.size());
    search(used);
    return best_;
  }

private:
  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (Vertex u : g_.neighbors(v)) {
      auto& cnt = counts_[static_cast<std::size_t>(u)];
      if (cnt[static_cast<std::size_t>(c)]++ == 0) ++saturation_[static_cast<std::size_t>(u)];
      --free_degree_[static_cast<std::size_t>(u)];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = 0;
    for (Vertex u : g_.neighbors(v)) {
      auto& cnt = counts_[static_cast<std::size_t>(u)];
      if (--cnt[static_cast<std::size_t>(c)] == 0) --saturation_[static_cast<std::size_t>(u)];
      ++free_degree_[static_cast<std::size_t>(u)];
    }
  }

  Vertex select() const {
    Vertex pick = -1;
    for (Vertex v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (color_[i] != 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto p = static_cast<std::size_t>(pick);
      if (saturation_[i] > saturation_[p] ||
          (saturation_[i] == saturation_[p] && free_degree_[i] > free_degree_[p]))
        pick = v;
    }
    return pick;
  }

  void search(int used) {
    if (done_) return;
    if (colored_ == n_) {
      best_colors_ = used;
      best_ = color_;
      if (first_only_ || best_colors_ <= lower_bound_) done_ = true;
      return;
    }
    const Vertex v = select();
    const auto& cnt = counts_[static_cast<std::size_t>(v)];
    // the incumbent can tighten while we iterate, so the range is re-read
    for (int c = 1; !done_ && c <= std::min(used + 1, best_colors_ - 1); ++c) {
      if (cnt[static_cast<std::size_t>(c)] != 0) continue;
      assign(v, c);
      ++colored_;
      search(std::max(used, c));
      --colored_;
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  int limit_;
  int lower_bound_;
  std::vector<int> color_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> saturation_;
  std::vector<int> free_degree_;
  std::vector<Vertex> seed_;
  std::vector<int> best_;
  int best_colors_ = 0;
  int colored_ = 0;
  bool first_only_ = false;
  bool done_ = false;
};

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw SizeCapExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) +
                          " vertices; the cap is " + std::to_string(cap));
}

} // namespace

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int c : colors)
    if (c < 1) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

OracleResult clique_oracle(const Graph& g) {
  if (g.order() == 0) return {};
  const auto clique = max_clique(g).to_vector();
  return {static_cast<int>(clique.size()), std::vector<int>(clique.begin(), clique.end())};
}

OracleResult independence_number(const Graph& g, int cap) {
  require_cap(g, cap, "independence_number");
  return clique_oracle(complement(g));
}

OracleResult exact_chromatic_number(const Graph& g, const ChromaticOptions& options) {
  require_cap(g, options.cap, "exact_chromatic_number");
  const int n = g.order();
  if (n == 0) return {};
  const auto clique = max_clique(g).to_vector();
  int lower = static_cast<int>(clique.size());
  if (options.independence_bound) {
    const int alpha = independence_number(g, options.cap).value;
    lower = std::max(lower, (n + alpha - 1) / alpha);
  }
  DsaturSearch search(g, clique, n, lower);
  auto colors = search.run(false);
  const int value = *std::max_element(colors.begin(), colors.end());
  return {value, std::move(colors)};
}

std::optional<std::vector<int>> color_with_budget(const Graph& g, int budget) {
  const int n = g.order();
  if (n == 0) return std::vector<int>{};
  if (budget < 1) return std::nullopt;
  const auto clique = max_clique(g).to_vector();
  if (static_cast<int>(clique.size()) > budget) return std::nullopt;
  DsaturSearch search(g, clique, budget, 0);
  auto colors = search.run(true);
  if (colors.empty()) return std::nullopt;
  return colors;
}

} // namespace chibound
