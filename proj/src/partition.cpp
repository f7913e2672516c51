#include "chibound/partition.hpp"

#include <algorithm>

#include "chibound/clique.hpp"
#include "chibound/errors.hpp"

namespace chibound {

std::size_t WagonPartition::pair_index(int i, int j, int omega) {
  // rows (1,*), (2,*), ... each holding omega - i pairs
  std::size_t index = 0;
  for (int a = 1; a < i; ++a) index += static_cast<std::size_t>(omega - a);
  return index + static_cast<std::size_t>(j - i - 1);
}

std::vector<std::pair<int, int>> WagonPartition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= omega(); ++i)
    for (int j = i + 1; j <= omega(); ++j) out.emplace_back(i, j);
  return out;
}

VertexSet WagonPartition::part(int k) const {
  VertexSet u = i_class(k);
  u.insert(v(k));
  return u;
}

VertexSet WagonPartition::clique_set() const {
  VertexSet out(universe);
  for (Vertex x : clique) out.insert(x);
  return out;
}

VertexSet WagonPartition::independents_union() const {
  VertexSet out(universe);
  for (const auto& s : independents) out |= s;
  return out;
}

VertexSet WagonPartition::dominated() const { return clique_set() | independents_union(); }

VertexSet WagonPartition::pair_union() const {
  VertexSet out(universe);
  for (const auto& s : pair_classes) out |= s;
  return out;
}

int WagonPartition::part_of(Vertex x) const {
  for (int k = 1; k <= omega(); ++k)
    if (v(k) == x || i_class(k).contains(x)) return k;
  return 0;
}

namespace {

WagonPartition classify(const Graph& g, const std::vector<Vertex>& clique, const VertexSet& within) {
  const auto n = static_cast<std::size_t>(g.order());
  const int omega = static_cast<int>(clique.size());
  WagonPartition p;
  p.universe = n;
  p.clique = clique;
  p.independents.assign(static_cast<std::size_t>(omega), VertexSet(n));
  p.pair_classes.assign(static_cast<std::size_t>(omega * (omega - 1) / 2), VertexSet(n));
  const VertexSet a = p.clique_set();
  for (Vertex x : within) {
    if (a.contains(x)) continue;
    int first_missing = 0;
    int second_missing = 0;
    for (int k = 1; k <= omega && second_missing == 0; ++k) {
      if (g.adjacent(x, clique[static_cast<std::size_t>(k - 1)])) continue;
      if (first_missing == 0)
        first_missing = k;
      else
        second_missing = k;
    }
    if (first_missing == 0)
      throw NotMaximum("vertex " + std::to_string(x) + " is adjacent to the whole clique");
    if (second_missing == 0)
      p.i_class(first_missing).insert(x);
    else
      p.c_class(first_missing, second_missing).insert(x);
  }
  return p;
}

void require_clique(const Graph& g, const std::vector<Vertex>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || clique[i] >= g.order())
      throw NotAClique("clique vertex " + std::to_string(clique[i]) + " is out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (clique[i] == clique[j]) throw NotAClique("clique repeats vertex " + std::to_string(clique[i]));
      if (!g.adjacent(clique[i], clique[j]))
        throw NotAClique("vertices " + std::to_string(clique[j]) + " and " + std::to_string(clique[i]) +
                         " are not adjacent");
    }
  }
}

WagonPartition lift(const WagonPartition& local, const InducedSubgraph& sub, std::size_t host_universe) {
  WagonPartition p;
  p.universe = host_universe;
  for (Vertex x : local.clique) p.clique.push_back(sub.to_host[static_cast<std::size_t>(x)]);
  for (const auto& s : local.independents) p.independents.push_back(sub.lift(s, host_universe));
  for (const auto& s : local.pair_classes) p.pair_classes.push_back(sub.lift(s, host_universe));
  return p;
}

} // namespace

WagonPartition build_partition_unchecked(const Graph& g, const std::vector<Vertex>& clique) {
  require_clique(g, clique);
  return classify(g, clique, g.vertices());
}

WagonPartition build_partition(const Graph& g, const std::vector<Vertex>& clique) {
  require_clique(g, clique);
  const int omega = clique_number(g);
  if (static_cast<int>(clique.size()) != omega)
    throw NotMaximum("clique of size " + std::to_string(clique.size()) + " but ω(G) = " + std::to_string(omega));
  return classify(g, clique, g.vertices());
}

TwoLevelPartition build_two_level(const Graph& g, const std::optional<std::vector<Vertex>>& clique) {
  if (g.order() == 0) throw EmptyGraph("cannot partition the empty graph");
  TwoLevelPartition t;
  t.first = clique ? build_partition(g, *clique) : build_partition_unchecked(g, max_clique(g).to_vector());
  t.v1 = t.first.dominated();
  t.v2 = t.first.pair_union();

  const auto n = static_cast<std::size_t>(g.order());
  if (t.v2.empty()) {
    t.second.universe = n;
  } else {
    const InducedSubgraph sub = induced_subgraph(g, t.v2);
    const WagonPartition local = build_partition_unchecked(sub.graph, max_clique(sub.graph).to_vector());
    t.second = lift(local, sub, n);
  }
  t.x1 = t.v1;
  t.x2 = t.second.dominated();
  t.x3 = t.second.pair_union();
  return t;
}

namespace {

class AxiomChecker {
public:
  AxiomChecker(const Graph& g, std::vector<PartitionViolation>& out) : g_(g), out_(out) {}

  void level(const std::string& tag, const WagonPartition& p, const VertexSet& universe) {
    const auto n = static_cast<std::size_t>(g_.order());
    if (p.universe != n) {
      add(tag + ":universe", {}, "partition universe differs from graph order");
      return;
    }
    const std::size_t k = p.clique.size();
    if (p.independents.size() != k || p.pair_classes.size() != (k == 0 ? 0 : k * (k - 1) / 2)) {
      add(tag + ":shape", {}, "class counts do not match |A|");
      return;
    }
    VertexSet a(n);
    for (std::size_t i = 0; i < p.clique.size(); ++i) {
      const Vertex x = p.clique[i];
      if (x < 0 || x >= g_.order() || !universe.contains(x)) {
        add(tag + ":clique", {x}, "clique vertex outside the level's vertex set");
        return;
      }
      if (a.contains(x)) add(tag + ":clique", {x}, "clique vertex repeated");
      for (std::size_t j = 0; j < i; ++j)
        if (!g_.adjacent(x, p.clique[j])) add(tag + ":clique", {p.clique[j], x}, "clique vertices not adjacent");
      a.insert(x);
    }
    const int omega = clique_number_within(g_, universe);
    if (p.omega() != omega)
      add(tag + ":maximum", p.clique, "|A| = " + std::to_string(p.omega()) + " but ω = " + std::to_string(omega));

    // (i)-(iii): independence and pairwise disjointness
    VertexSet seen = a;
    for (int k = 1; k <= p.omega(); ++k) {
      const VertexSet& ik = p.i_class(k);
      for (Vertex x : ik) {
        if (seen.contains(x)) add(tag + ":disjoint", {x}, "vertex in more than one class");
        if (g_.neighbors(x).intersects(ik))
          add(tag + ":independent", {x, (g_.neighbors(x) & ik).first()}, "I_" + std::to_string(k) + " has an edge");
      }
      seen |= ik;
    }
    for (auto [i, j] : p.pairs()) {
      for (Vertex x : p.c_class(i, j)) {
        if (seen.contains(x)) add(tag + ":disjoint", {x}, "vertex in more than one class");
      }
      seen |= p.c_class(i, j);
    }

    // membership rules
    for (int k = 1; k <= p.omega(); ++k) {
      for (Vertex x : p.i_class(k)) {
        bool ok = true;
        for (int m = 1; m <= p.omega(); ++m) ok = ok && (g_.adjacent(x, p.v(m)) == (m != k));
        if (!ok)
          add(tag + ":i-membership", {x}, "vertex in I_" + std::to_string(k) + " does not miss exactly v_" + std::to_string(k));
      }
    }
    for (auto [i, j] : p.pairs()) {
      for (Vertex x : p.c_class(i, j)) {
        if (g_.adjacent(x, p.v(i)) || g_.adjacent(x, p.v(j)))
          add(tag + ":c-membership", {x},
              "vertex in C_" + std::to_string(i) + "," + std::to_string(j) + " is adjacent to v_i or v_j");
        for (int m = 1; m < j; ++m) {
          if (m != i && !g_.adjacent(x, p.v(m))) {
            add(tag + ":obs-iv", {x, p.v(m)},
                "vertex in C_" + std::to_string(i) + "," + std::to_string(j) + " misses v_" + std::to_string(m));
            break;
          }
        }
      }
    }

    // (v): coverage
    if (!(seen == universe)) {
      const VertexSet missing = universe - seen;
      const VertexSet extra = seen - universe;
      if (!missing.empty()) add(tag + ":coverage", missing.to_vector(), "vertices in no class");
      if (!extra.empty()) add(tag + ":coverage", extra.to_vector(), "classified vertices outside the level");
    }
  }

  void add(std::string rule, std::vector<Vertex> vertices, std::string detail) {
    out_.push_back({std::move(rule), std::move(vertices), std::move(detail)});
  }

private:
  const Graph& g_;
  std::vector<PartitionViolation>& out_;
};

VertexSet sym_diff(const VertexSet& a, const VertexSet& b) { return (a - b) | (b - a); }

} // namespace

std::vector<PartitionViolation> verify_partition_axioms(const Graph& g, const TwoLevelPartition& p) {
  std::vector<PartitionViolation> out;
  AxiomChecker check(g, out);
  check.level("first", p.first, g.vertices());
  if (!out.empty()) return out;
  const VertexSet v1 = p.first.dominated();
  const VertexSet v2 = p.first.pair_union();
  if (!(p.v1 == v1)) check.add("levels", sym_diff(p.v1, v1).to_vector(), "V1 differs from ∪U_k");
  if (!(p.v2 == v2)) check.add("levels", sym_diff(p.v2, v2).to_vector(), "V2 differs from ∪C_{i,j}");
  if (v2.empty()) {
    if (!p.second.clique.empty()) check.add("levels", p.second.clique, "second level non-empty while V2 = ∅");
  } else {
    check.level("second", p.second, v2);
  }
  const auto n = static_cast<std::size_t>(g.order());
  const VertexSet x2 = p.second.universe == n ? p.second.dominated() : VertexSet(n);
  const VertexSet x3 = p.second.universe == n ? p.second.pair_union() : VertexSet(n);
  if (!(p.x1 == v1)) check.add("levels", sym_diff(p.x1, v1).to_vector(), "X1 differs from V1");
  if (!(p.x2 == x2)) check.add("levels", sym_diff(p.x2, x2).to_vector(), "X2 differs from A' ∪ (∪I'_k)");
  if (!(p.x3 == x3)) check.add("levels", sym_diff(p.x3, x3).to_vector(), "X3 differs from ∪C'_{i,j}");
  return out;
}

} // namespace chibound
