#include "chibound/coloring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "chibound/clique.hpp"
#include "chibound/oracles.hpp"
#include "chibound/partition.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

std::string_view case_label_name(CaseLabel label) {
  switch (label) {
  case CaseLabel::SMALL_OMEGA: return "SMALL_OMEGA";
  case CaseLabel::OMEGA3_CHI2: return "OMEGA3_CHI2";
  case CaseLabel::OMEGA3_C5: return "OMEGA3_C5";
  case CaseLabel::CASE1: return "CASE1";
  case CaseLabel::CASE2: return "CASE2";
  case CaseLabel::CASE3_1: return "CASE3_1";
  case CaseLabel::CASE3_2_EARLYOUT: return "CASE3_2_EARLYOUT";
  case CaseLabel::CASE3_2_1_X3_UNDOMINATED: return "CASE3_2_1_X3_UNDOMINATED";
  case CaseLabel::CASE3_2_1_1: return "CASE3_2_1_1";
  case CaseLabel::CASE3_2_1_2: return "CASE3_2_1_2";
  case CaseLabel::CASE3_2_2_UP3: return "CASE3_2_2_UP3";
  case CaseLabel::CASE3_2_2_UP2: return "CASE3_2_2_UP2";
  case CaseLabel::FALLBACK_EXACT: return "FALLBACK_EXACT";
  }
  return "?";
}

bool CaseTrace::has(CaseLabel label) const {
  return std::find(case_path.begin(), case_path.end(), label) != case_path.end();
}

int coloring_bound(int omega) {
  if (omega <= 1) return std::max(omega, 0);
  if (omega == 3) return 7;
  return omega + 1;
}

namespace {

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

// Partial coloring with checked assignments; any conflict is a proof gap.
class Painter {
public:
  Painter(const Graph& g, int omega) : g_(g), limit_(coloring_bound(omega)) {
    out_.colors.assign(static_cast<std::size_t>(g.order()), 0);
    out_.trace.omega = omega;
  }

  CaseTrace& trace() { return out_.trace; }
  int color_of(Vertex v) const { return out_.colors[static_cast<std::size_t>(v)]; }
  int limit() const { return limit_; }

  [[noreturn]] void gap(const std::string& why, Vertex blocking = -1) const {
    Coloring partial = out_;
    partial.palette_size = palette();
    throw ProofGapError(why, std::move(partial), blocking);
  }

  void label(CaseLabel l) { out_.trace.case_path.push_back(l); }
  void pivot(const std::string& role, int value) { out_.trace.pivots[role] = value; }
  void note(std::string text) { out_.trace.notes.push_back(std::move(text)); }

  bool free_for(Vertex v, int c) const {
    for (Vertex w : g_.neighbors(v))
      if (color_of(w) == c) return false;
    return true;
  }

  void assign(Vertex v, int c, const std::string& step) {
    if (c < 1 || c > limit_) gap(step + ": color " + std::to_string(c) + " outside the palette", v);
    if (!free_for(v, c)) gap(step + ": " + vname(v) + " has a neighbor colored " + std::to_string(c), v);
    out_.colors[static_cast<std::size_t>(v)] = c;
  }

  void assign_set(const VertexSet& s, int c, const std::string& step) {
    for (Vertex v : s) assign(v, c, step);
  }

  void uncolor(Vertex v) { out_.colors[static_cast<std::size_t>(v)] = 0; }

  int smallest_free(Vertex v) const {
    for (int c = 1; c <= limit_; ++c)
      if (free_for(v, c)) return c;
    return 0;
  }

  void greedy(Vertex v, const std::string& step) {
    const int c = smallest_free(v);
    if (c == 0) gap(step + ": no free color for " + vname(v), v);
    out_.colors[static_cast<std::size_t>(v)] = c;
  }

  void greedy_all(const VertexSet& s, const std::string& step) {
    for (Vertex v : s) greedy(v, step);
  }

  // Colors already present on neighbors of a group.
  std::vector<bool> blocked(const VertexSet& group) const {
    std::vector<bool> out(static_cast<std::size_t>(limit_) + 1, false);
    for (Vertex v : group)
      for (Vertex w : g_.neighbors(v)) out[static_cast<std::size_t>(color_of(w))] = true;
    return out;
  }

  // One distinct color from `palette` per non-empty group, avoiding colors
  // already on each group's neighbors. Greedy first, bipartite matching after.
  void distinct(const std::vector<VertexSet>& groups, const std::vector<int>& palette, const std::string& step) {
    const std::size_t m = groups.size();
    std::vector<std::vector<int>> allowed(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (groups[i].empty()) continue;
      const auto bad = blocked(groups[i]);
      for (int c : palette)
        if (!bad[static_cast<std::size_t>(c)]) allowed[i].push_back(c);
    }
    std::vector<int> pick(m, 0);
    std::vector<int> owner(static_cast<std::size_t>(limit_) + 1, -1);
    bool greedy_ok = true;
    for (std::size_t i = 0; i < m && greedy_ok; ++i) {
      if (groups[i].empty()) continue;
      greedy_ok = false;
      for (int c : allowed[i])
        if (owner[static_cast<std::size_t>(c)] < 0) {
          owner[static_cast<std::size_t>(c)] = static_cast<int>(i);
          pick[i] = c;
          greedy_ok = true;
          break;
        }
    }
    if (!greedy_ok) {
      note(step + ": greedy distinct colors failed, used matching");
      std::fill(owner.begin(), owner.end(), -1);
      std::fill(pick.begin(), pick.end(), 0);
      std::vector<bool> seen;
      std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (int c : allowed[i]) {
          const auto ci = static_cast<std::size_t>(c);
          if (seen[ci]) continue;
          seen[ci] = true;
          if (owner[ci] < 0 || augment(static_cast<std::size_t>(owner[ci]))) {
            owner[ci] = static_cast<int>(i);
            pick[i] = c;
            return true;
          }
        }
        return false;
      };
      for (std::size_t i = 0; i < m; ++i) {
        if (groups[i].empty()) continue;
        seen.assign(owner.size(), false);
        if (!augment(i)) gap(step + ": no distinct color left for a group", groups[i].first());
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      if (!groups[i].empty()) assign_set(groups[i], pick[i], step);
  }

  Coloring finish() {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (color_of(v) == 0) gap("vertex left uncolored", v);
    out_.palette_size = palette();
    return out_;
  }

private:
  int palette() const {
    int best = 0;
    for (int c : out_.colors) best = std::max(best, c);
    return best;
  }

  const Graph& g_;
  int limit_;
  Coloring out_;
};

std::vector<int> range_colors(int lo, int hi) {
  std::vector<int> out;
  for (int c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

std::vector<VertexSet> singletons(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (Vertex v : s) {
    VertexSet one = g.empty_set();
    one.insert(v);
    out.push_back(std::move(one));
  }
  return out;
}

// Exact coloring of ⟨s⟩ within budget, as host-id color classes.
std::optional<std::vector<VertexSet>> split_within(const Graph& g, const VertexSet& s, int budget) {
  const auto sub = induced_subgraph(g, s);
  const auto col = color_with_budget(sub.graph, budget);
  if (!col) return std::nullopt;
  std::vector<VertexSet> classes(static_cast<std::size_t>(budget), g.empty_set());
  for (std::size_t i = 0; i < col->size(); ++i)
    classes[static_cast<std::size_t>((*col)[i] - 1)].insert(sub.to_host[i]);
  return classes;
}

class Ge4Engine {
public:
  Ge4Engine(const Graph& g, TwoLevelPartition p)
      : g_(g), p_(std::move(p)), w_(p_.first.omega()), paint_(g, w_) {}

  Coloring run() {
    for (int k = 1; k <= w_; ++k) paint_.assign_set(p_.first.part(k), k, "U_k <- k");
    const int w2 = p_.second.omega();
    if (w2 <= w_ - 1) {
      paint_.label(CaseLabel::CASE1);
      paint_.note("ω(V2) = " + std::to_string(w2));
      by_sets(split_v2(), "case 1");
      return paint_.finish();
    }
    std::vector<int> nonempty;
    for (int k = 1; k <= w2; ++k)
      if (!p_.second.i_class(k).empty()) nonempty.push_back(k);
    if (nonempty.size() >= 2) {
      paint_.label(CaseLabel::CASE2);
      if (!p_.x3.empty()) paint_.gap("case 2 expects X3 to be empty", p_.x3.first());
      std::vector<VertexSet> parts;
      for (int k = 1; k <= w2; ++k) parts.push_back(p_.second.part(k));
      by_sets(parts, "case 2");
      return paint_.finish();
    }
    t_ = nonempty.empty() ? 1 : nonempty.front();
    paint_.pivot("t", t_);
    const int w3 = clique_number_within(g_, p_.x3);
    if (w3 <= w_ - 1) {
      paint_.label(CaseLabel::CASE3_1);
      x2_as_3_1();
      paint_.greedy_all(p_.x3, "case 3.1 X3");
      return paint_.finish();
    }
    if (is_anticomplete_between(g_, p_.x3, p_.x2)) {
      paint_.label(CaseLabel::CASE3_2_EARLYOUT);
      paint_.note("X3 anticomplete to X2");
      x2_as_3_1();
      paint_.greedy_all(p_.x3, "case 3.2 X3");
      return paint_.finish();
    }
    if (!is_clique(g_, p_.x3)) paint_.gap("X3 meets X2 but is not a clique", p_.x3.first());
    for (Vertex a : p_.x3) {
      if (!g_.neighbors(a).intersects(p_.x2) || !g_.neighbors(a).intersects(p_.x1)) {
        paint_.label(CaseLabel::CASE3_2_EARLYOUT);
        paint_.pivot("a", a);
        paint_.note(g_.neighbors(a).intersects(p_.x2) ? "a has no neighbor in X1" : "a has no neighbor in X2");
        x2_as_3_1();
        VertexSet rest = p_.x3;
        rest.erase(a);
        paint_.greedy_all(rest, "case 3.2 X3 minus a");
        paint_.greedy(a, "case 3.2 a last");
        return paint_.finish();
      }
    }
    if (p_.second.i_class(t_).empty()) {
      paint_.label(CaseLabel::CASE3_2_EARLYOUT);
      paint_.note("I'_t empty; V2 is two cliques");
      by_sets(split_v2(), "case 3.2 I'_t empty");
      return paint_.finish();
    }
    main_case();
    return paint_.finish();
  }

private:
  std::vector<VertexSet> split_v2() {
    auto sets = split_within(g_, p_.v2, w_);
    if (!sets) paint_.gap("V2 does not split into ω independent sets", p_.v2.first());
    return *sets;
  }

  // S_1..S_{ω-1} take distinct colors; S_ω is colored vertex by vertex.
  void by_sets(std::vector<VertexSet> sets, const std::string& step) {
    while (static_cast<int>(sets.size()) < w_) sets.push_back(g_.empty_set());
    if (static_cast<int>(sets.size()) > w_) paint_.gap(step + ": more than ω sets", -1);
    const VertexSet last = sets.back();
    sets.pop_back();
    paint_.distinct(sets, range_colors(1, w_ + 1), step + " sets");
    paint_.greedy_all(last, step + " last set");
  }

  VertexSet ut() const { return p_.second.part(t_); }

  void x2_as_3_1() {
    paint_.assign_set(ut(), w_ + 1, "U'_t <- ω+1");
    paint_.distinct(singletons(g_, p_.x2 - ut()), range_colors(1, w_), "X2 minus U'_t");
  }

  void main_case() {
    const VertexSet u_t = ut();
    const VertexSet rest2 = p_.x2 - u_t;
    if (u_t.count() != 2) paint_.gap("U'_t does not have two vertices", u_t.first());
    const Vertex za = u_t.first();
    const Vertex zb = u_t.next(za);
    const std::size_t na = g_.neighbors(za).intersection_count(p_.x3);
    const std::size_t nb = g_.neighbors(zb).intersection_count(p_.x3);
    const auto want = static_cast<std::size_t>(w_ - 1);
    Vertex z1 = -1, z2 = -1;
    if (na == want && nb == 1) z1 = za, z2 = zb;
    else if (nb == want && na == 1) z1 = zb, z2 = za;
    else paint_.gap("U'_t neighborhoods in X3 do not split ω-1 / 1", za);
    const VertexSet h_low = g_.neighbors(z1) & p_.x3;
    const VertexSet h_top = g_.neighbors(z2) & p_.x3;
    if (h_low.intersects(h_top) || (h_low | h_top) != p_.x3) paint_.gap("z1, z2 do not split X3", z2);
    if (!is_anticomplete_between(g_, p_.x3, rest2)) paint_.gap("X3 meets X2 outside U'_t", p_.x3.first());
    const Vertex h_omega = h_top.first();
    const Vertex h_1 = h_low.first();
    paint_.pivot("z1", z1);
    paint_.pivot("z2", z2);
    paint_.pivot("h_omega", h_omega);
    paint_.pivot("h_1", h_1);

    int p = 0;
    for (int k = 1; k <= w_; ++k)
      if (!p_.first.i_class(k).empty()) {
        if (p != 0) paint_.gap("two first-level I classes are non-empty", p_.first.i_class(k).first());
        p = k;
      }
    if (p == 0) {
      for (int k = 1; k <= w_ && p == 0; ++k)
        if (!p_.x3.is_subset_of(neighbors_in(g_, p_.first.part(k), g_.vertices()))) p = k;
      if (p == 0) paint_.gap("every U_k dominates X3", -1);
      paint_.note("all I_k empty; p chosen with X3 not inside N(U_p)");
    }
    paint_.pivot("p", p);
    const VertexSet up = p_.first.part(p);
    const VertexSet n_up = neighbors_in(g_, up, g_.vertices());

    if (!p_.v2.is_subset_of(n_up)) {
      if (!p_.x3.is_subset_of(n_up)) {
        paint_.label(CaseLabel::CASE3_2_1_X3_UNDOMINATED);
        undominated_x3(n_up);
      } else {
        const VertexSet outside = rest2 - n_up;
        if (!outside.empty()) case_3_2_1_1(outside.first(), p, z1, z2, h_1, h_omega);
        else case_3_2_1_2(p, z1, z2, h_1, h_omega, up);
      }
    } else {
      case_3_2_2(p, z1, z2, h_omega, up, rest2);
    }
  }

  void undominated_x3(const VertexSet& n_up) {
    x2_as_3_1();
    for (Vertex hi : p_.x3 - n_up) {
      const int s = p_.first.part_of((g_.neighbors(hi) & p_.x1).first());
      if (s == 0) continue;
      const VertexSet us = p_.first.part(s);
      for (Vertex hj : p_.x3) {
        if (hj == hi || g_.neighbors(hj).intersects(us)) continue;
        paint_.pivot("h_i", hi);
        paint_.pivot("h_j", hj);
        paint_.pivot("s", s);
        paint_.assign(hj, s, "h_j <- s");
        VertexSet rest = p_.x3;
        rest.erase(hi);
        rest.erase(hj);
        paint_.greedy_all(rest, "X3 minus h_i, h_j");
        paint_.greedy(hi, "h_i last");
        return;
      }
    }
    paint_.gap("no h_i, h_j pair for the undominated case", (p_.x3 - n_up).first());
  }

  void case_3_2_1_1(Vertex a, int p, Vertex z1, Vertex z2, Vertex h_1, Vertex h_omega) {
    paint_.label(CaseLabel::CASE3_2_1_1);
    paint_.pivot("a", a);
    VertexSet r2 = p_.x2 - ut();
    r2.erase(a);
    VertexSet r3 = p_.x3;
    r3.erase(h_1);
    r3.erase(h_omega);
    const auto v2 = r2.to_vector();
    const auto v3 = r3.to_vector();
    if (v2.size() != v3.size()) paint_.gap("remaining X2 and X3 differ in size", a);
    std::vector<VertexSet> sets;
    VertexSet s1 = g_.empty_set();
    s1.insert(z1);
    s1.insert(h_omega);
    sets.push_back(s1);
    for (std::size_t i = 0; i < v2.size(); ++i) {
      VertexSet s = g_.empty_set();
      s.insert(v2[i]);
      s.insert(v3[i]);
      sets.push_back(s);
    }
    for (const auto& s : sets)
      if (!is_independent_set(g_, s)) paint_.gap("S_l is not independent", s.first());
    std::vector<int> palette;
    for (int c = 1; c <= w_ + 1; ++c)
      if (c != p) palette.push_back(c);
    paint_.distinct(sets, palette, "S_1..S_{ω-1}");
    paint_.assign(a, p, "S_ω <- p");
    VertexSet last = g_.empty_set();
    last.insert(z2);
    last.insert(h_1);
    for (int c = 1; c <= w_ + 1; ++c)
      if (paint_.free_for(z2, c) && paint_.free_for(h_1, c)) {
        paint_.assign_set(last, c, "S_{ω+1}");
        return;
      }
    paint_.gap("no color left for S_{ω+1}", z2);
  }

  void case_3_2_1_2(int p, Vertex z1, Vertex z2, Vertex h_1, Vertex h_omega, const VertexSet& up) {
    paint_.label(CaseLabel::CASE3_2_1_2);
    if (g_.neighbors(z1).intersects(up)) paint_.gap("z1 has a neighbor in U_p", z1);
    paint_.assign(z1, p, "z1 <- p");
    paint_.assign(z2, w_ + 1, "z2 <- ω+1");
    paint_.assign(h_1, w_ + 1, "h_1 <- ω+1");
    paint_.greedy_all(p_.x2 - ut(), "X2 minus U'_t");
    VertexSet rest = p_.x3;
    rest.erase(h_1);
    rest.erase(h_omega);
    paint_.greedy_all(rest, "X3 minus h_1, h_ω");
    paint_.greedy(h_omega, "h_ω last");
  }

  void case_3_2_2(int p, Vertex z1, Vertex z2, Vertex h_omega, const VertexSet& up, const VertexSet& rest2) {
    Vertex y1 = -1;
    for (Vertex y : up)
      if (rest2.is_subset_of(g_.neighbors(y))) {
        if (y1 >= 0) paint_.gap("y1 is not unique", y);
        y1 = y;
      }
    if (y1 < 0) paint_.gap("no vertex of U_p is complete to X2 minus U'_t", up.first());
    paint_.pivot("y1", y1);
    paint_.uncolor(y1);
    paint_.assign(y1, w_ + 1, "y1 <- ω+1");
    VertexSet rest3 = p_.x3;
    rest3.erase(h_omega);
    if (up.count() == 3) {
      paint_.label(CaseLabel::CASE3_2_2_UP3);
      const int s = p == 1 ? 2 : 1;
      paint_.pivot("s", s);
      paint_.assign(z2, w_ + 1, "z2 <- ω+1");
      paint_.assign(z1, s, "z1 <- s");
      paint_.greedy_all(rest2, "X2 minus U'_t");
      paint_.assign(h_omega, s, "h_ω <- s");
      paint_.greedy_all(rest3, "X3 minus h_ω");
    } else if (up.count() == 2) {
      paint_.label(CaseLabel::CASE3_2_2_UP2);
      paint_.assign(z1, w_ + 1, "z1 <- ω+1");
      paint_.assign(z2, w_ + 1, "z2 <- ω+1");
      paint_.greedy_all(rest2, "X2 minus U'_t");
      paint_.greedy(h_omega, "h_ω first");
      paint_.greedy_all(rest3, "X3 minus h_ω");
    } else {
      paint_.gap("|U_p| is " + std::to_string(up.count()) + ", expected 2 or 3", up.first());
    }
  }

  const Graph& g_;
  TwoLevelPartition p_;
  int w_;
  Painter paint_;
  int t_ = 1;
};

} // namespace

Coloring color_small_omega(const Graph& g) {
  const int w = clique_number(g);
  if (w > 2) throw std::invalid_argument("color_small_omega needs ω <= 2");
  Painter paint(g, w);
  paint.label(CaseLabel::SMALL_OMEGA);
  if (g.order() == 0) return paint.finish();
  std::optional<std::vector<int>> col;
  for (int budget = std::max(w, 1); budget <= coloring_bound(w) && !col; ++budget) col = color_with_budget(g, budget);
  if (!col) paint.gap("no coloring within the ω <= 2 budget", 0);
  for (Vertex v = 0; v < g.order(); ++v) paint.assign(v, (*col)[static_cast<std::size_t>(v)], "small ω");
  return paint.finish();
}

Coloring color_omega3(const Graph& g) {
  const int w = clique_number(g);
  if (w != 3) throw std::invalid_argument("color_omega3 needs ω = 3");
  const WagonPartition P = build_partition_unchecked(g, max_clique(g).to_vector());
  Painter paint(g, 3);
  for (int k = 1; k <= 3; ++k) paint.assign(P.v(k), k, "v_k <- k");
  const VertexSet b = P.c_class(2, 3) | P.i_class(2);
  const VertexSet d = P.c_class(1, 2) | P.c_class(1, 3) | P.i_class(1);
  const VertexSet i3 = P.i_class(3);

  const auto two = split_within(g, b, 2);
  if (two) {
    paint.label(CaseLabel::OMEGA3_CHI2);
    paint.assign_set(i3, 3, "I_3 <- 3");
    paint.assign_set((*two)[0], 2, "C23 ∪ I2 class 1");
    paint.assign_set((*two)[1], 4, "C23 ∪ I2 class 2");
  } else {
    paint.label(CaseLabel::OMEGA3_C5);
    const auto sub = induced_subgraph(g, b);
    const auto c5 = find_induced_c5(sub.graph);
    if (!c5) paint.gap("C23 ∪ I2 needs 3 colors but has no induced C5", b.first());
    if (b.count() != 5) paint.gap("C23 ∪ I2 is larger than its C5", b.first());
    std::vector<Vertex> cyc;
    for (Vertex v : c5->vertices) cyc.push_back(sub.to_host[static_cast<std::size_t>(v)]);
    const VertexSet u3 = P.part(3);
    std::size_t at = cyc.size();
    for (std::size_t i = 0; i < cyc.size() && at == cyc.size(); ++i)
      if (!g.neighbors(cyc[i]).intersects(u3)) at = i;
    if (at == cyc.size()) paint.gap("every C5 vertex has a neighbor in U_3", cyc.front());
    paint.pivot("a", cyc[at]);
    paint.assign(cyc[at], 3, "a <- 3");
    paint.assign_set(i3, 3, "I_3 <- 3");
    for (std::size_t step = 1; step < 5; ++step)
      paint.assign(cyc[(at + step) % 5], step % 2 == 1 ? 2 : 4, "C5 path");
  }
  const auto four = split_within(g, d, 4);
  if (!four) paint.gap("C12 ∪ C13 ∪ I1 is not 4-colorable", d.first());
  const int map[4] = {1, 5, 6, 7};
  for (int k = 0; k < 4; ++k) paint.assign_set((*four)[static_cast<std::size_t>(k)], map[k], "C12 ∪ C13 ∪ I1");
  return paint.finish();
}

Coloring color_omega_ge4(const Graph& g) {
  const int w = clique_number(g);
  if (w < 4) throw std::invalid_argument("color_omega_ge4 needs ω >= 4");
  return Ge4Engine(g, build_two_level(g)).run();
}

std::vector<VertexSet> partition_p3k1free_graph(const Graph& h, int budget) {
  const auto col = color_with_budget(h, budget);
  if (!col) throw BudgetInfeasible("graph does not split into " + std::to_string(budget) + " independent sets");
  std::vector<VertexSet> out;
  for (std::size_t v = 0; v < col->size(); ++v) {
    const auto c = static_cast<std::size_t>((*col)[v]);
    while (out.size() < c) out.push_back(h.empty_set());
    out[c - 1].insert(static_cast<Vertex>(v));
  }
  return out;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != static_cast<std::size_t>(g.order()))
    throw UncoloredVertex("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(g.order()) + " vertices");
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.colors[static_cast<std::size_t>(v)] < 1) throw UncoloredVertex(vname(v) + " is uncolored");
  return is_proper_coloring(g, c.colors);
}

Coloring color(const Graph& g, const ColorOptions& options) {
  const auto member = is_class_member(g);
  if (!member.in_class) {
    std::string msg = "graph is not in the class";
    if (member.violation) {
      msg += ": induced " + std::string(pattern_slug(member.violation->pattern)) + " on";
      for (Vertex v : member.violation->vertices) msg += " " + std::to_string(v);
    }
    throw NotInClass(msg);
  }
  const int w = clique_number(g);
  Coloring out;
  try {
    if (w <= 2) out = color_small_omega(g);
    else if (w == 3) out = color_omega3(g);
    else out = color_omega_ge4(g);
  } catch (const ProofGapError& e) {
    if (!options.fallback_exact) throw;
    ChromaticOptions exact;
    exact.cap = std::numeric_limits<int>::max();
    exact.independence_bound = false;
    const auto chi = exact_chromatic_number(g, exact);
    out.colors = chi.certificate;
    out.palette_size = chi.value;
    out.trace = e.trace();
    out.trace.case_path.push_back(CaseLabel::FALLBACK_EXACT);
    out.trace.notes.push_back(std::string("proof gap: ") + e.what());
  }
  if (!verify_coloring(g, out)) {
    Coloring bad = out;
    throw ProofGapError("engine produced an improper coloring", std::move(bad), -1);
  }
  if (out.palette_size > coloring_bound(w)) {
    Coloring over = out;
    throw ProofGapError("coloring uses " + std::to_string(out.palette_size) + " colors, above the bound",
                        std::move(over), -1);
  }
  return out;
}

} // namespace chibound
