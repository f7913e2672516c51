#include "chibound/structure_verify.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "chibound/clique.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

namespace {

constexpr std::array<std::string_view, 17> lemma_names = {
    "PROP1_I",   "PROP1_II",  "PROP1_III",  "LEM_INDSET_I", "LEM_INDSET_II", "LEM_INDSET_III",
    "LEM_V2_I",  "LEM_V2_II", "LEM_V2_III", "LEM_V2_IV",    "LEM_V2_V",      "THM_STRUCT",
    "LEM_UT_I",  "LEM_UT_II", "LEM_UT_III", "LEM_UT_IV",    "LEM_UT_V",
};

LemmaReport ok(LemmaId id, std::string note = {}) {
  LemmaReport r;
  r.lemma_id = id;
  r.note = std::move(note);
  return r;
}

LemmaReport bad(LemmaId id, std::string description, std::vector<Vertex> vertices, std::string note = {}) {
  LemmaReport r;
  r.lemma_id = id;
  r.status = LemmaStatus::violated;
  r.holds = false;
  r.counterexample = LemmaEvidence{std::move(description), std::move(vertices)};
  r.note = std::move(note);
  return r;
}

LemmaReport skip(LemmaId id, std::string why, LemmaStatus status = LemmaStatus::inapplicable) {
  LemmaReport r;
  r.lemma_id = id;
  r.status = status;
  r.note = std::move(why);
  return r;
}

std::string str(Vertex v) { return std::to_string(v); }

// u !~ v with w adjacent to exactly one of them: ⟨s⟩ is not complete multipartite.
std::optional<std::vector<Vertex>> multipartite_breaker(const Graph& g, const VertexSet& s) {
  for (Vertex u : s)
    for (Vertex v : s) {
      if (v <= u || g.adjacent(u, v)) continue;
      const VertexSet diff = ((g.neighbors(u) - g.neighbors(v)) | (g.neighbors(v) - g.neighbors(u))) & s;
      if (!diff.empty()) return std::vector<Vertex>{u, v, diff.first()};
    }
  return std::nullopt;
}

// Induced P3 a-b-c inside ⟨s⟩.
std::optional<std::vector<Vertex>> induced_p3(const Graph& g, const VertexSet& s) {
  for (Vertex b : s) {
    const VertexSet nb = g.neighbors(b) & s;
    for (Vertex a : nb) {
      const VertexSet far = nb - g.neighbors(a);
      for (Vertex c : far)
        if (c != a) return std::vector<Vertex>{a, b, c};
    }
  }
  return std::nullopt;
}

// Indices k with N(x) ∩ U_k ≠ ∅.
std::vector<int> parts_touched(const Graph& g, const WagonPartition& w, const VertexSet& from) {
  std::vector<int> out;
  for (int k = 1; k <= w.omega(); ++k)
    if (!neighbors_in(g, from, w.part(k)).empty()) out.push_back(k);
  return out;
}

class Context {
public:
  Context(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o)
      : g(g), p(p), o(o), w(p.first.omega()) {}

  bool member() {
    if (!member_) member_ = is_class_member(g).in_class;
    return *member_;
  }
  bool co_free() {
    if (!co_free_) co_free_ = !find_induced(g, PatternName::CO_P3_2K1).has_value();
    return *co_free_;
  }
  // Empty string when the class-member / ω >= 4 precondition holds.
  std::string base_gate() {
    if (!o.enforce_hypotheses) return {};
    if (w < 4) return "ω = " + std::to_string(w) + " < 4";
    if (!member()) return "graph is not a class member";
    return {};
  }

  const Graph& g;
  const TwoLevelPartition& p;
  const VerifyOptions& o;
  int w;

private:
  std::optional<bool> member_;
  std::optional<bool> co_free_;
};

std::vector<LemmaReport> all_skipped(std::initializer_list<LemmaId> ids, const std::string& why) {
  std::vector<LemmaReport> out;
  for (LemmaId id : ids) out.push_back(skip(id, why));
  return out;
}

VertexSet x3_neighbors(const Context& c, Vertex v) { return c.g.neighbors(v) & c.p.x3; }

} // namespace

std::string_view lemma_id_name(LemmaId id) { return lemma_names[static_cast<std::size_t>(id)]; }

LemmaId parse_lemma_id(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::replace(upper.begin(), upper.end(), '-', '_');
  for (std::size_t i = 0; i < lemma_names.size(); ++i)
    if (lemma_names[i] == upper) return static_cast<LemmaId>(i);
  throw std::invalid_argument("unknown lemma id '" + std::string(name) + "'");
}

const std::vector<LemmaId>& all_lemma_ids() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> out;
    for (std::size_t i = 0; i < lemma_names.size(); ++i) out.push_back(static_cast<LemmaId>(i));
    return out;
  }();
  return ids;
}

std::string_view lemma_status_name(LemmaStatus s) {
  switch (s) {
  case LemmaStatus::holds: return "holds";
  case LemmaStatus::violated: return "violated";
  case LemmaStatus::inapplicable: return "inapplicable";
  case LemmaStatus::size_cap_exceeded: return "size_cap_exceeded";
  }
  return "?";
}

std::vector<LemmaReport> check_prop1(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  Context c(g, p, o);
  if (o.enforce_hypotheses) {
    if (c.w < 4) return all_skipped({LemmaId::PROP1_I, LemmaId::PROP1_II, LemmaId::PROP1_III}, "ω < 4");
    if (!c.co_free())
      return all_skipped({LemmaId::PROP1_I, LemmaId::PROP1_II, LemmaId::PROP1_III}, "graph contains co-(P3∪2K1)");
  }
  const WagonPartition& f = p.first;
  std::vector<LemmaReport> out;

  std::optional<LemmaReport> r1;
  for (int k = 1; k <= c.w && !r1; ++k)
    for (int l = k + 1; l <= c.w && !r1; ++l)
      for (Vertex a : f.part(k)) {
        const VertexSet miss = f.part(l) - g.neighbors(a);
        if (!miss.empty()) {
          r1 = bad(LemmaId::PROP1_I, "U_" + std::to_string(k) + " and U_" + std::to_string(l) + " not complete",
                   {a, miss.first()});
          break;
        }
      }
  out.push_back(r1 ? *r1 : ok(LemmaId::PROP1_I));

  std::optional<LemmaReport> r2;
  for (const auto& [i, j] : f.pairs())
    if (j >= 4 && !f.c_class(i, j).empty()) {
      r2 = bad(LemmaId::PROP1_II, "C_{" + std::to_string(i) + "," + std::to_string(j) + "} is non-empty",
               f.c_class(i, j).to_vector());
      break;
    }
  out.push_back(r2 ? *r2 : ok(LemmaId::PROP1_II));

  std::optional<LemmaReport> r3;
  for (Vertex x : p.v1.complement()) {
    VertexSet one = g.empty_set();
    one.insert(x);
    const auto touched = parts_touched(g, f, one);
    if (touched.size() >= 2) {
      std::vector<Vertex> ev{x};
      for (int k : touched) ev.push_back((g.neighbors(x) & f.part(k)).first());
      r3 = bad(LemmaId::PROP1_III, "vertex " + str(x) + " of V2 has neighbors in " + std::to_string(touched.size()) +
                                       " parts of V1",
               ev);
      break;
    }
  }
  out.push_back(r3 ? *r3 : ok(LemmaId::PROP1_III));
  return out;
}

std::vector<LemmaReport> check_indep_subset_lemma(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  Context c(g, p, o);
  const std::string gate = c.base_gate();
  if (!gate.empty()) return all_skipped({LemmaId::LEM_INDSET_I, LemmaId::LEM_INDSET_II, LemmaId::LEM_INDSET_III}, gate);
  const WagonPartition& f = p.first;
  std::vector<LemmaReport> out;

  if (static_cast<int>(p.v2.count()) > o.indset_cap) {
    const std::string why = "|V2| = " + std::to_string(p.v2.count()) + " exceeds " + std::to_string(o.indset_cap);
    out.push_back(skip(LemmaId::LEM_INDSET_I, why, LemmaStatus::size_cap_exceeded));
    out.push_back(skip(LemmaId::LEM_INDSET_II, why, LemmaStatus::size_cap_exceeded));
  } else {
    // Touched parts only grow with X, so a violating X always contains a
    // violating independent subset of size 2 or 3.
    const auto v2 = p.v2.to_vector();
    std::optional<LemmaReport> r1, r2;
    auto test = [&](const std::vector<Vertex>& xs) {
      const auto touched = parts_touched(g, f, VertexSet::from_range(g.order(), xs));
      if (touched.size() > 2 && !r1)
        r1 = bad(LemmaId::LEM_INDSET_I, "independent set meets " + std::to_string(touched.size()) + " parts of V1", xs);
      if (touched.size() >= 2 && xs.size() > 2 && !r2)
        r2 = bad(LemmaId::LEM_INDSET_II, "independent set of size " + std::to_string(xs.size()) + " meets two parts",
                 xs);
    };
    for (std::size_t a = 0; a < v2.size(); ++a)
      for (std::size_t b = a + 1; b < v2.size(); ++b) {
        if (g.adjacent(v2[a], v2[b])) continue;
        test({v2[a], v2[b]});
        for (std::size_t d = b + 1; d < v2.size(); ++d)
          if (!g.adjacent(v2[a], v2[d]) && !g.adjacent(v2[b], v2[d])) test({v2[a], v2[b], v2[d]});
      }
    out.push_back(r1 ? *r1 : ok(LemmaId::LEM_INDSET_I));
    out.push_back(r2 ? *r2 : ok(LemmaId::LEM_INDSET_II));
  }

  if (o.enforce_hypotheses && is_clique(g, p.v2)) {
    out.push_back(skip(LemmaId::LEM_INDSET_III, "no independent X inside V2 with |X| >= 2"));
    return out;
  }
  std::vector<Vertex> witnesses;
  for (int k = 1; k <= c.w; ++k)
    if (!f.i_class(k).empty()) witnesses.push_back(f.i_class(k).first());
  if (witnesses.size() > 2)
    out.push_back(bad(LemmaId::LEM_INDSET_III, std::to_string(witnesses.size()) + " classes I_k are non-empty", witnesses));
  else
    out.push_back(ok(LemmaId::LEM_INDSET_III));
  return out;
}

std::vector<LemmaReport> check_v2_structure(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  Context c(g, p, o);
  const std::string gate = c.base_gate();
  if (!gate.empty())
    return all_skipped(
        {LemmaId::LEM_V2_I, LemmaId::LEM_V2_II, LemmaId::LEM_V2_III, LemmaId::LEM_V2_IV, LemmaId::LEM_V2_V}, gate);
  const WagonPartition& s = p.second;
  std::vector<LemmaReport> out;

  const auto sub = induced_subgraph(g, p.v2);
  if (auto hit = find_induced_graph(sub.graph, pattern(PatternName::P3_K1).graph)) {
    std::vector<Vertex> host;
    for (Vertex v : *hit) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
    out.push_back(bad(LemmaId::LEM_V2_I, "⟨V2⟩ contains an induced P3∪K1", host));
  } else {
    out.push_back(ok(LemmaId::LEM_V2_I));
  }

  if (auto p3 = induced_p3(g, p.x3))
    out.push_back(bad(LemmaId::LEM_V2_II, "⟨X3⟩ contains an induced P3", *p3));
  else
    out.push_back(ok(LemmaId::LEM_V2_II));

  const int w2 = s.omega();
  if (o.enforce_hypotheses && (w2 < 4 || p.x3.empty())) {
    out.push_back(skip(LemmaId::LEM_V2_III, "needs ω(⟨V2⟩) >= 4 and X3 non-empty"));
  } else {
    std::vector<Vertex> ev;
    for (int k = 1; k <= w2; ++k)
      if (!s.i_class(k).empty()) ev.push_back(s.i_class(k).first());
    if (ev.size() > 1)
      out.push_back(bad(LemmaId::LEM_V2_III, std::to_string(ev.size()) + " classes I'_k are non-empty", ev));
    else
      out.push_back(ok(LemmaId::LEM_V2_III, ev.empty() ? "every I'_k is empty; any t qualifies" : ""));
  }

  const int w3 = clique_number_within(g, p.x3);
  if (o.enforce_hypotheses && (w3 != c.w || is_anticomplete_between(g, p.x3, p.x2))) {
    out.push_back(skip(LemmaId::LEM_V2_IV, "needs ω(⟨X3⟩) = ω and [X3,X2] non-empty"));
  } else {
    std::optional<LemmaReport> r;
    for (Vertex a : p.x3) {
      const VertexSet miss = (p.x3 - g.neighbors(a));
      VertexSet others = miss;
      others.erase(a);
      if (!others.empty()) {
        r = bad(LemmaId::LEM_V2_IV, "X3 is not a clique", {a, others.first()});
        break;
      }
    }
    if (!r && static_cast<int>(p.x3.count()) != c.w)
      r = bad(LemmaId::LEM_V2_IV, "X3 has " + std::to_string(p.x3.count()) + " vertices, not ω", p.x3.to_vector());
    out.push_back(r ? *r : ok(LemmaId::LEM_V2_IV));
  }

  const int wx2 = clique_number_within(g, p.x2);
  if (o.enforce_hypotheses && (wx2 != c.w || w3 != c.w)) {
    out.push_back(skip(LemmaId::LEM_V2_V, "needs ω(⟨X2⟩) = ω(⟨X3⟩) = ω"));
  } else {
    std::optional<LemmaReport> r;
    if (auto br = multipartite_breaker(g, p.x2)) r = bad(LemmaId::LEM_V2_V, "⟨X2⟩ is not complete multipartite", *br);
    std::vector<VertexSet> parts1, parts2, parts3;
    for (int k = 1; k <= c.w; ++k) parts1.push_back(p.first.part(k));
    for (int k = 1; k <= w2; ++k) parts2.push_back(s.part(k));
    std::string note;
    const bool x3_parts = is_clique(g, p.x3);
    if (x3_parts)
      for (Vertex v : p.x3) parts3.push_back(VertexSet(static_cast<std::size_t>(g.order()), {v}));
    else
      note = "⟨X3⟩ is not a clique, so its parts are undefined; only X1 -> X2 checked";
    auto scan = [&](const VertexSet& from, const std::vector<VertexSet>& parts, const std::string& label) {
      if (r || parts.empty()) return;
      for (Vertex x : from) {
        int hit = 0;
        for (const auto& part : parts)
          if (g.neighbors(x).intersects(part)) ++hit;
        if (hit != 0 && hit != 1 && hit != c.w - 1) {
          r = bad(LemmaId::LEM_V2_V,
                  "vertex " + str(x) + " meets " + std::to_string(hit) + " parts of " + label, {x});
          return;
        }
      }
    };
    scan(p.x1, parts2, "X2");
    if (x3_parts) {
      scan(p.x1, parts3, "X3");
      scan(p.x2, parts3, "X3");
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_V2_V, note));
  }
  return out;
}

LemmaReport check_structural_theorem(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  Context c(g, p, o);
  const std::string gate = c.base_gate();
  if (!gate.empty()) return skip(LemmaId::THM_STRUCT, gate);
  if (auto br = multipartite_breaker(g, p.x1)) return bad(LemmaId::THM_STRUCT, "⟨X1⟩ is not complete multipartite", *br);
  for (int k = 1; k <= p.second.omega(); ++k)
    if (!is_independent_set(g, p.second.part(k)))
      return bad(LemmaId::THM_STRUCT, "part U'_" + std::to_string(k) + " of X2 is not independent",
                 p.second.part(k).to_vector());
  if (clique_number_within(g, p.x2) >= 4)
    if (auto br = multipartite_breaker(g, p.x2))
      return bad(LemmaId::THM_STRUCT, "⟨X2⟩ is not complete multipartite", *br);
  if (auto p3 = induced_p3(g, p.x3)) return bad(LemmaId::THM_STRUCT, "⟨X3⟩ is not a union of cliques", *p3);
  return ok(LemmaId::THM_STRUCT);
}

std::vector<LemmaReport> check_ut_up_lemma(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  Context c(g, p, o);
  const std::initializer_list<LemmaId> ids = {LemmaId::LEM_UT_I, LemmaId::LEM_UT_II, LemmaId::LEM_UT_III,
                                              LemmaId::LEM_UT_IV, LemmaId::LEM_UT_V};
  std::string gate = c.base_gate();
  if (!gate.empty()) return all_skipped(ids, gate);
  const WagonPartition& s = p.second;
  const WagonPartition& f = p.first;

  std::vector<int> nonempty;
  for (int k = 1; k <= s.omega(); ++k)
    if (!s.i_class(k).empty()) nonempty.push_back(k);
  if (o.enforce_hypotheses) {
    if (clique_number_within(g, p.x2) != c.w || clique_number_within(g, p.x3) != c.w)
      gate = "needs ω(⟨X2⟩) = ω(⟨X3⟩) = ω";
    else if (is_anticomplete_between(g, p.x2, p.x3))
      gate = "needs [X2,X3] non-empty";
    else if (nonempty.size() != 1)
      gate = "needs exactly one non-empty I'_t";
    else
      for (Vertex a : p.x3)
        if (!g.neighbors(a).intersects(p.x2) || !g.neighbors(a).intersects(p.x1)) {
          gate = "vertex " + str(a) + " of X3 misses X1 or X2";
          break;
        }
    if (!gate.empty()) return all_skipped(ids, gate);
  }
  const int t = nonempty.empty() ? 1 : nonempty.front();
  const VertexSet ut = s.omega() >= t ? s.part(t) : g.empty_set();
  const VertexSet rest2 = p.x2 - ut;
  std::vector<LemmaReport> out;

  // (i)
  Vertex z1 = -1, z2 = -1;
  {
    std::optional<LemmaReport> r;
    if (ut.count() != 2) {
      r = bad(LemmaId::LEM_UT_I, "|U'_t| = " + std::to_string(ut.count()), ut.to_vector());
    } else {
      const Vertex a = ut.first();
      const Vertex b = ut.next(a);
      const auto want = static_cast<std::size_t>(c.w - 1);
      const VertexSet na = x3_neighbors(c, a), nb = x3_neighbors(c, b);
      if (na.count() == want && nb.count() == 1) z1 = a, z2 = b;
      else if (nb.count() == want && na.count() == 1) z1 = b, z2 = a;
      if (z1 < 0)
        r = bad(LemmaId::LEM_UT_I, "U'_t neighborhoods in X3 are not of sizes ω-1 and 1", {a, b});
      else if (x3_neighbors(c, z1).intersects(x3_neighbors(c, z2)) ||
               (x3_neighbors(c, z1) | x3_neighbors(c, z2)) != p.x3)
        r = bad(LemmaId::LEM_UT_I, "N_X3(z1), N_X3(z2) do not split X3", {z1, z2});
      else if (!is_anticomplete_between(g, p.x3, rest2)) {
        const Vertex x = neighbors_in(g, rest2, p.x3).first();
        r = bad(LemmaId::LEM_UT_I, "X3 meets X2 outside U'_t", {x, (g.neighbors(x) & rest2).first()});
      }
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_UT_I));
  }

  // (ii)
  int p_idx = 0;
  {
    std::optional<LemmaReport> r;
    std::vector<Vertex> ev;
    for (int k = 1; k <= c.w; ++k)
      if (!f.i_class(k).empty()) {
        ev.push_back(f.i_class(k).first());
        if (p_idx == 0) p_idx = k;
      }
    if (ev.size() > 1) r = bad(LemmaId::LEM_UT_II, std::to_string(ev.size()) + " classes I_k are non-empty", ev);
    if (!r && p_idx != 0) {
      const auto up = f.part(p_idx).to_vector();
      for (std::size_t i = 0; i < up.size() && !r; ++i)
        for (std::size_t j = i + 1; j < up.size() && !r; ++j)
          if (!g.neighbors(up[i]).intersects(ut) && !g.neighbors(up[j]).intersects(ut))
            r = bad(LemmaId::LEM_UT_II, "two vertices of U_p have no neighbor in U'_t", {up[i], up[j]});
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_UT_II, p_idx == 0 ? "every I_k is empty" : ""));
  }

  // iii-v need p with V2 ⊆ N(U_p)
  if (p_idx == 0)
    for (int k = 1; k <= c.w && p_idx == 0; ++k)
      if (p.v2.is_subset_of(neighbors_in(g, f.part(k), g.vertices()))) p_idx = k;
  const bool dominated = p_idx != 0 && p.v2.is_subset_of(neighbors_in(g, f.part(p_idx), g.vertices()));
  if (o.enforce_hypotheses && (!dominated || z1 < 0)) {
    const std::string why = z1 < 0 ? "z1, z2 undefined" : "needs V2 inside N(U_p)";
    out.push_back(skip(LemmaId::LEM_UT_III, why));
    out.push_back(skip(LemmaId::LEM_UT_IV, why));
    out.push_back(skip(LemmaId::LEM_UT_V, why));
    return out;
  }
  if (p_idx == 0 || z1 < 0) {
    const std::string why = "U_p or z1, z2 undefined";
    out.push_back(bad(LemmaId::LEM_UT_III, why, {}));
    out.push_back(bad(LemmaId::LEM_UT_IV, why, {}));
    out.push_back(bad(LemmaId::LEM_UT_V, why, {}));
    return out;
  }
  const VertexSet up = f.part(p_idx);
  const VertexSet nz2 = x3_neighbors(c, z2);
  const Vertex h_omega = nz2.first();

  // (iii)
  {
    std::optional<LemmaReport> r;
    for (Vertex y : up) {
      if (r) break;
      const VertexSet ny = x3_neighbors(c, y);
      if (ut.is_subset_of(g.neighbors(y)) && !ny.is_subset_of(nz2)) {
        r = bad(LemmaId::LEM_UT_III, "y complete to U'_t but N_X3(y) not inside N_X3(z2)", {y, (ny - nz2).first()});
        break;
      }
      for (Vertex a : rest2) {
        VertexSet others = p.x2;
        others.erase(a);
        if (others.is_subset_of(g.neighbors(y)) && !ny.empty()) {
          r = bad(LemmaId::LEM_UT_III, "y complete to X2 minus one vertex yet has X3 neighbors", {y, a, ny.first()});
          break;
        }
      }
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_UT_III));
  }

  // (iv)
  Vertex y1 = -1;
  {
    std::optional<LemmaReport> r;
    std::vector<Vertex> cands;
    for (Vertex y : up)
      if (rest2.is_subset_of(g.neighbors(y))) cands.push_back(y);
    if (cands.size() != 1) {
      r = bad(LemmaId::LEM_UT_IV, std::to_string(cands.size()) + " vertices of U_p are complete to X2 minus U'_t",
              cands.empty() ? up.to_vector() : cands);
    } else {
      y1 = cands.front();
      for (Vertex y : up) {
        if (y == y1) continue;
        const VertexSet n2 = g.neighbors(y) & p.x2;
        if (!n2.is_subset_of(ut)) {
          r = bad(LemmaId::LEM_UT_IV, "vertex of U_p other than y1 sees X2 outside U'_t", {y, (n2 - ut).first()});
          break;
        }
        if (n2.empty()) {
          r = bad(LemmaId::LEM_UT_IV, "vertex of U_p other than y1 has no neighbor in U'_t", {y});
          break;
        }
      }
      if (!r && x3_neighbors(c, y1).empty()) r = bad(LemmaId::LEM_UT_IV, "N_X3(y1) is empty", {y1});
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_UT_IV));
  }

  // (v), adjacency pattern as reconstructed from the proof's last case
  {
    const std::string note =
        "printed pattern is self-contradictory (z2y2 both in and out of E); checked: N_X3(y2) = N_X3(z1), "
        "N_X3(y1) = N_X3(y3) = N_X3(z2), y2z2, y3z1, y3h_ω in E, y2z1, y2h_ω not in E";
    std::optional<LemmaReport> r;
    if (up.count() > 3) {
      r = bad(LemmaId::LEM_UT_V, "|U_p| = " + std::to_string(up.count()), up.to_vector(), note);
    } else if (up.count() == 3) {
      if (y1 < 0) {
        r = bad(LemmaId::LEM_UT_V, "y1 undefined", up.to_vector(), note);
      } else {
        VertexSet others = up;
        others.erase(y1);
        Vertex y2 = others.first(), y3 = others.next(y2);
        if (x3_neighbors(c, y3) == x3_neighbors(c, z1)) std::swap(y2, y3);
        auto need = [&](bool cond, const std::string& what, std::vector<Vertex> ev) {
          if (!r && !cond) r = bad(LemmaId::LEM_UT_V, what, std::move(ev), note);
        };
        need(x3_neighbors(c, y2) == x3_neighbors(c, z1), "N_X3(y2) != N_X3(z1)", {y2, z1});
        need(x3_neighbors(c, y1) == nz2, "N_X3(y1) != N_X3(z2)", {y1, z2});
        need(x3_neighbors(c, y3) == nz2, "N_X3(y3) != N_X3(z2)", {y3, z2});
        need(g.adjacent(y2, z2), "y2z2 missing", {y2, z2});
        need(g.adjacent(y3, z1), "y3z1 missing", {y3, z1});
        need(g.adjacent(y3, h_omega), "y3h_ω missing", {y3, h_omega});
        need(!g.adjacent(y2, z1), "y2z1 present", {y2, z1});
        need(!g.adjacent(y2, h_omega), "y2h_ω present", {y2, h_omega});
      }
    }
    out.push_back(r ? *r : ok(LemmaId::LEM_UT_V, up.count() == 3 ? note : ""));
  }
  return out;
}

std::vector<LemmaReport> verify_all(const Graph& g, const TwoLevelPartition& p, const VerifyOptions& o) {
  std::vector<LemmaReport> out = check_prop1(g, p, o);
  auto append = [&out](std::vector<LemmaReport> more) { out.insert(out.end(), more.begin(), more.end()); };
  append(check_indep_subset_lemma(g, p, o));
  append(check_v2_structure(g, p, o));
  out.push_back(check_structural_theorem(g, p, o));
  append(check_ut_up_lemma(g, p, o));
  return out;
}

bool any_violation(const std::vector<LemmaReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const LemmaReport& r) { return r.status == LemmaStatus::violated; });
}

} // namespace chibound
