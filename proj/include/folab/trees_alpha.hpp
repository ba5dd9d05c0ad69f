#pragma once

// Trees over a C_h tree T with one collapsed disc grafted in: Γ_k, the unary
// insertions ν(i), the objects S_{i,k} and S_{j,k}, their morphisms, the
// labelings W_α and the coordinate map r(s_o, s_i).

#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/random.hpp"
#include "folab/swiss_cheese.hpp"

namespace folab {

inline ColorSet dot_colors() { return ColorSet({kFullDot, kHalfDot}); }

/// Γ_0 (k = 0): the unit tree at f•. Γ_1 (k = 1): one h•-vertex over one f• input.
inline Forest gamma_tree(int k) {
  const auto c = dot_colors();
  if (k == 0) {
    auto w = young_tree(c, {{"a", kFullDot}}, {"rho", kFullDot});
    return Forest{empty_young(c), w, {target_output(0)}, {}};
  }
  if (k != 1) throw error("gamma_tree: k must be 0 or 1");
  auto w = young_tree(c, {{"a", kFullDot}}, {"rho", kHalfDot});
  auto z = young_tree(c, {{"b", kFullDot}}, {"v", kHalfDot});
  return Forest{z, w, {source_input(0)}, {target_output(0)}};
}

/// Whether T : z -> (n,m) is a tree whose vertices are all h-colored.
inline bool is_ch_tree(const Forest& t) {
  if (t.target.outputs.size() != 1 || t.target.outputs.color(0) != kHalf) return false;
  for (std::size_t v = 0; v < t.source.outputs.size(); ++v)
    if (t.source.outputs.color(v) != kHalf) return false;
  return validate_forest(t).defect == ForestDefect::none;
}

struct UnaryInsertion {
  Forest tree;  // T(i) : z(i) -> (n,m)
  Forest nu;    // ν(i) : z -> z(i)
  std::size_t vertex;  // i_v in J_{z(i)}
};

/// Inserts the unary vertex i_v along the h-colored edge i ∈ I_z, or along the root edge when i is empty.
inline UnaryInsertion insert_unary(const Forest& t, std::optional<std::size_t> i) {
  if (!is_ch_tree(t)) throw error("insert_unary: T is not an h-colored tree");
  const auto& z = t.source;
  if (i && (*i >= z.inputs.size() || z.inputs.color(*i) != kHalf)) throw error("insert_unary: edge is not h-colored");
  const std::string base = i ? z.inputs.id(*i) : "rt";
  auto in = z.inputs.elements();
  auto out = z.outputs.elements();
  auto s = z.structure;
  const std::size_t slot = in.size(), iv = out.size();
  in.push_back({base + "'", kHalf});
  out.push_back({base + "_v", kHalf});
  s.push_back(iv);
  YoungForest zi(ColoredSet(z.colors(), std::move(in)), ColoredSet(z.colors(), std::move(out)), std::move(s));

  const Slot cut = i ? source_input(*i) : target_output(0);
  Forest ti{zi, t.target, t.on_target_inputs, t.on_source_outputs};
  for (auto& x : ti.on_target_inputs)
    if (x == cut) x = source_input(slot);
  for (auto& x : ti.on_source_outputs)
    if (x == cut) x = source_input(slot);
  ti.on_source_outputs.push_back(cut);

  Forest nu{z, zi, {}, {}};
  for (std::size_t p = 0; p < z.inputs.size(); ++p) nu.on_target_inputs.push_back(source_input(p));
  nu.on_target_inputs.push_back(target_output(iv));
  for (std::size_t v = 0; v < z.outputs.size(); ++v) nu.on_source_outputs.push_back(target_output(v));
  require_valid(ti, "insert_unary");
  require_valid(nu, "insert_unary");
  return {std::move(ti), std::move(nu), iv};
}

/// An object of Trees_α: S over (1,0|n,m) with ν : z -> pS, and the roles of its edges.
struct TreesAlphaObject {
  std::string name;
  bool at_edge = false;
  std::optional<std::size_t> edge;  // i ∈ (I_z)_h, empty for rt; only when at_edge
  std::size_t vertex = 0;           // j ∈ J_z; only when !at_edge
  int k = 0;
  Forest S;
  Forest nu;
  std::optional<std::size_t> bullet_edge;  // ε•
  std::optional<std::size_t> in_edge;      // i_in
  std::optional<std::size_t> out_edge;     // i_out

  /// E_α(S), as lower vertices.
  std::set<std::size_t> alpha_edges() const {
    std::set<std::size_t> e;
    for (auto x : {bullet_edge, in_edge, out_edge})
      if (x) e.insert(*x);
    return e;
  }
};

namespace detail {

inline Forest nu_into_projection(const YoungForest& z, const Forest& nu, const Forest& s) {
  Forest out{recolor_set(z, sc_colors()), project_p(s.source).forest, nu.on_target_inputs, nu.on_source_outputs};
  require_valid(out, "trees_alpha: ν");
  return out;
}

inline std::optional<std::size_t> edge_at(const Forest& s, std::size_t v) {
  if (v < s.on_source_outputs.size() && is_internal_edge(s, v)) return v;
  return std::nullopt;
}

}  // namespace detail

/// S_{i,k} = T(i) ∨_{i_v} Γ_k.
inline TreesAlphaObject build_s_edge(const Forest& t, std::optional<std::size_t> i, int k) {
  auto ins = insert_unary(t, i);
  TreesAlphaObject o;
  o.at_edge = true;
  o.edge = i;
  o.k = k;
  o.name = "S(" + (i ? t.source.inputs.id(*i) : std::string("rt")) + "," + std::to_string(k) + ")";
  o.S = wedge(ins.tree, gamma_tree(k), {ins.vertex});
  o.nu = detail::nu_into_projection(t.source, ins.nu, o.S);
  const auto nz = ins.tree.source.outputs.size();
  if (k == 1) o.bullet_edge = nz;
  o.out_edge = detail::edge_at(o.S, ins.vertex);
  const auto slot = ins.tree.source.inputs.size() - 1;
  for (std::size_t u = 0; u < nz; ++u)
    if (ins.tree.on_source_outputs[u] == source_input(slot)) o.in_edge = u;
  return o;
}

/// S_{j,k} = T ∨_j Γ_k.
inline TreesAlphaObject build_s_vertex(const Forest& t, std::size_t j, int k) {
  if (!is_ch_tree(t)) throw error("build_s_vertex: T is not an h-colored tree");
  if (j >= t.source.outputs.size()) throw error("build_s_vertex: not a vertex");
  TreesAlphaObject o;
  o.vertex = j;
  o.k = k;
  o.name = "S(" + t.source.outputs.id(j) + "," + std::to_string(k) + ")";
  o.S = wedge(t, gamma_tree(k), {j});
  o.nu = detail::nu_into_projection(t.source, identity_forest(t.source), o.S);
  if (k == 1) o.bullet_edge = t.source.outputs.size();
  return o;
}

/// All objects S_{i,k}, i ∈ (I_z)_h ⊔ {rt}, and S_{j,k}, j ∈ J_z.
inline std::vector<TreesAlphaObject> trees_alpha_objects(const Forest& t) {
  std::vector<TreesAlphaObject> out;
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < t.source.inputs.size(); ++i)
      if (t.source.inputs.color(i) == kHalf) out.push_back(build_s_edge(t, i, k));
    out.push_back(build_s_edge(t, std::nullopt, k));
    for (std::size_t j = 0; j < t.source.outputs.size(); ++j) out.push_back(build_s_vertex(t, j, k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// morphisms in the over-category

/// Every forest φ : x -> x2 with s2 ∘ φ = s, for s : x -> Y and s2 : x2 -> Y.
inline std::vector<Forest> find_factorizations(const Forest& s, const Forest& s2) {
  if (!(s.target == s2.target)) throw error("find_factorizations: different targets");
  const auto& x = s.source;
  const auto& x2 = s2.source;
  const std::size_t ni = x2.inputs.size(), nj = x.outputs.size();
  std::vector<std::optional<Slot>> phi_in(ni), phi_out(nj);
  std::set<std::pair<int, std::size_t>> used;
  std::vector<Forest> found;
  auto key = [](Slot t) { return std::pair<int, std::size_t>{static_cast<int>(t.part), t.index}; };

  enum class Chase { ok, unknown, bad };
  std::size_t blocker = 0;  // slot of x2 an unknown chase waits on
  auto follow = [&](Slot cur, const Slot& want) {
    for (std::size_t step = 0; step <= ni + 1; ++step) {
      if (cur.part == Part::target_output) return cur == want ? Chase::ok : Chase::bad;
      if (!phi_in[cur.index]) {
        blocker = cur.index;
        return Chase::unknown;
      }
      const Slot ph = *phi_in[cur.index];
      if (ph.part == Part::source_input) return ph == want ? Chase::ok : Chase::bad;
      cur = s2.on_source_outputs[ph.index];
    }
    return Chase::bad;
  };
  // the first blocked chase, as (is_vertex, index); nullopt when all chases are complete
  std::function<void()> search = [&]() {
    std::optional<std::pair<bool, std::size_t>> need;
    for (std::size_t a = 0; a < s.target.inputs.size() && !need; ++a) {
      auto r = follow(s2.on_target_inputs[a], s.on_target_inputs[a]);
      if (r == Chase::bad) return;
      if (r == Chase::unknown) need = {false, blocker};
    }
    for (std::size_t v = 0; v < nj && !need; ++v) {
      if (!phi_out[v]) {
        need = {true, v};
        break;
      }
      const Slot ph = *phi_out[v];
      auto r = ph.part == Part::source_input ? (ph == s.on_source_outputs[v] ? Chase::ok : Chase::bad)
                                             : follow(s2.on_source_outputs[ph.index], s.on_source_outputs[v]);
      if (r == Chase::bad) return;
      if (r == Chase::unknown) need = {false, blocker};
    }
    if (!need)
      for (std::size_t p = 0; p < ni && !need; ++p)
        if (!phi_in[p]) need = {false, p};
    if (!need) {
      Forest f{x, x2, {}, {}};
      for (auto& e : phi_in) f.on_target_inputs.push_back(*e);
      for (auto& e : phi_out) f.on_source_outputs.push_back(*e);
      if (validate_forest(f).defect == ForestDefect::none && compose(s2, f) == s) found.push_back(std::move(f));
      return;
    }
    const auto [is_vertex, idx] = *need;
    const auto& color = is_vertex ? x.outputs.color(idx) : x2.inputs.color(idx);
    std::vector<Slot> cands;
    if (is_vertex) {
      for (std::size_t w = 0; w < x2.outputs.size(); ++w)
        if (x2.outputs.color(w) == color) cands.push_back(target_output(w));
    } else if (is_unary_same_color(x2, x2.structure[idx])) {
      cands.push_back(target_output(x2.structure[idx]));
    }
    for (std::size_t q = 0; q < x.inputs.size(); ++q)
      if (x.inputs.color(q) == color) cands.push_back(source_input(q));
    auto& cell = is_vertex ? phi_out[idx] : phi_in[idx];
    for (const auto& c : cands) {
      if (used.count(key(c))) continue;
      used.insert(key(c));
      cell = c;
      search();
      cell.reset();
      used.erase(key(c));
    }
  };
  search();
  return found;
}

/// Morphisms a -> b of Trees_α: factorizations compatible with ν.
inline std::vector<Forest> trees_alpha_morphisms(const TreesAlphaObject& a, const TreesAlphaObject& b) {
  std::vector<Forest> out;
  for (auto& phi : find_factorizations(a.S, b.S))
    if (compose(project_p(phi), a.nu) == b.nu) out.push_back(std::move(phi));
  return out;
}

/// The generating morphisms S_{ℓ,1} -> S_{ℓ,0}, S_{i,k} -> S_{T⁻¹(i),k}, S_{i,k} -> S_{z(i),k},
/// closed under identities and composition, as a reachability matrix.
inline std::vector<std::vector<bool>> expected_trees_alpha_morphisms(const Forest& t,
                                                                     const std::vector<TreesAlphaObject>& objs) {
  const auto n = objs.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  auto same_place = [](const TreesAlphaObject& a, const TreesAlphaObject& b) {
    return a.at_edge == b.at_edge && (a.at_edge ? a.edge == b.edge : a.vertex == b.vertex);
  };
  for (std::size_t a = 0; a < n; ++a) {
    r[a][a] = true;
    for (std::size_t b = 0; b < n; ++b) {
      const auto &A = objs[a], &B = objs[b];
      if (same_place(A, B) && A.k == 1 && B.k == 0) r[a][b] = true;
      if (!A.at_edge || B.at_edge || A.k != B.k) continue;
      const Slot cut = A.edge ? source_input(*A.edge) : target_output(0);
      if (A.edge && t.source.structure[*A.edge] == B.vertex) r[a][b] = true;
      if (t.on_source_outputs[B.vertex] == cut) r[a][b] = true;
    }
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r[a][m] && r[m][b]) r[a][b] = true;
  return r;
}

// ---------------------------------------------------------------------------
// labelings and the coordinate map

enum class WAlphaVariant { plain, one };

/// Membership of s : E_α(S) -> [0,∞] in W_α(S), or in W_{α,1}(S) for `one`.
inline bool w_alpha_membership(const TreesAlphaObject& o, const Labels& s, Length t_alpha, WAlphaVariant variant) {
  std::set<std::size_t> dom;
  for (const auto& [e, len] : s) dom.insert(e);
  if (dom != o.alpha_edges()) throw error("w_alpha_membership: labeling domain is not E_α(S)");
  if (o.in_edge && o.out_edge && !(s.at(*o.in_edge) + s.at(*o.out_edge) == t_alpha)) return false;
  if (variant == WAlphaVariant::plain) return true;
  for (const auto& [e, len] : s)
    if (len.is_infinite()) return true;
  return false;
}

/// r(s_o, s_i) = (1 - e^{-s_o}) / (1 - e^{-s_i}), with e^{-∞} = 0.
inline Length r_map(Length s_o, Length s_i) {
  if (s_o.is_zero() && s_i.is_zero()) throw error("r_map: s_o + s_i must be positive");
  if (s_i.is_zero()) return kInfinity;
  auto one_minus_exp = [](Length s) { return s.is_infinite() ? 1.0 : -std::expm1(-s.value()); };
  return Length(one_minus_exp(s_o) / one_minus_exp(s_i));
}

/// A random C_h tree T : z -> (n,m) with 1..max_vertices vertices.
inline Forest random_ch_tree(Rng& rng, std::size_t max_vertices) {
  const auto k = sc_colors();
  const auto nv = uniform(rng, 1, max_vertices);
  std::vector<Element> verts, slots, leaves;
  std::vector<std::size_t> owner;
  std::vector<Slot> on_vert, on_leaf;
  for (std::size_t v = 0; v < nv; ++v) {
    verts.push_back({"v" + std::to_string(v), kHalf});
    if (v == 0) {
      on_vert.push_back(target_output(0));
      continue;
    }
    slots.push_back({"e" + std::to_string(v), kHalf});
    owner.push_back(uniform(rng, 0, v - 1));
    on_vert.push_back(source_input(slots.size() - 1));
  }
  const auto n = uniform(rng, 0, 2), m = uniform(rng, 0, 2);
  for (std::size_t l = 0; l < n + m; ++l) {
    const auto& c = l < n ? kFull : kHalf;
    leaves.push_back({(l < n ? "f" + std::to_string(l + 1) : "h" + std::to_string(l - n + 1)), c});
    slots.push_back({"s" + std::to_string(l + 1), c});
    owner.push_back(uniform(rng, 0, nv - 1));
    on_leaf.push_back(source_input(slots.size() - 1));
  }
  YoungForest z(ColoredSet(k, std::move(slots)), ColoredSet(k, std::move(verts)), std::move(owner));
  auto y = young_tree(k, std::move(leaves), {"rt", kHalf});
  Forest t{std::move(z), std::move(y), std::move(on_leaf), std::move(on_vert)};
  require_valid(t, "random_ch_tree");
  return t;
}

}  // namespace folab
