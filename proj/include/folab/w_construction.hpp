#pragma once

// Points of the W construction: (g, t, α) with g : y -> z, t : E(g) -> [0, ∞]
// and α an operad value over y, modulo (W_Σ(f) t, α) ~ (t, 𝒪(f) α).

#include <optional>
#include <string>
#include <vector>

#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/iso.hpp"
#include "folab/operad.hpp"
#include "folab/random.hpp"

namespace folab {

/// W_Σ(f) : W(g) -> W(gf). The label of an edge ε of gf is the sum of the labels
/// of the edges of g that chase down onto ε; an empty sum is 0.
inline Labels w_sigma(const Forest& g, const Forest& f, const Labels& t) {
  const auto gf = compose(g, f);
  Labels out;
  for (std::size_t v = 0; v < gf.on_source_outputs.size(); ++v)
    if (is_internal_edge(gf, v)) out[v] = Length(0.0);
  for (const auto& [u, len] : t) {
    const Slot up = g.on_source_outputs.at(u);
    if (up.part != Part::source_input) throw error("w_sigma: label on a non-edge of g");
    const auto landed = composite_chase(g, f, up, true);
    if (!landed || landed->part != Part::source_input) continue;
    for (std::size_t v = 0; v < gf.on_source_outputs.size(); ++v)
      if (gf.on_source_outputs[v] == *landed) out[v] += len;
  }
  return out;
}

/// W_∞ : W(g) -> W(hg). Edges of g keep their labels, new edges get ∞.
inline Labels w_infty(const Forest& h, const Forest& g, const Labels& t) {
  const auto hg = compose(h, g);
  Labels out;
  for (std::size_t v = 0; v < hg.on_source_outputs.size(); ++v) {
    if (!is_internal_edge(hg, v)) continue;
    auto it = t.find(v);
    out[v] = is_internal_edge(g, v) ? (it == t.end() ? throw error("w_infty: labeling is not total") : it->second)
                                    : kInfinity;
  }
  return out;
}

inline bool labels_fit(const Forest& g, const Labels& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.on_source_outputs.size(); ++v)
    if (is_internal_edge(g, v)) {
      if (!t.count(v)) return false;
      ++n;
    }
  return n == t.size();
}

template <Operad O>
struct WPoint {
  Forest shape;  // g : y -> z
  Labels labels;
  OperadValue<O> decoration;  // one value per vertex of y
};

template <Operad O>
void require_valid(const WPoint<O>& p) {
  require_valid(p.shape, "W point");
  if (!labels_fit(p.shape, p.labels)) throw error("W point: labels are not exactly the internal edges");
  if (p.decoration.size() != p.shape.source.outputs.size()) throw error("W point: decoration does not fit the shape");
}

template <Operad O>
WPoint<O> make_point(Forest shape, Labels labels, OperadValue<O> decoration) {
  WPoint<O> p{std::move(shape), std::move(labels), std::move(decoration)};
  require_valid(p);
  return p;
}

enum class ReductionOrder { contractions_first, random };

namespace detail {

template <Operad O>
WPoint<O> contract_zero_edge(const O& op, const WPoint<O>& p, std::size_t u) {
  const auto c = contract_edge(p.shape, u);
  Labels t;
  for (const auto& [v, len] : p.labels)
    if (v != u) t[*c.output_map[v]] = len;
  return {c.rest, std::move(t), op.act(c.collapse, p.decoration)};
}

template <Operad O>
WPoint<O> delete_identity_vertex(const WPoint<O>& p, std::size_t v) {
  const auto d = delete_unary_vertex(p.shape, v);
  OperadValue<O> a;
  for (std::size_t u = 0; u < p.decoration.size(); ++u)
    if (u != v) a.push_back(p.decoration[u]);
  return {d.composite, w_sigma(p.shape, d.insertion, p.labels), std::move(a)};
}

}  // namespace detail

/// Contracts 0-labeled edges and deletes unary identity vertices until neither applies.
template <Operad O>
WPoint<O> reduce(const O& op, WPoint<O> p, ReductionOrder order = ReductionOrder::contractions_first,
                 Rng* rng = nullptr) {
  require_valid(p);
  for (;;) {
    std::vector<std::size_t> zeros, units;
    for (const auto& [u, len] : p.labels)
      if (len.is_zero()) zeros.push_back(u);
    for (std::size_t v = 0; v < p.decoration.size(); ++v)
      if (is_unary_same_color(p.shape.source, v) && op.is_identity(p.shape.source, v, p.decoration[v]))
        units.push_back(v);
    if (zeros.empty() && units.empty()) return p;
    if (order == ReductionOrder::random && rng) {
      const auto pick = uniform(*rng, 0, zeros.size() + units.size() - 1);
      p = pick < zeros.size() ? detail::contract_zero_edge(op, p, zeros[pick])
                              : detail::delete_identity_vertex(p, units[pick - zeros.size()]);
    } else {
      p = zeros.empty() ? detail::delete_identity_vertex(p, units.front())
                        : detail::contract_zero_edge(op, p, zeros.front());
    }
  }
}

/// Equality in the coend: reduce both and look for an isomorphism over the
/// common target matching labels exactly and decorations up to `tol`.
template <Operad O>
bool w_equal(const O& op, const WPoint<O>& p, const WPoint<O>& q, double tol) {
  if (!(p.shape.target == q.shape.target)) return false;
  const auto a = reduce(op, p);
  const auto b = reduce(op, q);
  if (a.labels.size() != b.labels.size()) return false;
  auto accept = [&](const YoungIso& s) {
    for (const auto& [u, len] : a.labels) {
      auto it = b.labels.find(s.outputs[u]);
      if (it == b.labels.end() || !(it->second == len)) return false;
    }
    const auto move = relabeling_forest(b.shape.source, a.shape.source, inverse(s));
    return values_equal(op, op.act(move, a.decoration), b.decoration, tol);
  };
  return !find_isos_over(a.shape, b.shape, accept, true).empty();
}

/// The operad structure of W𝒪 along h : z -> w.
template <Operad O>
WPoint<O> w_act(const Forest& h, const WPoint<O>& p) {
  return {compose(h, p.shape), w_infty(h, p.shape, p.labels), p.decoration};
}

/// ε(g, t, α) = 𝒪(g)(α).
template <Operad O>
OperadValue<O> counit(const O& op, const WPoint<O>& p) {
  return op.act(p.shape, p.decoration);
}

/// Membership in (W × 𝒪)^+_k: at most k edges, or a degenerate label or vertex.
template <Operad O>
bool in_boundary_plus(const O& op, const WPoint<O>& p, int k) {
  if (static_cast<long>(internal_edge_count(p.shape)) <= k) return true;
  for (const auto& [u, len] : p.labels)
    if (len.is_zero() || len.is_infinite()) return true;
  for (std::size_t v = 0; v < p.decoration.size(); ++v)
    if (is_unary_same_color(p.shape.source, v) && op.is_identity(p.shape.source, v, p.decoration[v])) return true;
  return false;
}

/// Filtration predicate of W_k: every root of the target carries at most k edges.
template <Operad O>
bool in_w_filtration(const WPoint<O>& p, WeightBound k) {
  for (auto e : internal_edges_per_root(p.shape))
    if (!k.admits(static_cast<int>(e))) return false;
  return true;
}

}  // namespace folab
