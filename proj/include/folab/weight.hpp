#pragma once

// Weighted young forests, weighted forests and the For_k filtration.

#include <optional>
#include <string>
#include <vector>

#include "folab/forest.hpp"

namespace folab {

/// ω_x : J_x -> Z≥0, indexed like the outputs.
using Weights = std::vector<int>;

struct WeightedYoungForest {
  YoungForest base;
  Weights weight;

  WeightedYoungForest(YoungForest x, Weights w) : base(std::move(x)), weight(std::move(w)) {
    if (weight.size() != base.outputs.size()) throw error("weights are not total on the outputs");
    for (int v : weight)
      if (v < 0) throw error("weights must be nonnegative");
  }
};

/// A bound k >= -1, or ω (no bound).
struct WeightBound {
  std::optional<int> k;

  static WeightBound omega() { return {}; }
  static WeightBound at_most(int k) {
    if (k < -1) throw error("weight bound must be at least -1");
    return {k};
  }
  bool admits(int w) const { return !k || w <= *k; }
  bool operator<=(const WeightBound& o) const { return !o.k || (k && *k <= *o.k); }
};

enum class FiltrationRule {
  all_roots,     // ω_x(j) <= k for every root
  multi_f_roots  // only roots with at least two inputs of the full-disc color
};

inline bool in_for_k(const YoungForest& x, const Weights& w, WeightBound bound,
                     FiltrationRule rule = FiltrationRule::all_roots, const std::string& f_color = "f") {
  if (w.size() != x.outputs.size()) throw error("weights are not total on the outputs");
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (rule == FiltrationRule::multi_f_roots) {
      std::size_t nf = 0;
      for (auto i : x.fiber(j)) nf += x.inputs.color(i) == f_color;
      if (nf < 2) continue;
    }
    if (!bound.admits(w[j])) return false;
  }
  return true;
}

inline bool in_for_k(const WeightedYoungForest& x, WeightBound bound, FiltrationRule rule = FiltrationRule::all_roots,
                     const std::string& f_color = "f") {
  return in_for_k(x.base, x.weight, bound, rule, f_color);
}

/// Σ_{i ∈ J_x(j)} ω_x(i) for every root j of f's target.
inline std::vector<long> source_weight_per_root(const Forest& f, const Weights& wx) {
  const auto rm = root_map(f);
  std::vector<long> s(f.target.outputs.size(), 0);
  for (std::size_t v = 0; v < wx.size(); ++v) s[rm.source_outputs[v]] += wx[v];
  return s;
}

/// ω_y(j) >= #E(f)(j) + Σ_{i ∈ J_x(j)} ω_x(i) for every j in J_y.
inline bool is_weighted_forest(const Forest& f, const Weights& wx, const Weights& wy) {
  require_valid(f, "is_weighted_forest");
  if (wx.size() != f.source.outputs.size() || wy.size() != f.target.outputs.size())
    throw error("is_weighted_forest: weights are not total");
  const auto e = internal_edges_per_root(f);
  const auto s = source_weight_per_root(f, wx);
  for (std::size_t j = 0; j < wy.size(); ++j)
    if (static_cast<long>(wy[j]) < static_cast<long>(e[j]) + s[j]) return false;
  return true;
}

struct WeightedComposite {
  bool preconditions = false;     // f and g are weighted forests
  bool certified = false;         // gf is weighted for (ω_x, ω_z)
  std::vector<long> edges;        // #E(gf)(j), counted directly
  std::vector<long> edge_formula; // #E(g)(j) + #E(f)(j) - #un(f)(j)
};

inline WeightedComposite weighted_compose(const Forest& g, const Forest& f, const Weights& wx, const Weights& wy,
                                          const Weights& wz) {
  WeightedComposite r;
  const auto b = edge_bookkeeping(g, f);
  for (std::size_t j = 0; j < b.composite.size(); ++j) {
    r.edges.push_back(static_cast<long>(b.composite[j]));
    r.edge_formula.push_back(static_cast<long>(b.outer[j] + b.inner[j]) - static_cast<long>(b.inner_unit[j]));
  }
  r.preconditions = is_weighted_forest(f, wx, wy) && is_weighted_forest(g, wy, wz);
  r.certified = r.preconditions && is_weighted_forest(compose(g, f), wx, wz);
  return r;
}

struct BoundaryViolation {
  std::size_t root;  // j in J_z
  std::string what;
};

/// For each j in J_z with #E(gf)(j) = k + 1, checks ω_x = 0 on J_x(j),
/// #un(f)(j) = 0 and #E(g)(j) >= 1. Returns the violations found.
inline std::vector<BoundaryViolation> boundary_analysis_k_plus_1(const Forest& g, const Forest& f, const Weights& wx,
                                                                 const Weights& wy, const Weights& wz, int k) {
  if (k < 0) throw error("boundary analysis: k must be nonnegative");
  if (!is_weighted_forest(f, wx, wy) || !is_weighted_forest(g, wy, wz))
    throw error("boundary analysis: f and g must be weighted forests");
  if (!in_for_k(f.target, wy, WeightBound::at_most(k)) || !in_for_k(g.target, wz, WeightBound::at_most(k + 1)))
    throw error("boundary analysis: requires weight(y) <= k and weight(z) <= k + 1");
  const auto b = edge_bookkeeping(g, f);
  const auto gf = compose(g, f);
  const auto rm = root_map(gf);
  std::vector<BoundaryViolation> out;
  for (std::size_t j = 0; j < b.composite.size(); ++j) {
    if (b.composite[j] != static_cast<std::size_t>(k) + 1) continue;
    for (std::size_t v = 0; v < wx.size(); ++v)
      if (rm.source_outputs[v] == j && wx[v] != 0) {
        out.push_back({j, "nonzero weight at " + f.source.outputs.id(v)});
        break;
      }
    if (b.inner_unit[j] != 0) out.push_back({j, "unit edge in f"});
    if (b.outer[j] == 0) out.push_back({j, "no internal edge in g"});
  }
  return out;
}

}  // namespace folab
