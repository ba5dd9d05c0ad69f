#pragma once

// Seeded generators for forests, composable chains, labelings and weights.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/weight.hpp"

namespace folab {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct GenParams {
  std::size_t max_elements = 8;  // per colored set
  std::size_t max_colors = 3;
  std::size_t max_new_edges = 2;  // internal edges added per generated forest
  double unit_probability = 0.35;
};

inline ColorSet random_color_set(Rng& rng, const GenParams& p) {
  static const char* names[] = {"a", "b", "c", "d", "e"};
  std::vector<std::string> k;
  const auto n = uniform(rng, 1, std::min<std::size_t>(p.max_colors, 5));
  for (std::size_t i = 0; i < n; ++i) k.emplace_back(names[i]);
  return ColorSet(std::move(k));
}

inline const std::string& random_color(Rng& rng, const ColorSet& k) { return k.names()[uniform(rng, 0, k.size() - 1)]; }

inline YoungForest random_young(Rng& rng, const ColorSet& k, std::size_t max_inputs, std::size_t max_outputs) {
  const auto nj = uniform(rng, 1, std::max<std::size_t>(1, max_outputs));
  const auto ni = uniform(rng, 0, max_inputs);
  std::vector<Element> in, out;
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < nj; ++j) out.push_back({"r" + std::to_string(j), random_color(rng, k)});
  for (std::size_t i = 0; i < ni; ++i) {
    in.push_back({"i" + std::to_string(i), random_color(rng, k)});
    s.push_back(uniform(rng, 0, nj - 1));
  }
  return YoungForest(ColoredSet(k, std::move(in)), ColoredSet(k, std::move(out)), std::move(s));
}

/// A random forest f : x -> y for the given y. Every root gets a planted tree
/// over its leaves, or a unit edge when that is possible and a coin says so.
inline Forest random_forest_into(Rng& rng, const YoungForest& y, const GenParams& p) {
  const auto& k = y.colors();
  std::vector<Element> verts, slots;
  std::vector<std::size_t> slot_owner;
  std::vector<Slot> on_in(y.inputs.size()), on_vert;

  std::size_t nonunit_roots = 0;
  std::vector<bool> unit(y.outputs.size(), false);
  for (std::size_t j = 0; j < y.outputs.size(); ++j) {
    const auto fib = y.fiber(j);
    if (fib.size() == 1 && y.inputs.color(fib[0]) == y.outputs.color(j) && coin(rng, p.unit_probability))
      unit[j] = true;
    else
      ++nonunit_roots;
  }
  const std::size_t leaves = y.inputs.size();
  std::size_t room = 0;
  if (leaves < p.max_elements && nonunit_roots < p.max_elements)
    room = std::min(p.max_elements - leaves, p.max_elements - nonunit_roots);
  std::size_t budget = uniform(rng, 0, std::min(room, p.max_new_edges));

  auto new_vertex = [&](const std::string& color, Slot attach) {
    verts.push_back({"v" + std::to_string(verts.size()), color});
    on_vert.push_back(attach);
    return verts.size() - 1;
  };
  auto new_slot = [&](std::size_t owner, const std::string& color) {
    slots.push_back({"p" + std::to_string(slots.size()), color});
    slot_owner.push_back(owner);
    return slots.size() - 1;
  };

  // builds a vertex of `color` attached to `attach` with the leaves `group` somewhere above it
  auto build = [&](auto&& self, const std::string& color, Slot attach, std::vector<std::size_t> group) -> void {
    const auto v = new_vertex(color, attach);
    std::shuffle(group.begin(), group.end(), rng);
    while (budget > 0 && coin(rng, 0.5)) {
      --budget;
      const auto take = uniform(rng, 0, group.size());
      std::vector<std::size_t> sub(group.end() - static_cast<long>(take), group.end());
      group.resize(group.size() - take);
      const auto& c = random_color(rng, k);
      const auto s = new_slot(v, c);
      self(self, c, source_input(s), std::move(sub));
    }
    for (auto i : group) on_in[i] = source_input(new_slot(v, y.inputs.color(i)));
  };

  for (std::size_t j = 0; j < y.outputs.size(); ++j) {
    const auto fib = y.fiber(j);
    if (unit[j]) on_in[fib[0]] = target_output(j);
    else build(build, y.outputs.color(j), target_output(j), fib);
  }

  YoungForest x(ColoredSet(k, std::move(slots)), ColoredSet(k, std::move(verts)), std::move(slot_owner));
  Forest f{std::move(x), y, std::move(on_in), std::move(on_vert)};
  require_valid(f, "random_forest_into");
  return f;
}

/// Composable chain f_1 : x_1 -> x_0, f_2 : x_2 -> x_1, ... (index 0 is the outermost).
inline std::vector<Forest> random_chain(Rng& rng, std::size_t length, const GenParams& p) {
  const auto k = random_color_set(rng, p);
  auto top = random_young(rng, k, std::min<std::size_t>(3, p.max_elements), std::min<std::size_t>(3, p.max_elements));
  std::vector<Forest> chain;
  for (std::size_t n = 0; n < length; ++n) {
    chain.push_back(random_forest_into(rng, n == 0 ? top : chain.back().source, p));
  }
  return chain;
}

/// Edge labels on a dyadic grid together with 0 and ∞, so sums are exact.
inline Length random_length(Rng& rng) {
  const auto r = uniform(rng, 0, 19);
  if (r < 3) return Length(0.0);
  if (r < 6) return kInfinity;
  return Length(static_cast<double>(uniform(rng, 1, 32)) / 4.0);
}

inline Labels random_labels(Rng& rng, const Forest& g) {
  Labels t;
  for (std::size_t v = 0; v < g.on_source_outputs.size(); ++v)
    if (is_internal_edge(g, v)) t[v] = random_length(rng);
  return t;
}

/// Weights making f : x -> y weighted: ω_x random, ω_y tight up to a small slack.
inline Weights random_source_weights(Rng& rng, const YoungForest& x, int max_weight) {
  Weights w;
  for (std::size_t j = 0; j < x.outputs.size(); ++j)
    w.push_back(coin(rng, 0.5) ? 0 : static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(max_weight))));
  return w;
}

inline Weights tight_target_weights(Rng& rng, const Forest& f, const Weights& wx, int max_slack) {
  const auto e = internal_edges_per_root(f);
  const auto s = source_weight_per_root(f, wx);
  Weights w;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const int slack = coin(rng, 0.6) ? 0 : static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(max_slack)));
    w.push_back(static_cast<int>(e[j]) + static_cast<int>(s[j]) + slack);
  }
  return w;
}

}  // namespace folab
