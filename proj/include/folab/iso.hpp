#pragma once

// Isomorphism search for young forests, forests, and forests over a fixed target.

#include <functional>
#include <optional>
#include <vector>

#include "folab/forest.hpp"

namespace folab {

/// A pair of color-preserving bijections (I_x -> I_x2, J_x -> J_x2) commuting with the structure maps.
struct YoungIso {
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;
  friend bool operator==(const YoungIso&, const YoungIso&) = default;
};

inline YoungIso inverse(const YoungIso& s) {
  YoungIso r{std::vector<std::size_t>(s.inputs.size()), std::vector<std::size_t>(s.outputs.size())};
  for (std::size_t i = 0; i < s.inputs.size(); ++i) r.inputs[s.inputs[i]] = i;
  for (std::size_t j = 0; j < s.outputs.size(); ++j) r.outputs[s.outputs[j]] = j;
  return r;
}

inline YoungIso identity_iso(const YoungForest& x) {
  YoungIso s;
  for (std::size_t i = 0; i < x.inputs.size(); ++i) s.inputs.push_back(i);
  for (std::size_t j = 0; j < x.outputs.size(); ++j) s.outputs.push_back(j);
  return s;
}

inline bool is_young_iso(const YoungForest& a, const YoungForest& b, const YoungIso& s) {
  if (s.inputs.size() != a.inputs.size() || s.outputs.size() != a.outputs.size()) return false;
  if (a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size()) return false;
  ColoredMap mi(a.inputs, b.inputs, s.inputs), mo(a.outputs, b.outputs, s.outputs);
  if (!is_colored_iso(mi) || !is_colored_iso(mo)) return false;
  for (std::size_t i = 0; i < s.inputs.size(); ++i)
    if (b.structure[s.inputs[i]] != s.outputs[a.structure[i]]) return false;
  return true;
}

namespace detail {

/// Calls `emit` for every color-preserving bijection from `from` to `to`
/// (given as parallel vectors of images). Stops early when `emit` returns false.
template <class ColorA, class ColorB, class Emit>
bool for_each_color_bijection(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                              ColorA color_from, ColorB color_to, Emit&& emit) {
  if (from.size() != to.size()) return true;
  std::vector<std::size_t> image(from.size());
  std::vector<bool> used(to.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == from.size()) return emit(image);
    for (std::size_t t = 0; t < to.size(); ++t) {
      if (used[t] || color_from(from[k]) != color_to(to[t])) continue;
      used[t] = true;
      image[k] = to[t];
      if (!rec(k + 1)) return false;
      used[t] = false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace detail

/// All isomorphisms a -> b of young forests. `limit` caps the number returned (0 = no cap).
inline std::vector<YoungIso> find_isos(const YoungForest& a, const YoungForest& b, std::size_t limit = 0) {
  std::vector<YoungIso> out;
  if (!(a.colors() == b.colors()) || a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size())
    return out;
  const std::size_t nj = a.outputs.size();
  std::vector<std::vector<std::size_t>> fa(nj), fb(nj);
  for (std::size_t j = 0; j < nj; ++j) {
    fa[j] = a.fiber(j);
    fb[j] = b.fiber(j);
  }
  YoungIso cur{std::vector<std::size_t>(a.inputs.size()), std::vector<std::size_t>(nj)};
  std::vector<bool> used(nj, false);
  auto ca = [&](std::size_t i) -> const std::string& { return a.inputs.color(i); };
  auto cb = [&](std::size_t i) -> const std::string& { return b.inputs.color(i); };

  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == nj) {
      out.push_back(cur);
      return limit == 0 || out.size() < limit;
    }
    for (std::size_t j2 = 0; j2 < nj; ++j2) {
      if (used[j2] || a.outputs.color(j) != b.outputs.color(j2) || fa[j].size() != fb[j2].size()) continue;
      used[j2] = true;
      cur.outputs[j] = j2;
      bool go = detail::for_each_color_bijection(fa[j], fb[j2], ca, cb, [&](const std::vector<std::size_t>& img) {
        for (std::size_t k = 0; k < img.size(); ++k) cur.inputs[fa[j][k]] = img[k];
        return rec(j + 1);
      });
      used[j2] = false;
      if (!go) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

/// The forest x2 -> x with no internal vertices that relabels along s : x -> x2.
/// Composing with it transports structure from x to x2.
inline Forest relabeling_forest(const YoungForest& x, const YoungForest& x2, const YoungIso& s) {
  if (!is_young_iso(x, x2, s)) throw error("relabeling_forest: not an isomorphism");
  const auto inv = inverse(s);
  Forest f{x2, x, {}, {}};
  for (std::size_t i = 0; i < x.inputs.size(); ++i) f.on_target_inputs.push_back(source_input(s.inputs[i]));
  for (std::size_t j = 0; j < x2.outputs.size(); ++j) f.on_source_outputs.push_back(target_output(inv.outputs[j]));
  return f;
}

/// Conjugates f : x -> y along isos sx : x -> x2 and sy : y -> y2.
inline Forest transport(const Forest& f, const YoungIso& sx, const YoungIso& sy, const YoungForest& x2,
                        const YoungForest& y2) {
  Forest out{x2, y2, {}, {}};
  const auto ix = inverse(sx);
  auto move = [&](Slot s) {
    if (s.part == Part::target_output) return target_output(sy.outputs[s.index]);
    return source_input(sx.inputs[s.index]);
  };
  const auto iy = inverse(sy);
  for (std::size_t i = 0; i < y2.inputs.size(); ++i) out.on_target_inputs.push_back(move(f.on_target_inputs[iy.inputs[i]]));
  for (std::size_t j = 0; j < x2.outputs.size(); ++j)
    out.on_source_outputs.push_back(move(f.on_source_outputs[ix.outputs[j]]));
  return out;
}

struct ForestIso {
  YoungIso source;
  YoungIso target;
  friend bool operator==(const ForestIso&, const ForestIso&) = default;
};

/// All pairs (sx, sy) with f2 ∘ sx = sy ∘ f slotwise.
inline std::vector<ForestIso> find_isos(const Forest& f, const Forest& f2, std::size_t limit = 0) {
  std::vector<ForestIso> out;
  const auto ty = find_isos(f.target, f2.target);
  if (ty.empty()) return out;
  const auto tx = find_isos(f.source, f2.source);
  for (const auto& sy : ty)
    for (const auto& sx : tx) {
      auto move = [&](Slot s) {
        if (s.part == Part::target_output) return target_output(sy.outputs[s.index]);
        return source_input(sx.inputs[s.index]);
      };
      bool ok = true;
      for (std::size_t i = 0; ok && i < f.on_target_inputs.size(); ++i)
        ok = f2.on_target_inputs[sy.inputs[i]] == move(f.on_target_inputs[i]);
      for (std::size_t j = 0; ok && j < f.on_source_outputs.size(); ++j)
        ok = f2.on_source_outputs[sx.outputs[j]] == move(f.on_source_outputs[j]);
      if (ok) {
        out.push_back({sx, sy});
        if (limit && out.size() >= limit) return out;
      }
    }
  return out;
}

/// Isomorphisms s : y -> y2 with g2 ∘ relabel(s) = g, for g : y -> z and g2 : y2 -> z
/// (the identity on z). Found top-down from the roots of z. `accept` may reject a
/// candidate; enumeration stops at the first accepted iso when `first_only`.
inline std::vector<YoungIso> find_isos_over(const Forest& g, const Forest& g2,
                                            const std::function<bool(const YoungIso&)>& accept = {},
                                            bool first_only = false) {
  std::vector<YoungIso> out;
  if (!(g.target == g2.target)) return out;
  const auto& y = g.source;
  const auto& y2 = g2.source;
  if (!(y.colors() == y2.colors()) || y.inputs.size() != y2.inputs.size() || y.outputs.size() != y2.outputs.size())
    return out;

  // preimages of J_z ⊔ I_y under g, as slots in I_z ⊔ J_y
  auto preimages = [](const Forest& h) {
    std::vector<Slot> roots(h.target.outputs.size()), slots(h.source.inputs.size());
    for (std::size_t a = 0; a < h.on_target_inputs.size(); ++a) {
      auto s = h.on_target_inputs[a];
      (s.part == Part::target_output ? roots[s.index] : slots[s.index]) = target_input(a);
    }
    for (std::size_t v = 0; v < h.on_source_outputs.size(); ++v) {
      auto s = h.on_source_outputs[v];
      (s.part == Part::target_output ? roots[s.index] : slots[s.index]) = source_output(v);
    }
    return std::pair{roots, slots};
  };
  const auto [roots1, below1] = preimages(g);
  const auto [roots2, below2] = preimages(g2);

  YoungIso cur{std::vector<std::size_t>(y.inputs.size()), std::vector<std::size_t>(y.outputs.size())};
  std::vector<std::pair<std::size_t, std::size_t>> start;
  for (std::size_t r = 0; r < roots1.size(); ++r) {
    const auto a = roots1[r], b = roots2[r];
    if (a.part != b.part) return out;
    if (a.part == Part::target_input) {
      if (a.index != b.index) return out;
    } else {
      start.emplace_back(a.index, b.index);
    }
  }

  std::function<bool(std::vector<std::pair<std::size_t, std::size_t>>)> rec =
      [&](std::vector<std::pair<std::size_t, std::size_t>> pending) -> bool {
    if (pending.empty()) {
      if (accept && !accept(cur)) return true;
      out.push_back(cur);
      return !first_only;
    }
    const auto [v, v2] = pending.back();
    pending.pop_back();
    if (y.outputs.color(v) != y2.outputs.color(v2)) return true;
    cur.outputs[v] = v2;
    const auto fa = y.fiber(v), fb = y2.fiber(v2);
    if (fa.size() != fb.size()) return true;
    std::vector<bool> taken(fb.size(), false);
    std::vector<std::size_t> free_a, free_b;
    for (auto i : fa) {
      const auto c = below1[i];
      if (c.part == Part::target_input) {
        const auto s2 = g2.on_target_inputs[c.index];
        if (s2.part != Part::source_input || y2.structure[s2.index] != v2) return true;
        if (y.inputs.color(i) != y2.inputs.color(s2.index)) return true;
        cur.inputs[i] = s2.index;
        for (std::size_t k = 0; k < fb.size(); ++k)
          if (fb[k] == s2.index) taken[k] = true;
      } else {
        free_a.push_back(i);
      }
    }
    for (std::size_t k = 0; k < fb.size(); ++k)
      if (!taken[k]) {
        if (below2[fb[k]].part != Part::source_output) return true;
        free_b.push_back(fb[k]);
      }
    auto ca = [&](std::size_t i) -> const std::string& { return y.inputs.color(i); };
    auto cb = [&](std::size_t i) -> const std::string& { return y2.inputs.color(i); };
    return detail::for_each_color_bijection(free_a, free_b, ca, cb, [&](const std::vector<std::size_t>& img) {
      auto next = pending;
      for (std::size_t k = 0; k < img.size(); ++k) {
        cur.inputs[free_a[k]] = img[k];
        next.emplace_back(below1[free_a[k]].index, below2[img[k]].index);
      }
      return rec(std::move(next));
    });
  };
  rec(start);
  return out;
}

}  // namespace folab
