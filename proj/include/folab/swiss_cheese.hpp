#pragma once

// The swiss-cheese operad SC_d as affine disc and half-disc configurations,
// its four-colored variant with collapsed discs, and the projection p.

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/operad.hpp"
#include "folab/random.hpp"

namespace folab {

inline const std::string kFull = "f";
inline const std::string kHalf = "h";
inline const std::string kFullDot = "f•";
inline const std::string kHalfDot = "h•";

inline ColorSet sc_colors() { return ColorSet({kFull, kHalf}); }
inline ColorSet bullet_colors() { return ColorSet({kFullDot, kHalfDot, kFull, kHalf}); }

inline bool is_bullet(const std::string& c) { return c == kFullDot || c == kHalfDot; }

using Vec = std::vector<double>;

inline double norm(const Vec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline double distance(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

/// One input of a vertex: an affine disc (f, h) or a collapsed point (f•, h•).
/// The f• input of an h•-vertex carries no point.
struct DiscDatum {
  std::string color;
  double radius = 0;
  Vec center;
  Vec point;

  bool is_affine() const { return !is_bullet(color); }
  /// The affine map p -> r p + c.
  Vec apply(const Vec& p) const {
    Vec out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = radius * p[i] + center[i];
    return out;
  }
};

inline DiscDatum affine_disc(std::string color, double r, Vec c) { return {std::move(color), r, std::move(c), {}}; }
inline DiscDatum collapsed(std::string color, Vec q) { return {std::move(color), 0, {}, std::move(q)}; }

struct ScVertex {
  std::vector<DiscDatum> inputs;
};

struct SCElement {
  int d = 2;
  YoungForest shape;
  std::vector<ScVertex> data;
};

enum class ScDefect { none, containment, overlap, color_rule, collapsed_outside };

inline const char* to_string(ScDefect d) {
  switch (d) {
    case ScDefect::none: return "None";
    case ScDefect::containment: return "Containment";
    case ScDefect::overlap: return "Overlap";
    case ScDefect::color_rule: return "ColorRule";
    default: return "CollapsedOutside";
  }
}

struct ScCheck {
  ScDefect defect = ScDefect::none;
  std::string detail;
  explicit operator bool() const { return defect == ScDefect::none; }
};

/// Tolerance for sphere-membership tests on computed points.
inline constexpr double kBoundaryTol = 1e-12;

// ---------------------------------------------------------------------------
// closed-form geometry

/// Distance from a to the closed half-disc {|p - c| <= r, p_d >= 0} with c on the hyperplane.
inline double distance_to_half_disc(const Vec& a, const Vec& c, double r) {
  const std::size_t d = a.size();
  if (a[d - 1] >= 0) return std::max(0.0, distance(a, c) - r);
  Vec flat = a;
  flat[d - 1] = 0;
  const double out = std::max(0.0, distance(flat, c) - r);
  return std::sqrt(a[d - 1] * a[d - 1] + out * out);
}

/// Whether two input images, as closed sets, share a point.
inline bool images_meet(const DiscDatum& a, const DiscDatum& b) {
  if (a.color == kFull && b.color == kFull) return distance(a.center, b.center) <= a.radius + b.radius;
  if (a.color == kHalf && b.color == kHalf) return distance(a.center, b.center) <= a.radius + b.radius;
  const auto& full = a.color == kFull ? a : b;
  const auto& half = a.color == kFull ? b : a;
  return distance_to_half_disc(full.center, half.center, half.radius) <= full.radius;
}

inline bool contained_in_root(const DiscDatum& a, const std::string& root) {
  const double reach = norm(a.center) + a.radius;
  if (reach > 1) return false;
  if (root == kFull) return a.color == kFull;
  if (a.color == kFull) return a.center.back() - a.radius >= 0;
  return a.center.back() == 0;
}

/// q ∈ |β|: the closed half-disc minus the open holes of β.
inline bool realization_contains(const ScVertex& v, const Vec& q) {
  if (q.empty() || q.back() < 0 || norm(q) > 1 + kBoundaryTol) return false;
  for (const auto& in : v.inputs)
    if (in.is_affine() && distance(q, in.center) < in.radius - kBoundaryTol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// validation

inline ScCheck validate_vertex(int d, const std::string& root, const std::vector<std::string>& input_colors,
                               const ScVertex& v) {
  auto fail = [](ScDefect e, std::string why) { return ScCheck{e, std::move(why)}; };
  if (v.inputs.size() != input_colors.size()) return fail(ScDefect::color_rule, "data does not match the inputs");
  for (std::size_t k = 0; k < input_colors.size(); ++k)
    if (v.inputs[k].color != input_colors[k]) return fail(ScDefect::color_rule, "datum color differs from its input");

  if (root == kFullDot) return fail(ScDefect::color_rule, "no vertex has a collapsed-disc root");
  if (root == kHalfDot) {
    if (input_colors.size() != 1 || input_colors[0] != kFullDot)
      return fail(ScDefect::color_rule, "a collapsed half-disc vertex takes exactly one collapsed disc");
    return {};
  }
  std::size_t bullets = 0;
  for (const auto& c : input_colors) {
    if (is_bullet(c)) ++bullets;
    if (root == kFull && c != kFull) return fail(ScDefect::color_rule, "a full-disc root takes full discs only");
  }
  if (bullets > 1) return fail(ScDefect::color_rule, "at most one collapsed disc or half-disc per vertex");

  for (std::size_t k = 0; k < v.inputs.size(); ++k) {
    const auto& a = v.inputs[k];
    if (!a.is_affine()) continue;
    if (a.center.size() != static_cast<std::size_t>(d)) return fail(ScDefect::containment, "center has wrong dimension");
    if (!(a.radius > 0)) return fail(ScDefect::containment, "radius must be positive");
    if (!contained_in_root(a, root)) return fail(ScDefect::containment, "input " + std::to_string(k) + " leaves the root");
  }
  for (std::size_t k = 0; k < v.inputs.size(); ++k)
    for (std::size_t l = k + 1; l < v.inputs.size(); ++l)
      if (v.inputs[k].is_affine() && v.inputs[l].is_affine() && images_meet(v.inputs[k], v.inputs[l]))
        return fail(ScDefect::overlap, "inputs " + std::to_string(k) + " and " + std::to_string(l) + " meet");
  for (const auto& a : v.inputs) {
    if (a.is_affine()) continue;
    if (a.point.size() != static_cast<std::size_t>(d) || !realization_contains(v, a.point))
      return fail(ScDefect::collapsed_outside, "collapsed point outside the realization");
    if (a.color == kHalfDot && a.point.back() != 0)
      return fail(ScDefect::collapsed_outside, "collapsed half-disc off the boundary");
  }
  return {};
}

inline std::vector<std::string> fiber_colors(const YoungForest& x, std::size_t j) {
  std::vector<std::string> c;
  for (auto i : x.fiber(j)) c.push_back(x.inputs.color(i));
  return c;
}

inline ScCheck validate_sc(const SCElement& e) {
  if (e.d < 1) return {ScDefect::containment, "dimension must be at least 1"};
  if (e.data.size() != e.shape.outputs.size()) return {ScDefect::color_rule, "one vertex datum per root"};
  for (std::size_t j = 0; j < e.data.size(); ++j)
    if (auto c = validate_vertex(e.d, e.shape.outputs.color(j), fiber_colors(e.shape, j), e.data[j]); !c) {
      c.detail = "root " + e.shape.outputs.id(j) + ": " + c.detail;
      return c;
    }
  return {};
}

// ---------------------------------------------------------------------------
// the operad

class SwissCheese {
 public:
  using value_type = ScVertex;

  explicit SwissCheese(int d) : d_(d) {
    if (d < 1) throw error("swiss cheese: dimension must be at least 1");
  }
  int dimension() const { return d_; }
  std::string name() const { return "sc:" + std::to_string(d_); }

  std::vector<ScVertex> act(const Forest& f, std::span<const ScVertex> a) const {
    const auto& x = f.source;
    const auto& y = f.target;
    if (a.size() != x.outputs.size()) throw error("swiss cheese: value does not match the source");
    std::vector<ScVertex> out(y.outputs.size());
    for (std::size_t i = 0; i < y.inputs.size(); ++i) {
      const auto j = y.structure[i];
      const auto& c = y.inputs.color(i);
      if (y.outputs.color(j) == kHalfDot) {
        out[j].inputs.push_back(collapsed(c, {}));
      } else if (!is_bullet(c)) {
        out[j].inputs.push_back(chase_affine(f, a, i));
      } else {
        out[j].inputs.push_back(collapsed(c, chase_point(f, a, i)));
      }
    }
    return out;
  }

  bool is_identity(const YoungForest& y, std::size_t j, const ScVertex& v) const {
    if (!is_unary_same_color(y, j) || v.inputs.size() != 1 || !v.inputs[0].is_affine()) return false;
    const auto& a = v.inputs[0];
    if (std::abs(a.radius - 1) > 1e-12) return false;
    for (double c : a.center)
      if (std::abs(c) > 1e-12) return false;
    return true;
  }

  bool equal(const ScVertex& u, const ScVertex& v, double tol) const {
    if (u.inputs.size() != v.inputs.size()) return false;
    auto close = [tol](const Vec& p, const Vec& q) {
      if (p.size() != q.size()) return false;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i] - q[i]) > tol) return false;
      return true;
    };
    for (std::size_t k = 0; k < u.inputs.size(); ++k) {
      const auto &a = u.inputs[k], &b = v.inputs[k];
      if (a.color != b.color || std::abs(a.radius - b.radius) > tol) return false;
      if (!close(a.center, b.center) || !close(a.point, b.point)) return false;
    }
    return true;
  }

  /// The identity value r = 1, c = 0 at a color.
  ScVertex unit(const std::string& color) const { return {{affine_disc(color, 1.0, Vec(d_, 0.0))}}; }

 private:
  static const DiscDatum& datum_at(const Forest& f, std::span<const ScVertex> a, std::size_t slot) {
    const auto v = f.source.structure[slot];
    return a[v].inputs.at(fiber_position(f.source, slot));
  }

  DiscDatum chase_affine(const Forest& f, std::span<const ScVertex> a, std::size_t i) const {
    DiscDatum acc = affine_disc(f.target.inputs.color(i), 1.0, Vec(d_, 0.0));
    Slot s = f.on_target_inputs[i];
    while (s.part == Part::source_input) {
      const auto& t = datum_at(f, a, s.index);
      if (!t.is_affine()) throw error("swiss cheese: disc plugged into a collapsed input");
      acc.center = t.apply(acc.center);
      acc.radius *= t.radius;
      s = f.on_source_outputs[f.source.structure[s.index]];
    }
    return acc;
  }

  Vec chase_point(const Forest& f, std::span<const ScVertex> a, std::size_t i) const {
    std::optional<Vec> q;
    Slot s = f.on_target_inputs[i];
    while (s.part == Part::source_input) {
      const auto v = f.source.structure[s.index];
      if (f.source.outputs.color(v) != kHalfDot) {
        const auto& t = datum_at(f, a, s.index);
        if (!q) {
          if (t.is_affine() || t.point.empty()) throw error("swiss cheese: collapsed input lands on a disc");
          q = t.point;
        } else {
          if (!t.is_affine()) throw error("swiss cheese: collapsed point plugged into a collapsed input");
          q = t.apply(*q);
        }
      }
      s = f.on_source_outputs[v];
    }
    if (!q) throw error("swiss cheese: collapsed input never acquires a point");
    return *q;
  }

  int d_;
};

/// SC_d(f)(e), validated.
inline SCElement compose_sc(const Forest& f, const SCElement& e) {
  if (!(e.shape == f.source)) throw error("compose_sc: element shape differs from the forest source");
  if (auto c = validate_sc(e); !c) throw error(std::string("compose_sc: invalid element (") + to_string(c.defect) + ")");
  SwissCheese op(e.d);
  SCElement out{e.d, f.target, op.act(f, e.data)};
  if (auto c = validate_sc(out); !c)
    throw error(std::string("compose_sc: result violates ") + to_string(c.defect) + ": " + c.detail);
  return out;
}

// ---------------------------------------------------------------------------
// boundary strata of the realization

struct BoundaryTags {
  bool h_boundary = false;
  bool rt_boundary = false;
  std::vector<std::size_t> inputs;  // h-inputs whose upper hemisphere contains q
  friend bool operator==(const BoundaryTags&, const BoundaryTags&) = default;
};

inline BoundaryTags boundary_classify(const ScVertex& v, const Vec& q) {
  if (!realization_contains(v, q)) throw error("boundary_classify: point outside the realization");
  BoundaryTags t;
  const double nq = norm(q);
  const bool on_sphere = std::abs(nq - 1) <= kBoundaryTol;
  t.rt_boundary = on_sphere && q.back() >= 0;
  bool in_h_hole_closure = false;
  for (std::size_t k = 0; k < v.inputs.size(); ++k) {
    const auto& in = v.inputs[k];
    if (in.color != kHalf) continue;
    const double dq = distance(q, in.center);
    if (std::abs(dq - in.radius) <= kBoundaryTol && q.back() >= 0) t.inputs.push_back(k);
    if (dq <= in.radius + kBoundaryTol) in_h_hole_closure = true;
  }
  const bool flat = std::abs(q.back()) <= kBoundaryTol && !in_h_hole_closure;
  t.h_boundary = flat || on_sphere || !t.inputs.empty();
  return t;
}

// ---------------------------------------------------------------------------
// the projection p forgetting collapsed data

struct Projection {
  YoungForest forest;
  std::vector<std::optional<std::size_t>> input_map;
  std::vector<std::optional<std::size_t>> output_map;
};

inline Projection project_p(const YoungForest& x) {
  std::vector<bool> ki(x.inputs.size()), ko(x.outputs.size());
  for (std::size_t i = 0; i < ki.size(); ++i) ki[i] = !is_bullet(x.inputs.color(i));
  for (std::size_t j = 0; j < ko.size(); ++j) ko[j] = !is_bullet(x.outputs.color(j));
  auto s = sub_young(x, ki, ko);
  return {recolor_set(s.forest, sc_colors()), std::move(s.input_map), std::move(s.output_map)};
}

inline Forest project_p(const Forest& f) {
  const auto px = project_p(f.source);
  const auto py = project_p(f.target);
  auto move = [&](Slot s) {
    if (s.part == Part::target_output) return target_output(py.output_map.at(s.index).value());
    return source_input(px.input_map.at(s.index).value());
  };
  Forest out{px.forest, py.forest, {}, {}};
  for (std::size_t i = 0; i < f.on_target_inputs.size(); ++i)
    if (py.input_map[i]) out.on_target_inputs.push_back(move(f.on_target_inputs[i]));
  for (std::size_t v = 0; v < f.on_source_outputs.size(); ++v)
    if (px.output_map[v]) out.on_source_outputs.push_back(move(f.on_source_outputs[v]));
  require_valid(out, "project_p");
  return out;
}

inline SCElement project_p(const SCElement& e) {
  const auto px = project_p(e.shape);
  SCElement out{e.d, px.forest, {}};
  for (std::size_t j = 0; j < e.data.size(); ++j) {
    if (!px.output_map[j]) continue;
    ScVertex v;
    for (const auto& in : e.data[j].inputs)
      if (in.is_affine()) v.inputs.push_back(in);
    out.data.push_back(std::move(v));
  }
  return out;
}

/// Pullback of t along E(pf) ⊂ E(f).
inline Labels project_p(const Forest& f, const Labels& t) {
  const auto px = project_p(f.source);
  Labels out;
  for (const auto& [v, len] : t)
    if (px.output_map.at(v)) out[*px.output_map[v]] = len;
  return out;
}

/// The young tree (k,l|n,m) -> {root}: k f•, l h•, n f and m h inputs.
inline YoungForest bullet_tree(std::size_t k, std::size_t l, std::size_t n, std::size_t m,
                               const std::string& root = kHalf, const ColorSet& colors = bullet_colors()) {
  std::vector<Element> in;
  auto add = [&](std::size_t count, const std::string& c, const char* tag) {
    for (std::size_t i = 0; i < count; ++i) in.push_back({tag + std::to_string(i + 1), c});
  };
  add(k, kFullDot, "a");
  add(l, kHalfDot, "b");
  add(n, kFull, "f");
  add(m, kHalf, "h");
  return young_tree(colors, std::move(in), {"rt", root});
}

/// Whether every component of x is one of the young trees allowed with collapsed colors.
inline bool is_bullet_shape(const YoungForest& x) {
  for (std::size_t j = 0; j < x.outputs.size(); ++j) {
    const auto c = fiber_colors(x, j);
    const auto& root = x.outputs.color(j);
    if (root == kHalfDot) {
      if (c.size() != 1 || c[0] != kFullDot) return false;
    } else if (root == kHalf) {
      if (std::count_if(c.begin(), c.end(), [](const std::string& s) { return is_bullet(s); }) > 1) return false;
    } else {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// samplers

/// Uniform sample of a vertex value by rejection; nullopt if no sample was found.
inline std::optional<ScVertex> random_sc_vertex(Rng& rng, int d, const std::string& root,
                                                const std::vector<std::string>& colors, int attempts = 400) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto ball_point = [&](std::size_t dims, double radius) {
    for (;;) {
      Vec p(dims);
      for (auto& x : p) x = u(rng) * radius;
      if (norm(p) <= radius) return p;
    }
  };
  if (root == kHalfDot) {
    ScVertex v;
    for (const auto& c : colors) v.inputs.push_back(collapsed(c, {}));
    if (!validate_vertex(d, root, colors, v)) return std::nullopt;
    return v;
  }
  const double rmax = 0.45 / (1.0 + 0.35 * static_cast<double>(colors.size()));
  for (int t = 0; t < attempts; ++t) {
    ScVertex v;
    for (const auto& c : colors) {
      if (is_bullet(c)) {
        v.inputs.push_back(collapsed(c, {}));
        continue;
      }
      const double r = std::uniform_real_distribution<double>(0.02, rmax)(rng);
      Vec ctr;
      if (c == kHalf) {
        ctr = ball_point(static_cast<std::size_t>(d - 1), 1 - r);
        ctr.push_back(0.0);
      } else {
        do {
          ctr = ball_point(static_cast<std::size_t>(d), 1 - r);
          if (root == kHalf) ctr.back() = std::abs(ctr.back());
        } while (root == kHalf && ctr.back() < r);
      }
      v.inputs.push_back(affine_disc(c, r, std::move(ctr)));
    }
    for (auto& in : v.inputs) {
      if (in.is_affine()) continue;
      for (int s = 0; s < 50; ++s) {
        Vec q = ball_point(static_cast<std::size_t>(d), 1.0);
        q.back() = in.color == kHalfDot ? 0.0 : std::abs(q.back());
        if (realization_contains(v, q)) {
          in.point = std::move(q);
          break;
        }
      }
    }
    if (validate_vertex(d, root, colors, v)) return v;
  }
  return std::nullopt;
}

inline std::optional<std::vector<ScVertex>> random_sc_value(Rng& rng, int d, const YoungForest& x) {
  std::vector<ScVertex> out;
  for (std::size_t j = 0; j < x.outputs.size(); ++j) {
    auto v = random_sc_vertex(rng, d, x.outputs.color(j), fiber_colors(x, j));
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  return out;
}

/// A random {f,h}-colored young forest obeying the color rule.
inline YoungForest random_sc_young(Rng& rng, std::size_t max_inputs, std::size_t max_outputs, bool h_roots_only) {
  const auto k = sc_colors();
  const auto nj = uniform(rng, 1, max_outputs);
  const auto ni = uniform(rng, 0, max_inputs);
  std::vector<Element> in, out;
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < nj; ++j) out.push_back({"r" + std::to_string(j), h_roots_only || coin(rng, 0.6) ? kHalf : kFull});
  for (std::size_t i = 0; i < ni; ++i) {
    const auto j = uniform(rng, 0, nj - 1);
    in.push_back({"i" + std::to_string(i), out[j].color == kHalf && coin(rng, 0.5) ? kHalf : kFull});
    s.push_back(j);
  }
  return YoungForest(ColoredSet(k, std::move(in)), ColoredSet(k, std::move(out)), std::move(s));
}

/// Vertex shapes that SC_d can realize: the color rule, and at most one
/// half-disc input per vertex when d = 1.
inline bool sc_realizable_shape(const YoungForest& x, int d) {
  for (std::size_t j = 0; j < x.outputs.size(); ++j) {
    const auto c = fiber_colors(x, j);
    const auto nh = std::count(c.begin(), c.end(), kHalf);
    if (x.outputs.color(j) == kFull && nh > 0) return false;
    if (d == 1 && nh > 1) return false;
  }
  return true;
}

/// A random SC-legal forest into y; falls back to the identity.
inline Forest random_sc_forest_into(Rng& rng, const YoungForest& y, int d, const GenParams& p) {
  for (int t = 0; t < 60; ++t) {
    auto f = random_forest_into(rng, y, p);
    if (sc_realizable_shape(f.source, d)) return f;
  }
  return identity_forest(y);
}

/// A random forest into a legal collapsed-color forest y whose source is legal too.
inline Forest random_bullet_forest_into(Rng& rng, const YoungForest& y, const GenParams& p) {
  const auto& k = y.colors();
  std::vector<Element> verts, slots;
  std::vector<std::size_t> owner;
  std::vector<Slot> on_in(y.inputs.size()), on_vert;
  std::size_t budget = uniform(rng, 0, p.max_new_edges);

  auto new_vertex = [&](const std::string& color, Slot attach) {
    verts.push_back({"v" + std::to_string(verts.size()), color});
    on_vert.push_back(attach);
    return verts.size() - 1;
  };
  auto new_slot = [&](std::size_t v, const std::string& color) {
    slots.push_back({"p" + std::to_string(slots.size()), color});
    owner.push_back(v);
    return slots.size() - 1;
  };
  // an h vertex over `group`, which holds at most one collapsed leaf
  auto build = [&](auto&& self, Slot attach, std::vector<std::size_t> group) -> void {
    const auto v = new_vertex(kHalf, attach);
    std::shuffle(group.begin(), group.end(), rng);
    while (budget > 0 && coin(rng, 0.5)) {
      --budget;
      const auto take = uniform(rng, 0, group.size());
      std::vector<std::size_t> sub(group.end() - static_cast<long>(take), group.end());
      group.resize(group.size() - take);
      self(self, source_input(new_slot(v, kHalf)), std::move(sub));
    }
    for (auto i : group) {
      const auto& c = y.inputs.color(i);
      if (c == kFullDot && budget > 0 && coin(rng, 0.4)) {
        --budget;
        const auto w = new_vertex(kHalfDot, source_input(new_slot(v, kHalfDot)));
        on_in[i] = source_input(new_slot(w, kFullDot));
      } else {
        on_in[i] = source_input(new_slot(v, c));
      }
    }
  };
  for (std::size_t j = 0; j < y.outputs.size(); ++j) {
    const auto fib = y.fiber(j);
    if (y.outputs.color(j) == kHalfDot) {
      const auto w = new_vertex(kHalfDot, target_output(j));
      on_in[fib.at(0)] = source_input(new_slot(w, kFullDot));
    } else if (fib.size() == 1 && y.inputs.color(fib[0]) == kHalf && coin(rng, p.unit_probability)) {
      on_in[fib[0]] = target_output(j);
    } else {
      build(build, target_output(j), fib);
    }
  }
  YoungForest x(ColoredSet(k, std::move(slots)), ColoredSet(k, std::move(verts)), std::move(owner));
  Forest f{std::move(x), y, std::move(on_in), std::move(on_vert)};
  require_valid(f, "random_bullet_forest_into");
  return f;
}

/// A random legal collapsed-color young forest: components from the four allowed trees.
inline YoungForest random_bullet_young(Rng& rng, std::size_t max_components) {
  const auto colors = bullet_colors();
  std::vector<Element> in, out;
  std::vector<std::size_t> s;
  const auto nc = uniform(rng, 1, max_components);
  for (std::size_t j = 0; j < nc; ++j) {
    const auto kind = uniform(rng, 0, 3);
    const bool dot_root = kind == 3;
    out.push_back({"r" + std::to_string(j), dot_root ? kHalfDot : kHalf});
    auto add = [&](const std::string& c) {
      in.push_back({"i" + std::to_string(in.size()), c});
      s.push_back(j);
    };
    if (dot_root) {
      add(kFullDot);
      continue;
    }
    if (kind == 1) add(kFullDot);
    if (kind == 2) add(kHalfDot);
    for (auto n = uniform(rng, 0, 2); n > 0; --n) add(kFull);
    for (auto m = uniform(rng, 0, 2); m > 0; --m) add(kHalf);
  }
  return YoungForest(ColoredSet(colors, std::move(in)), ColoredSet(colors, std::move(out)), std::move(s));
}

}  // namespace folab
