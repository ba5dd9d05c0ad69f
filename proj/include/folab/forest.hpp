#pragma once

// Young forests and forests: the morphisms of the category of K-colored forests.
//
// A forest f : x -> y is a color-preserving bijection
//     I_y ⊔ J_x  ->  J_y ⊔ I_x
// whose root chase reproduces y. Elements of the four sets are addressed by a
// Slot (which set, index into that set).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folab/colored.hpp"

namespace folab {

/// An uncolored map of colored sets, inputs -> outputs.
struct YoungForest {
  ColoredSet inputs;
  ColoredSet outputs;
  std::vector<std::size_t> structure;

  YoungForest() = default;
  YoungForest(ColoredSet in, ColoredSet out, std::vector<std::size_t> s)
      : inputs(std::move(in)), outputs(std::move(out)), structure(std::move(s)) {
    if (!(inputs.colors() == outputs.colors()))
      throw error("young forest: inputs and outputs use different color sets");
    if (structure.size() != inputs.size()) throw error("young forest: structure map is not total");
    for (auto j : structure)
      if (j >= outputs.size()) throw error("young forest: structure map leaves the outputs");
  }

  const ColorSet& colors() const { return outputs.colors(); }

  std::vector<std::size_t> fiber(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < structure.size(); ++i)
      if (structure[i] == j) out.push_back(i);
    return out;
  }

  friend bool operator==(const YoungForest&, const YoungForest&) = default;
};

/// Builds a young forest from ids; `structure` maps input id -> output id.
inline YoungForest make_young(const ColorSet& colors, std::vector<Element> inputs,
                              std::vector<Element> outputs,
                              const std::map<std::string, std::string>& structure) {
  ColoredSet in(colors, std::move(inputs));
  ColoredSet out(colors, std::move(outputs));
  auto m = ColoredMap::from_ids(in, out, structure);
  return YoungForest(std::move(in), std::move(out), std::move(m.mapping));
}

/// The young tree (I; c): every input goes to the single root.
inline YoungForest young_tree(const ColorSet& colors, std::vector<Element> inputs, Element root) {
  std::vector<std::size_t> s(inputs.size(), 0);
  return YoungForest(ColoredSet(colors, std::move(inputs)), ColoredSet(colors, {std::move(root)}),
                     std::move(s));
}

inline YoungForest empty_young(const ColorSet& colors) {
  return YoungForest(ColoredSet(colors, {}), ColoredSet(colors, {}), {});
}

inline YoungForest disjoint_union(const YoungForest& a, const YoungForest& b) {
  std::vector<std::size_t> s = a.structure;
  for (auto j : b.structure) s.push_back(j + a.outputs.size());
  return YoungForest(disjoint_union(a.inputs, b.inputs), disjoint_union(a.outputs, b.outputs),
                     std::move(s));
}

/// Same forest over a larger color set.
inline YoungForest recolor_set(const YoungForest& x, const ColorSet& colors) {
  return YoungForest(ColoredSet(colors, x.inputs.elements()), ColoredSet(colors, x.outputs.elements()),
                     x.structure);
}

enum class Part : std::uint8_t { target_input, target_output, source_input, source_output };

struct Slot {
  Part part;
  std::size_t index;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

constexpr Slot target_input(std::size_t i) { return {Part::target_input, i}; }
constexpr Slot target_output(std::size_t i) { return {Part::target_output, i}; }
constexpr Slot source_input(std::size_t i) { return {Part::source_input, i}; }
constexpr Slot source_output(std::size_t i) { return {Part::source_output, i}; }

struct Forest {
  YoungForest source;                   // x
  YoungForest target;                   // y
  std::vector<Slot> on_target_inputs;   // I_y -> J_y ⊔ I_x
  std::vector<Slot> on_source_outputs;  // J_x -> J_y ⊔ I_x

  Slot operator()(Slot s) const {
    switch (s.part) {
      case Part::target_input: return on_target_inputs.at(s.index);
      case Part::source_output: return on_source_outputs.at(s.index);
      default: throw error("forest is applied to I_y ⊔ J_x only");
    }
  }

  const ColoredSet& set_of(Part p) const {
    switch (p) {
      case Part::target_input: return target.inputs;
      case Part::target_output: return target.outputs;
      case Part::source_input: return source.inputs;
      default: return source.outputs;
    }
  }

  const std::string& color_of(Slot s) const { return set_of(s.part).color(s.index); }
  const std::string& id_of(Slot s) const { return set_of(s.part).id(s.index); }

  friend bool operator==(const Forest&, const Forest&) = default;
};

inline const char* part_prefix(Part p) {
  switch (p) {
    case Part::target_input: return "in:";
    case Part::target_output: return "out:";
    case Part::source_input: return "src_in:";
    default: return "src_out:";
  }
}

inline std::string slot_name(const Forest& f, Slot s) { return part_prefix(s.part) + f.id_of(s); }

// ---------------------------------------------------------------------------
// validation and the root chase

enum class ForestDefect { none, not_bijection, color_broken, cycle, root_mismatch };

inline const char* to_string(ForestDefect d) {
  switch (d) {
    case ForestDefect::none: return "None";
    case ForestDefect::not_bijection: return "NotBijection";
    case ForestDefect::color_broken: return "ColorBroken";
    case ForestDefect::cycle: return "Cycle";
    default: return "RootMismatch";
  }
}

struct ForestCheck {
  ForestDefect defect = ForestDefect::none;
  std::string detail;
  explicit operator bool() const { return defect == ForestDefect::none; }
};

/// Follows an element of J_y ⊔ I_x through x and f until it lands in J_y.
/// Returns nullopt if that takes more than |I_x| + 1 steps.
inline std::optional<std::size_t> chase_to_root(const Forest& f, Slot s) {
  const std::size_t bound = f.source.inputs.size() + 1;
  for (std::size_t step = 0; step <= bound; ++step) {
    if (s.part == Part::target_output) return s.index;
    s = f.on_source_outputs[f.source.structure[s.index]];
  }
  return std::nullopt;
}

inline ForestCheck validate_forest(const Forest& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  auto fail = [](ForestDefect d, std::string why) { return ForestCheck{d, std::move(why)}; };

  if (!(x.colors() == y.colors())) return fail(ForestDefect::color_broken, "source and target color sets differ");
  if (f.on_target_inputs.size() != y.inputs.size() || f.on_source_outputs.size() != x.outputs.size())
    return fail(ForestDefect::not_bijection, "attach is not total on I_y ⊔ J_x");
  if (y.inputs.size() + x.outputs.size() != y.outputs.size() + x.inputs.size())
    return fail(ForestDefect::not_bijection, "|I_y ⊔ J_x| != |J_y ⊔ I_x|");

  std::vector<bool> hit_root(y.outputs.size(), false);
  std::vector<bool> hit_input(x.inputs.size(), false);
  auto check = [&](Slot from, Slot to) -> std::optional<ForestCheck> {
    if (to.part == Part::target_output) {
      if (to.index >= hit_root.size()) return fail(ForestDefect::not_bijection, "image out of range");
      if (hit_root[to.index]) return fail(ForestDefect::not_bijection, "out:" + y.outputs.id(to.index) + " hit twice");
      hit_root[to.index] = true;
    } else if (to.part == Part::source_input) {
      if (to.index >= hit_input.size()) return fail(ForestDefect::not_bijection, "image out of range");
      if (hit_input[to.index]) return fail(ForestDefect::not_bijection, "src_in:" + x.inputs.id(to.index) + " hit twice");
      hit_input[to.index] = true;
    } else {
      return fail(ForestDefect::not_bijection, "image outside J_y ⊔ I_x");
    }
    if (f.color_of(from) != f.color_of(to))
      return fail(ForestDefect::color_broken, slot_name(f, from) + " -> " + slot_name(f, to));
    return std::nullopt;
  };
  for (std::size_t i = 0; i < y.inputs.size(); ++i)
    if (auto r = check(target_input(i), f.on_target_inputs[i])) return *r;
  for (std::size_t j = 0; j < x.outputs.size(); ++j)
    if (auto r = check(source_output(j), f.on_source_outputs[j])) return *r;

  for (std::size_t p = 0; p < x.inputs.size(); ++p)
    if (!chase_to_root(f, source_input(p)))
      return fail(ForestDefect::cycle, "src_in:" + x.inputs.id(p) + " never reaches a root");

  for (std::size_t i = 0; i < y.inputs.size(); ++i) {
    auto r = chase_to_root(f, f.on_target_inputs[i]);
    if (*r != y.structure[i])
      return fail(ForestDefect::root_mismatch, "in:" + y.inputs.id(i) + " chases to out:" + y.outputs.id(*r) +
                                                   " but y sends it to out:" + y.outputs.id(y.structure[i]));
  }
  return {};
}

inline void require_valid(const Forest& f, const char* where) {
  if (auto c = validate_forest(f); !c)
    throw error(std::string(where) + ": invalid forest (" + to_string(c.defect) + ": " + c.detail + ")");
}

/// The root map [f|x], one vector per set, each entry an index into J_y.
struct RootMap {
  std::vector<std::size_t> target_inputs;
  std::vector<std::size_t> target_outputs;
  std::vector<std::size_t> source_inputs;
  std::vector<std::size_t> source_outputs;

  std::size_t operator()(Slot s) const {
    switch (s.part) {
      case Part::target_input: return target_inputs.at(s.index);
      case Part::target_output: return target_outputs.at(s.index);
      case Part::source_input: return source_inputs.at(s.index);
      default: return source_outputs.at(s.index);
    }
  }
};

inline RootMap root_map(const Forest& f) {
  require_valid(f, "root_map");
  RootMap m;
  for (const auto& s : f.on_target_inputs) m.target_inputs.push_back(*chase_to_root(f, s));
  for (std::size_t j = 0; j < f.target.outputs.size(); ++j) m.target_outputs.push_back(j);
  for (std::size_t p = 0; p < f.source.inputs.size(); ++p)
    m.source_inputs.push_back(*chase_to_root(f, source_input(p)));
  for (const auto& s : f.on_source_outputs) m.source_outputs.push_back(*chase_to_root(f, s));
  return m;
}

inline Forest identity_forest(const YoungForest& y) {
  Forest f{y, y, {}, {}};
  for (std::size_t i = 0; i < y.inputs.size(); ++i) f.on_target_inputs.push_back(source_input(i));
  for (std::size_t j = 0; j < y.outputs.size(); ++j) f.on_source_outputs.push_back(target_output(j));
  return f;
}

// ---------------------------------------------------------------------------
// composition

/// Chase through the colimit of g : y -> z and f : x -> y.
/// `s` lies in J_z ⊔ I_y when `on_g_side`, otherwise in J_y ⊔ I_x.
/// The result is target_output (J_z) or source_input (I_x).
inline std::optional<Slot> composite_chase(const Forest& g, const Forest& f, Slot s, bool on_g_side) {
  const std::size_t bound = 2 * (f.target.inputs.size() + f.target.outputs.size()) + 2;
  for (std::size_t step = 0; step <= bound; ++step) {
    if (on_g_side) {
      if (s.part == Part::target_output) return s;
      s = f.on_target_inputs[s.index];  // I_y -> J_y ⊔ I_x
      on_g_side = false;
    } else {
      if (s.part == Part::source_input) return s;
      s = g.on_source_outputs[s.index];  // J_y -> J_z ⊔ I_y
      on_g_side = true;
    }
  }
  return std::nullopt;
}

/// g ∘ f. Requires f.target == g.source exactly.
inline Forest compose(const Forest& g, const Forest& f) {
  if (!(f.target == g.source)) throw error("compose: boundary mismatch (f.target != g.source)");
  Forest gf{f.source, g.target, {}, {}};
  for (const auto& s : g.on_target_inputs) {
    auto r = composite_chase(g, f, s, true);
    if (!r) throw error("compose: chase does not terminate");
    gf.on_target_inputs.push_back(*r);
  }
  for (const auto& s : f.on_source_outputs) {
    auto r = composite_chase(g, f, s, false);
    if (!r) throw error("compose: chase does not terminate");
    gf.on_source_outputs.push_back(*r);
  }
  return gf;
}

// ---------------------------------------------------------------------------
// extended edges

struct EdgeClassification {
  std::vector<std::pair<std::size_t, std::size_t>> unit_edges;  // (i in I_y, j in J_y)
  std::vector<std::size_t> leaves;                              // i in I_y
  std::vector<std::size_t> root_edges;                          // j in J_x
  std::vector<std::size_t> internal_edges;                      // j in J_x, the set E(f)
  friend bool operator==(const EdgeClassification&, const EdgeClassification&) = default;
};

inline EdgeClassification classify_edges(const Forest& f) {
  require_valid(f, "classify_edges");
  EdgeClassification c;
  for (std::size_t i = 0; i < f.on_target_inputs.size(); ++i) {
    const auto s = f.on_target_inputs[i];
    if (s.part == Part::target_output) c.unit_edges.emplace_back(i, s.index);
    else c.leaves.push_back(i);
  }
  for (std::size_t j = 0; j < f.on_source_outputs.size(); ++j) {
    if (f.on_source_outputs[j].part == Part::target_output) c.root_edges.push_back(j);
    else c.internal_edges.push_back(j);
  }
  return c;
}

inline bool is_internal_edge(const Forest& f, std::size_t j) {
  return f.on_source_outputs.at(j).part == Part::source_input;
}

inline std::size_t internal_edge_count(const Forest& f) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < f.on_source_outputs.size(); ++j) n += is_internal_edge(f, j);
  return n;
}

/// #E(f)(j) for every root j in J_y.
inline std::vector<std::size_t> internal_edges_per_root(const Forest& f) {
  const auto rm = root_map(f);
  std::vector<std::size_t> n(f.target.outputs.size(), 0);
  for (std::size_t j = 0; j < f.on_source_outputs.size(); ++j)
    if (is_internal_edge(f, j)) ++n[rm.source_outputs[j]];
  return n;
}

/// Per-root edge counts of a composable pair g : y -> z, f : x -> y, indexed by J_z.
/// Edges and unit edges of f are placed over J_z through the root map of g.
struct EdgeBookkeeping {
  std::vector<std::size_t> composite;   // #E(gf)(j)
  std::vector<std::size_t> outer;       // #E(g)(j)
  std::vector<std::size_t> inner;       // #E(f)(j)
  std::vector<std::size_t> inner_unit;  // #un(f)(j)
  std::vector<bool> composite_is_unit;  // gf restricted to j is a bare unit edge
};

inline EdgeBookkeeping edge_bookkeeping(const Forest& g, const Forest& f) {
  const auto gf = compose(g, f);
  const auto rg = root_map(g);
  const auto rf = root_map(f);
  const std::size_t nz = g.target.outputs.size();
  EdgeBookkeeping b{internal_edges_per_root(gf), internal_edges_per_root(g), std::vector<std::size_t>(nz, 0),
                    std::vector<std::size_t>(nz, 0), std::vector<bool>(nz, false)};
  for (std::size_t v = 0; v < f.on_source_outputs.size(); ++v)
    if (is_internal_edge(f, v)) ++b.inner[rg.source_outputs[rf.source_outputs[v]]];
  for (const auto& s : f.on_target_inputs)
    if (s.part == Part::target_output) ++b.inner_unit[rg.source_outputs[s.index]];
  for (const auto& s : gf.on_target_inputs)
    if (s.part == Part::target_output) b.composite_is_unit[s.index] = true;
  return b;
}

// ---------------------------------------------------------------------------
// restriction, factorization and monoidal structure

/// Sub-young-forest on chosen inputs and outputs, with old -> new index maps.
struct SubYoung {
  YoungForest forest;
  std::vector<std::optional<std::size_t>> input_map;
  std::vector<std::optional<std::size_t>> output_map;
};

inline SubYoung sub_young(const YoungForest& x, const std::vector<bool>& keep_inputs,
                          const std::vector<bool>& keep_outputs,
                          const std::vector<std::size_t>* restructure = nullptr) {
  SubYoung r;
  r.input_map.assign(x.inputs.size(), std::nullopt);
  r.output_map.assign(x.outputs.size(), std::nullopt);
  std::vector<Element> outs, ins;
  for (std::size_t j = 0; j < x.outputs.size(); ++j)
    if (keep_outputs[j]) {
      r.output_map[j] = outs.size();
      outs.push_back(x.outputs[j]);
    }
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.inputs.size(); ++i)
    if (keep_inputs[i]) {
      r.input_map[i] = ins.size();
      ins.push_back(x.inputs[i]);
      const auto old = restructure ? (*restructure)[i] : x.structure[i];
      if (!r.output_map[old]) throw error("sub_young: kept input lands on a dropped output");
      s.push_back(*r.output_map[old]);
    }
  r.forest = YoungForest(ColoredSet(x.colors(), std::move(ins)), ColoredSet(x.colors(), std::move(outs)),
                         std::move(s));
  return r;
}

inline std::vector<YoungForest> decompose_into_trees(const YoungForest& x) {
  std::vector<YoungForest> trees;
  for (std::size_t j = 0; j < x.outputs.size(); ++j) {
    std::vector<bool> ki(x.inputs.size()), ko(x.outputs.size(), false);
    for (std::size_t i = 0; i < ki.size(); ++i) ki[i] = x.structure[i] == j;
    ko[j] = true;
    trees.push_back(sub_young(x, ki, ko).forest);
  }
  return trees;
}

/// The part of f living over the root r of its target.
inline Forest restrict_to_root(const Forest& f, std::size_t r) {
  const auto rm = root_map(f);
  std::vector<bool> keep_src_out(f.source.outputs.size()), keep_src_in(f.source.inputs.size());
  for (std::size_t v = 0; v < keep_src_out.size(); ++v) keep_src_out[v] = rm.source_outputs[v] == r;
  for (std::size_t p = 0; p < keep_src_in.size(); ++p) keep_src_in[p] = keep_src_out[f.source.structure[p]];
  std::vector<bool> keep_tgt_out(f.target.outputs.size(), false), keep_tgt_in(f.target.inputs.size());
  keep_tgt_out[r] = true;
  for (std::size_t i = 0; i < keep_tgt_in.size(); ++i) keep_tgt_in[i] = f.target.structure[i] == r;
  auto sx = sub_young(f.source, keep_src_in, keep_src_out);
  auto sy = sub_young(f.target, keep_tgt_in, keep_tgt_out);
  auto remap = [&](Slot s) {
    if (s.part == Part::target_output) return target_output(*sy.output_map[s.index]);
    return source_input(*sx.input_map[s.index]);
  };
  Forest out{sx.forest, sy.forest, {}, {}};
  for (std::size_t i = 0; i < keep_tgt_in.size(); ++i)
    if (keep_tgt_in[i]) out.on_target_inputs.push_back(remap(f.on_target_inputs[i]));
  for (std::size_t v = 0; v < keep_src_out.size(); ++v)
    if (keep_src_out[v]) out.on_source_outputs.push_back(remap(f.on_source_outputs[v]));
  return out;
}

inline Forest disjoint_union(const Forest& f, const Forest& g) {
  Forest u{disjoint_union(f.source, g.source), disjoint_union(f.target, g.target), {}, {}};
  const auto shift = [&](Slot s) {
    if (s.part == Part::target_output) return target_output(s.index + f.target.outputs.size());
    return source_input(s.index + f.source.inputs.size());
  };
  u.on_target_inputs = f.on_target_inputs;
  for (auto s : g.on_target_inputs) u.on_target_inputs.push_back(shift(s));
  u.on_source_outputs = f.on_source_outputs;
  for (auto s : g.on_source_outputs) u.on_source_outputs.push_back(shift(s));
  return u;
}

/// g = rest ∘ collapse, where collapse : y -> y_c contracts the internal edge
/// below vertex `lower` of g into the vertex above it.
struct Contraction {
  Forest collapse;
  Forest rest;
  std::vector<std::optional<std::size_t>> output_map;  // J_y -> J_{y_c}
};

inline Contraction contract_edge(const Forest& g, std::size_t lower) {
  const auto& y = g.source;
  const Slot above = g.on_source_outputs.at(lower);
  if (above.part != Part::source_input) throw error("contract_edge: not an internal edge");
  const std::size_t slot = above.index;
  const std::size_t upper = y.structure[slot];
  std::vector<bool> ki(y.inputs.size(), true), ko(y.outputs.size(), true);
  ki[slot] = false;
  ko[lower] = false;
  auto restructure = y.structure;
  for (auto& j : restructure)
    if (j == lower) j = upper;
  auto yc = sub_young(y, ki, ko, &restructure);

  Forest collapse{y, yc.forest, {}, {}};
  for (std::size_t i = 0; i < y.inputs.size(); ++i)
    if (ki[i]) collapse.on_target_inputs.push_back(source_input(i));
  for (std::size_t v = 0; v < y.outputs.size(); ++v)
    collapse.on_source_outputs.push_back(v == lower ? source_input(slot) : target_output(*yc.output_map[v]));

  auto remap = [&](Slot s) {
    if (s.part == Part::target_output) return s;
    return source_input(*yc.input_map[s.index]);
  };
  Forest rest{yc.forest, g.target, {}, {}};
  for (auto s : g.on_target_inputs) rest.on_target_inputs.push_back(remap(s));
  for (std::size_t v = 0; v < y.outputs.size(); ++v)
    if (v != lower) rest.on_source_outputs.push_back(remap(g.on_source_outputs[v]));
  return {std::move(collapse), std::move(rest), std::move(yc.output_map)};
}

/// Removes a unary vertex v of g's source: insertion : y' -> y is the identity
/// plus a unit tree at v, and composite = g ∘ insertion.
struct Deletion {
  Forest insertion;
  Forest composite;
  std::vector<std::optional<std::size_t>> output_map;  // J_y -> J_{y'}
};

inline Deletion delete_unary_vertex(const Forest& g, std::size_t v) {
  const auto& y = g.source;
  const auto fib = y.fiber(v);
  if (fib.size() != 1) throw error("delete_unary_vertex: vertex is not unary");
  const std::size_t slot = fib.front();
  if (y.inputs.color(slot) != y.outputs.color(v))
    throw error("delete_unary_vertex: input and vertex colors differ");
  std::vector<bool> ki(y.inputs.size(), true), ko(y.outputs.size(), true);
  ki[slot] = false;
  ko[v] = false;
  auto yp = sub_young(y, ki, ko);
  Forest ins{yp.forest, y, {}, {}};
  for (std::size_t i = 0; i < y.inputs.size(); ++i)
    ins.on_target_inputs.push_back(i == slot ? target_output(v) : source_input(*yp.input_map[i]));
  for (std::size_t u = 0; u < y.outputs.size(); ++u)
    if (u != v) ins.on_source_outputs.push_back(target_output(u));
  auto comp = compose(g, ins);
  return {std::move(ins), std::move(comp), std::move(yp.output_map)};
}

// ---------------------------------------------------------------------------
// wedge

/// f ∨_τ g for f : x -> y, g : z -> w and τ : J_w -> J_x.
/// Ids from f are tagged "L:", ids from g are tagged "R:".
inline Forest wedge(const Forest& f, const Forest& g, const std::vector<std::size_t>& tau) {
  const auto& x = f.source;
  const auto& y = f.target;
  const auto& z = g.source;
  const auto& w = g.target;
  if (tau.size() != w.outputs.size()) throw error("wedge: tau is not total on J_w");
  for (auto t : tau)
    if (t >= x.outputs.size()) throw error("wedge: tau leaves J_x");
  const auto colors = merge(x.colors(), z.colors());
  const auto rf = root_map(f);

  std::vector<Element> xin, xout, yin, yout;
  std::vector<std::size_t> xs, ys;
  for (std::size_t p = 0; p < x.inputs.size(); ++p) {
    xin.push_back({left_tag(x.inputs.id(p)), x.inputs.color(p)});
    xs.push_back(x.structure[p]);
  }
  for (std::size_t r = 0; r < w.outputs.size(); ++r) {
    xin.push_back({right_tag(w.outputs.id(r)), w.outputs.color(r)});
    xs.push_back(tau[r]);
  }
  for (std::size_t q = 0; q < z.inputs.size(); ++q) {
    xin.push_back({right_tag(z.inputs.id(q)), z.inputs.color(q)});
    xs.push_back(x.outputs.size() + z.structure[q]);
  }
  for (const auto& e : x.outputs.elements()) xout.push_back({left_tag(e.id), e.color});
  for (const auto& e : z.outputs.elements()) xout.push_back({right_tag(e.id), e.color});
  for (std::size_t i = 0; i < y.inputs.size(); ++i) {
    yin.push_back({left_tag(y.inputs.id(i)), y.inputs.color(i)});
    ys.push_back(y.structure[i]);
  }
  for (std::size_t i = 0; i < w.inputs.size(); ++i) {
    yin.push_back({right_tag(w.inputs.id(i)), w.inputs.color(i)});
    ys.push_back(rf.source_outputs[tau[w.structure[i]]]);
  }
  for (const auto& e : y.outputs.elements()) yout.push_back({left_tag(e.id), e.color});

  YoungForest xz(ColoredSet(colors, std::move(xin)), ColoredSet(colors, std::move(xout)), std::move(xs));
  YoungForest yw(ColoredSet(colors, std::move(yin)), ColoredSet(colors, std::move(yout)), std::move(ys));

  const std::size_t off_w = x.inputs.size();
  const std::size_t off_z = off_w + w.outputs.size();
  auto from_f = [](Slot s) { return s; };
  auto from_g = [&](Slot s) {
    if (s.part == Part::target_output) return source_input(off_w + s.index);
    return source_input(off_z + s.index);
  };
  Forest out{std::move(xz), std::move(yw), {}, {}};
  for (auto s : f.on_target_inputs) out.on_target_inputs.push_back(from_f(s));
  for (auto s : g.on_target_inputs) out.on_target_inputs.push_back(from_g(s));
  for (auto s : f.on_source_outputs) out.on_source_outputs.push_back(from_f(s));
  for (auto s : g.on_source_outputs) out.on_source_outputs.push_back(from_g(s));
  require_valid(out, "wedge");
  return out;
}

}  // namespace folab
