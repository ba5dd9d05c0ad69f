#pragma once

// Operads as functors out of the forest category, evaluated on concrete values.
//
// A value over a young forest x is one vertex value per root j in J_x; the
// inputs of the value at j are the fiber x^{-1}(j) in index order.

#include <concepts>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folab/forest.hpp"
#include "folab/iso.hpp"

namespace folab {

template <class O>
concept Operad = requires(const O& op, const Forest& f, std::span<const typename O::value_type> a,
                          const YoungForest& y, std::size_t j, const typename O::value_type& v, double tol) {
  typename O::value_type;
  { op.act(f, a) } -> std::same_as<std::vector<typename O::value_type>>;
  { op.is_identity(y, j, v) } -> std::same_as<bool>;
  { op.equal(v, v, tol) } -> std::same_as<bool>;
  { op.name() } -> std::convertible_to<std::string>;
};

template <class O>
using OperadValue = std::vector<typename O::value_type>;

template <Operad O>
bool values_equal(const O& op, const OperadValue<O>& a, const OperadValue<O>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!op.equal(a[j], b[j], tol)) return false;
  return true;
}

/// Position of input i inside its fiber.
inline std::size_t fiber_position(const YoungForest& x, std::size_t i) {
  std::size_t k = 0;
  for (std::size_t p = 0; p < i; ++p) k += x.structure[p] == x.structure[i];
  return k;
}

inline bool is_unary_same_color(const YoungForest& x, std::size_t j) {
  const auto fib = x.fiber(j);
  return fib.size() == 1 && x.inputs.color(fib[0]) == x.outputs.color(j);
}

/// The canonical young tree with inputs "0".."n-1" and root "r", colored like the fiber of j.
inline YoungForest canonical_tree(const YoungForest& x, std::size_t j) {
  std::vector<Element> in;
  for (auto i : x.fiber(j)) in.push_back({std::to_string(in.size()), x.inputs.color(i)});
  return young_tree(x.colors(), std::move(in), {"r", x.outputs.color(j)});
}

// ---------------------------------------------------------------------------
// terminal operad

struct TerminalPoint {
  friend bool operator==(TerminalPoint, TerminalPoint) { return true; }
};

struct TerminalOperad {
  using value_type = TerminalPoint;
  std::string name() const { return "terminal"; }
  std::vector<TerminalPoint> act(const Forest& f, std::span<const TerminalPoint> a) const {
    if (a.size() != f.source.outputs.size()) throw error("terminal operad: value does not match the source");
    return std::vector<TerminalPoint>(f.target.outputs.size());
  }
  bool is_identity(const YoungForest& y, std::size_t j, const TerminalPoint&) const {
    return is_unary_same_color(y, j);
  }
  bool equal(const TerminalPoint&, const TerminalPoint&, double) const { return true; }
};

// ---------------------------------------------------------------------------
// decorated trees and the free operad on a pointed collection

/// A forest T : x -> (I; c) with one decoration per vertex of x.
template <class D>
struct DecoratedTree {
  Forest shape;
  std::vector<D> decorations;
};

/// Generators with input colors (in order) and an output color. The name "1"
/// is reserved for the basepoint, the unit at every color.
struct PointedCollection {
  struct Generator {
    std::vector<std::string> inputs;
    std::string output;
  };
  ColorSet colors;
  std::map<std::string, Generator> generators;

  static constexpr const char* basepoint = "1";

  void add(const std::string& name, std::vector<std::string> inputs, std::string output) {
    if (name == basepoint) throw error("the name '1' is reserved for the basepoint");
    for (const auto& c : inputs)
      if (!colors.contains(c)) throw error("generator '" + name + "': unknown color " + c);
    if (!colors.contains(output)) throw error("generator '" + name + "': unknown color " + output);
    generators[name] = {std::move(inputs), std::move(output)};
  }
};

using FreeElement = DecoratedTree<std::string>;

/// Elements are reduced decorated trees over canonical young trees; the
/// symmetric action is free, so isomorphisms must respect slot order at each vertex.
class FreeOperad {
 public:
  using value_type = FreeElement;

  explicit FreeOperad(PointedCollection c) : coll_(std::move(c)) {}
  const PointedCollection& collection() const { return coll_; }
  std::string name() const { return "free"; }

  /// The one-vertex tree decorated by a generator.
  FreeElement generator(const std::string& name) const {
    auto it = coll_.generators.find(name);
    if (it == coll_.generators.end()) throw error("free operad: unknown generator '" + name + "'");
    std::vector<Element> in;
    for (const auto& c : it->second.inputs) in.push_back({std::to_string(in.size()), c});
    auto t = young_tree(coll_.colors, std::move(in), {"r", it->second.output});
    return {identity_forest(t), {name}};
  }

  /// The unit tree at color c.
  FreeElement unit(const std::string& c) const {
    auto t = young_tree(coll_.colors, {{"0", c}}, {"r", c});
    return {Forest{empty_young(coll_.colors), t, {target_output(0)}, {}}, {}};
  }

  std::vector<FreeElement> act(const Forest& f, std::span<const FreeElement> a) const {
    const auto& x = f.source;
    if (a.size() != x.outputs.size()) throw error("free operad: value does not match the source");
    // graft: A : X -> x built from the decorated shapes
    std::vector<Element> verts, slots;
    std::vector<std::size_t> owner;
    std::vector<std::string> names;
    std::vector<std::size_t> vert_off(a.size()), slot_off(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      const auto& s = a[v].shape;
      if (!(s.target == canonical_tree(x, v)) && !same_profile(s.target, x, v))
        throw error("free operad: decoration at " + x.outputs.id(v) + " does not match its vertex");
      vert_off[v] = verts.size();
      slot_off[v] = slots.size();
      for (const auto& e : s.source.outputs.elements()) verts.push_back({"v" + std::to_string(verts.size()), e.color});
      for (std::size_t q = 0; q < s.source.inputs.size(); ++q) {
        slots.push_back({"p" + std::to_string(slots.size()), s.source.inputs.color(q)});
        owner.push_back(vert_off[v] + s.source.structure[q]);
      }
      names.insert(names.end(), a[v].decorations.begin(), a[v].decorations.end());
    }
    YoungForest big(ColoredSet(x.colors(), slots), ColoredSet(x.colors(), verts), owner);
    Forest graft{big, x, std::vector<Slot>(x.inputs.size()), {}};
    for (std::size_t p = 0; p < x.inputs.size(); ++p) {
      const auto v = x.structure[p];
      const auto s = a[v].shape.on_target_inputs[fiber_position(x, p)];
      graft.on_target_inputs[p] =
          s.part == Part::target_output ? target_output(v) : source_input(slot_off[v] + s.index);
    }
    for (std::size_t v = 0; v < a.size(); ++v)
      for (const auto& s : a[v].shape.on_source_outputs)
        graft.on_source_outputs.push_back(s.part == Part::target_output ? target_output(v)
                                                                        : source_input(slot_off[v] + s.index));
    require_valid(graft, "free operad graft");
    const auto whole = compose(f, graft);

    std::vector<FreeElement> out;
    const auto rm = root_map(whole);
    for (std::size_t j = 0; j < f.target.outputs.size(); ++j) {
      auto part = restrict_to_root(whole, j);
      std::vector<std::string> dec;
      for (std::size_t u = 0; u < names.size(); ++u)
        if (rm.source_outputs[u] == j) dec.push_back(names[u]);
      part.target = canonical_tree(f.target, j);
      out.push_back(reduce_units(rename(std::move(part)), std::move(dec)));
    }
    return out;
  }

  bool is_identity(const YoungForest&, std::size_t, const FreeElement& v) const {
    return v.shape.source.outputs.empty() && v.shape.target.inputs.size() == 1;
  }

  bool equal(const FreeElement& a, const FreeElement& b, double) const {
    if (!(a.shape.target == b.shape.target)) return false;
    if (a.decorations.size() != b.decorations.size()) return false;
    const auto& ya = a.shape.source;
    const auto& yb = b.shape.source;
    auto accept = [&](const YoungIso& s) {
      for (std::size_t v = 0; v < a.decorations.size(); ++v)
        if (a.decorations[v] != b.decorations[s.outputs[v]]) return false;
      for (std::size_t i = 0; i < s.inputs.size(); ++i)
        if (fiber_position(ya, i) != fiber_position(yb, s.inputs[i])) return false;
      return true;
    };
    return !find_isos_over(a.shape, b.shape, accept, true).empty();
  }

 private:
  static bool same_profile(const YoungForest& t, const YoungForest& x, std::size_t v) {
    const auto c = canonical_tree(x, v);
    if (t.inputs.size() != c.inputs.size() || t.outputs.size() != 1) return false;
    for (std::size_t i = 0; i < c.inputs.size(); ++i)
      if (t.inputs.color(i) != c.inputs.color(i)) return false;
    return t.outputs.color(0) == c.outputs.color(0);
  }

  static Forest rename(Forest f) {
    auto& s = f.source;
    std::vector<Element> verts, slots;
    for (std::size_t v = 0; v < s.outputs.size(); ++v) verts.push_back({"v" + std::to_string(v), s.outputs.color(v)});
    for (std::size_t p = 0; p < s.inputs.size(); ++p) slots.push_back({"p" + std::to_string(p), s.inputs.color(p)});
    s = YoungForest(ColoredSet(s.colors(), std::move(slots)), ColoredSet(s.colors(), std::move(verts)), s.structure);
    return f;
  }

  FreeElement reduce_units(Forest shape, std::vector<std::string> dec) const {
    for (;;) {
      std::size_t hit = dec.size();
      for (std::size_t v = 0; v < dec.size(); ++v)
        if (dec[v] == PointedCollection::basepoint && is_unary_same_color(shape.source, v)) {
          hit = v;
          break;
        }
      if (hit == dec.size()) break;
      auto d = delete_unary_vertex(shape, hit);
      shape = rename(std::move(d.composite));
      dec.erase(dec.begin() + static_cast<long>(hit));
    }
    for (std::size_t v = 0; v < dec.size(); ++v) {
      if (dec[v] == PointedCollection::basepoint) throw error("free operad: basepoint on a non-unit vertex");
      auto it = coll_.generators.find(dec[v]);
      if (it == coll_.generators.end()) throw error("free operad: unknown generator '" + dec[v] + "'");
      const auto fib = shape.source.fiber(v);
      bool ok = fib.size() == it->second.inputs.size() && shape.source.outputs.color(v) == it->second.output;
      for (std::size_t k = 0; ok && k < fib.size(); ++k) ok = shape.source.inputs.color(fib[k]) == it->second.inputs[k];
      if (!ok) throw error("free operad: generator '" + dec[v] + "' does not fit its vertex");
    }
    return {std::move(shape), std::move(dec)};
  }

  PointedCollection coll_;
};

/// Evaluates a tree decorated by values of `op` in `op`.
template <Operad O>
typename O::value_type counit_eval(const O& op, const DecoratedTree<typename O::value_type>& e) {
  auto r = op.act(e.shape, e.decorations);
  if (r.size() != 1) throw error("counit_eval: shape is not a tree");
  return r.front();
}

}  // namespace folab
