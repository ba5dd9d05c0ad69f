#pragma once

// Finite K-colored sets and the (un)colored maps between them.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set K of colors. Order is significant only for iteration.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw error("color set must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw error("duplicate color '" + names_[i] + "'");
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  bool contains(std::string_view c) const {
    for (const auto& n : names_)
      if (n == c) return true;
    return false;
  }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Ordered union of two color sets: the names of `a`, then the new names of `b`.
inline ColorSet merge(const ColorSet& a, const ColorSet& b) {
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names())
    if (!a.contains(n)) names.push_back(n);
  return ColorSet(std::move(names));
}

struct Element {
  std::string id;
  std::string color;
  friend bool operator==(const Element&, const Element&) = default;
};

/// A finite set with a coloring into a ColorSet. Elements keep their insertion order.
class ColoredSet {
 public:
  ColoredSet() = default;
  ColoredSet(ColorSet colors, std::vector<Element> elements)
      : colors_(std::move(colors)), elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto& e = elements_[i];
      if (!colors_.contains(e.color))
        throw error("element '" + e.id + "' has unknown color '" + e.color + "'");
      if (!index_.emplace(e.id, i).second) throw error("duplicate element id '" + e.id + "'");
    }
  }

  const ColorSet& colors() const { return colors_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Element& operator[](std::size_t i) const { return elements_.at(i); }
  const std::string& id(std::size_t i) const { return elements_.at(i).id; }
  const std::string& color(std::size_t i) const { return elements_.at(i).color; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view id) const {
    auto i = find(id);
    if (!i) throw error("no element '" + std::string(id) + "'");
    return *i;
  }

  std::size_t count_color(std::string_view c) const {
    std::size_t n = 0;
    for (const auto& e : elements_) n += (e.color == c);
    return n;
  }

  friend bool operator==(const ColoredSet& a, const ColoredSet& b) {
    return a.colors_ == b.colors_ && a.elements_ == b.elements_;
  }

 private:
  ColorSet colors_;
  std::vector<Element> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A total function between colored sets, stored by element index.
/// Color preservation is a property, not an invariant.
struct ColoredMap {
  ColoredSet domain;
  ColoredSet codomain;
  std::vector<std::size_t> mapping;

  ColoredMap() = default;
  ColoredMap(ColoredSet dom, ColoredSet cod, std::vector<std::size_t> m)
      : domain(std::move(dom)), codomain(std::move(cod)), mapping(std::move(m)) {
    if (mapping.size() != domain.size()) throw error("map is not total on its domain");
    for (auto t : mapping)
      if (t >= codomain.size()) throw error("map leaves its codomain");
  }

  /// Builds a map from an id -> id table.
  static ColoredMap from_ids(ColoredSet dom, ColoredSet cod,
                             const std::map<std::string, std::string>& table) {
    std::vector<std::size_t> m;
    m.reserve(dom.size());
    for (const auto& e : dom.elements()) {
      auto it = table.find(e.id);
      if (it == table.end()) throw error("map is not total: missing '" + e.id + "'");
      m.push_back(cod.index_of(it->second));
    }
    return ColoredMap(std::move(dom), std::move(cod), std::move(m));
  }

  bool preserves_colors() const {
    for (std::size_t i = 0; i < mapping.size(); ++i)
      if (domain.color(i) != codomain.color(mapping[i])) return false;
    return true;
  }

  bool is_bijection() const {
    if (domain.size() != codomain.size()) return false;
    std::vector<bool> hit(codomain.size(), false);
    for (auto t : mapping) {
      if (hit[t]) return false;
      hit[t] = true;
    }
    return true;
  }

  friend bool operator==(const ColoredMap&, const ColoredMap&) = default;
};

inline bool is_colored_iso(const ColoredMap& m) { return m.is_bijection() && m.preserves_colors(); }

/// g after f.
inline ColoredMap compose(const ColoredMap& g, const ColoredMap& f) {
  if (!(f.codomain == g.domain)) throw error("compose: codomain/domain mismatch");
  std::vector<std::size_t> m(f.mapping.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.mapping[f.mapping[i]];
  return ColoredMap(f.domain, g.codomain, std::move(m));
}

inline std::string left_tag(std::string_view id) { return "L:" + std::string(id); }
inline std::string right_tag(std::string_view id) { return "R:" + std::string(id); }

/// Disjoint union; ids become "L:<id>" and "R:<id>".
inline ColoredSet disjoint_union(const ColoredSet& a, const ColoredSet& b) {
  if (!(a.colors() == b.colors())) throw error("disjoint_union: color sets differ");
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  for (const auto& e : a.elements()) out.push_back({left_tag(e.id), e.color});
  for (const auto& e : b.elements()) out.push_back({right_tag(e.id), e.color});
  return ColoredSet(a.colors(), std::move(out));
}

}  // namespace folab
