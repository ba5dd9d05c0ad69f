#pragma once

// JSON interchange for young forests, forests, W points, swiss-cheese
// elements and free-operad collections.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "folab/extended_real.hpp"
#include "folab/forest.hpp"
#include "folab/operad.hpp"
#include "folab/swiss_cheese.hpp"
#include "folab/w_construction.hpp"
#include "folab/weight.hpp"

namespace folab {

using json = nlohmann::json;

class parse_error : public error {
 public:
  using error::error;
};

namespace io_detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw parse_error(std::string("malformed ") + what);
  }
}

inline std::vector<Element> elements(const json& j) {
  std::vector<Element> out;
  if (!j.is_array()) throw parse_error("element list must be an array");
  for (const auto& e : j) out.push_back({get<std::string>(field(e, "id"), "id"), get<std::string>(field(e, "color"), "color")});
  return out;
}

inline json elements(const ColoredSet& s) {
  json a = json::array();
  for (const auto& e : s.elements()) a.push_back({{"id", e.id}, {"color", e.color}});
  return a;
}

}  // namespace io_detail

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// colored sets and young forests

inline json to_json(const ColoredSet& s) {
  return {{"colors", s.colors().names()}, {"elements", io_detail::elements(s)}};
}

inline ColoredSet colored_set_from_json(const json& j) {
  try {
    return ColoredSet(ColorSet(io_detail::get<std::vector<std::string>>(io_detail::field(j, "colors"), "colors")),
                      io_detail::elements(io_detail::field(j, "elements")));
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline json to_json(const YoungForest& x) {
  json m = json::object();
  for (std::size_t i = 0; i < x.inputs.size(); ++i) m[x.inputs.id(i)] = x.outputs.id(x.structure[i]);
  return {{"colors", x.colors().names()},
          {"inputs", io_detail::elements(x.inputs)},
          {"outputs", io_detail::elements(x.outputs)},
          {"map", m}};
}

inline json to_json(const WeightedYoungForest& x) {
  auto j = to_json(x.base);
  json w = json::object();
  for (std::size_t v = 0; v < x.weight.size(); ++v) w[x.base.outputs.id(v)] = x.weight[v];
  j["weights"] = w;
  return j;
}

inline YoungForest young_from_json(const json& j) {
  using namespace io_detail;
  try {
    const auto colors = ColorSet(get<std::vector<std::string>>(field(j, "colors"), "colors"));
    auto in = elements(field(j, "inputs"));
    auto out = elements(field(j, "outputs"));
    const auto& m = field(j, "map");
    std::map<std::string, std::string> s;
    for (const auto& e : in) s[e.id] = get<std::string>(field(m, e.id.c_str()), "map");
    if (m.size() != in.size()) throw parse_error("map has entries for unknown inputs");
    return make_young(colors, std::move(in), std::move(out), s);
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

/// Weights keyed by output id; every output must carry one.
inline Weights weights_from_json(const json& j, const YoungForest& x) {
  const auto& w = io_detail::field(j, "weights");
  Weights out;
  for (const auto& e : x.outputs.elements()) out.push_back(io_detail::get<int>(io_detail::field(w, e.id.c_str()), "weight"));
  if (w.size() != out.size()) throw parse_error("weights name unknown outputs");
  return out;
}

// ---------------------------------------------------------------------------
// forests

inline std::string slot_key(const Forest& f, Slot s) {
  switch (s.part) {
    case Part::target_output: return "out:" + f.target.outputs.id(s.index);
    case Part::source_input: return "src_in:" + f.source.inputs.id(s.index);
    case Part::target_input: return "in:" + f.target.inputs.id(s.index);
    default: return "src_out:" + f.source.outputs.id(s.index);
  }
}

inline json to_json(const Forest& f) {
  json a = json::object();
  for (std::size_t i = 0; i < f.on_target_inputs.size(); ++i)
    a["in:" + f.target.inputs.id(i)] = slot_key(f, f.on_target_inputs[i]);
  for (std::size_t v = 0; v < f.on_source_outputs.size(); ++v)
    a["src_out:" + f.source.outputs.id(v)] = slot_key(f, f.on_source_outputs[v]);
  return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"attach", a}};
}

/// Reads a forest without validating it; "srcout:" is accepted for "src_out:".
inline Forest forest_from_json(const json& j) {
  using namespace io_detail;
  Forest f{young_from_json(field(j, "source")), young_from_json(field(j, "target")), {}, {}};
  f.on_target_inputs.assign(f.target.inputs.size(), Slot{Part::target_output, static_cast<std::size_t>(-1)});
  f.on_source_outputs.assign(f.source.outputs.size(), Slot{Part::target_output, static_cast<std::size_t>(-1)});
  std::vector<bool> seen_in(f.on_target_inputs.size()), seen_out(f.on_source_outputs.size());
  auto lookup = [](const ColoredSet& s, const std::string& id) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.id(i) == id) return i;
    throw parse_error("unknown element '" + id + "'");
  };
  auto value = [&](const std::string& v) -> Slot {
    if (v.rfind("out:", 0) == 0) return target_output(lookup(f.target.outputs, v.substr(4)));
    if (v.rfind("src_in:", 0) == 0) return source_input(lookup(f.source.inputs, v.substr(7)));
    throw parse_error("attach value must start with out: or src_in: ('" + v + "')");
  };
  const auto& a = field(j, "attach");
  if (!a.is_object()) throw parse_error("attach must be an object");
  for (const auto& [k, v] : a.items()) {
    const auto target = value(get<std::string>(v, "attach value"));
    if (k.rfind("in:", 0) == 0) {
      const auto i = lookup(f.target.inputs, k.substr(3));
      f.on_target_inputs[i] = target;
      seen_in[i] = true;
    } else if (k.rfind("src_out:", 0) == 0 || k.rfind("srcout:", 0) == 0) {
      const auto u = lookup(f.source.outputs, k.substr(k.find(':') + 1));
      f.on_source_outputs[u] = target;
      seen_out[u] = true;
    } else {
      throw parse_error("attach key must start with in: or src_out: ('" + k + "')");
    }
  }
  for (bool b : seen_in)
    if (!b) throw parse_error("attach is missing a target input");
  for (bool b : seen_out)
    if (!b) throw parse_error("attach is missing a source output");
  return f;
}

// ---------------------------------------------------------------------------
// lengths and labels

inline json to_json(Length l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

inline Length length_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    throw parse_error("a length is a number or \"inf\"");
  }
  if (!j.is_number()) throw parse_error("a length is a number or \"inf\"");
  try {
    return Length(j.get<double>());
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline json labels_to_json(const Forest& g, const Labels& t) {
  json o = json::object();
  for (const auto& [v, len] : t) o[g.source.outputs.id(v)] = to_json(len);
  return o;
}

inline Labels labels_from_json(const json& j, const Forest& g) {
  Labels t;
  if (!j.is_object()) throw parse_error("labels must be an object");
  for (const auto& [k, v] : j.items()) {
    std::optional<std::size_t> idx;
    for (std::size_t u = 0; u < g.source.outputs.size(); ++u)
      if (g.source.outputs.id(u) == k) idx = u;
    if (!idx) throw parse_error("label on unknown vertex '" + k + "'");
    t[*idx] = length_from_json(v);
  }
  return t;
}

// ---------------------------------------------------------------------------
// swiss-cheese data

inline json to_json(const DiscDatum& a) {
  json j = {{"color", a.color}};
  if (a.is_affine()) {
    j["r"] = a.radius;
    j["c"] = a.center;
  } else if (!a.point.empty()) {
    j["q"] = a.point;
  }
  return j;
}

inline DiscDatum datum_from_json(const json& j) {
  using namespace io_detail;
  DiscDatum a;
  a.color = get<std::string>(field(j, "color"), "color");
  if (is_bullet(a.color)) {
    if (j.contains("q")) a.point = get<Vec>(j.at("q"), "point");
  } else {
    a.radius = get<double>(field(j, "r"), "radius");
    a.center = get<Vec>(field(j, "c"), "center");
  }
  return a;
}

inline json sc_data_to_json(const YoungForest& x, const std::vector<ScVertex>& data) {
  json o = json::object();
  for (std::size_t v = 0; v < data.size(); ++v) {
    json l = json::array();
    for (const auto& a : data[v].inputs) l.push_back(to_json(a));
    o[x.outputs.id(v)] = l;
  }
  return o;
}

inline std::vector<ScVertex> sc_data_from_json(const json& j, const YoungForest& x) {
  std::vector<ScVertex> out;
  for (const auto& e : x.outputs.elements()) {
    ScVertex v;
    for (const auto& a : io_detail::field(j, e.id.c_str())) v.inputs.push_back(datum_from_json(a));
    out.push_back(std::move(v));
  }
  if (j.size() != out.size()) throw parse_error("data names unknown roots");
  return out;
}

inline json to_json(const SCElement& e) {
  return {{"d", e.d}, {"shape", to_json(e.shape)}, {"data", sc_data_to_json(e.shape, e.data)}};
}

inline SCElement sc_element_from_json(const json& j) {
  using namespace io_detail;
  SCElement e;
  e.d = get<int>(field(j, "d"), "dimension");
  e.shape = young_from_json(field(j, "shape"));
  e.data = sc_data_from_json(field(j, "data"), e.shape);
  return e;
}

// ---------------------------------------------------------------------------
// free operads

inline json to_json(const PointedCollection& c) {
  json g = json::object();
  for (const auto& [name, gen] : c.generators) g[name] = {{"inputs", gen.inputs}, {"output", gen.output}};
  return {{"colors", c.colors.names()}, {"generators", g}};
}

inline PointedCollection collection_from_json(const json& j) {
  using namespace io_detail;
  try {
    PointedCollection c{ColorSet(get<std::vector<std::string>>(field(j, "colors"), "colors")), {}};
    for (const auto& [name, g] : field(j, "generators").items())
      c.add(name, get<std::vector<std::string>>(field(g, "inputs"), "inputs"), get<std::string>(field(g, "output"), "output"));
    return c;
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

inline json to_json(const FreeElement& e) {
  json d = json::object();
  for (std::size_t v = 0; v < e.decorations.size(); ++v) d[e.shape.source.outputs.id(v)] = e.decorations[v];
  return {{"shape", to_json(e.shape)}, {"decorations", d}};
}

inline FreeElement free_element_from_json(const json& j) {
  FreeElement e{forest_from_json(io_detail::field(j, "shape")), {}};
  const auto& d = io_detail::field(j, "decorations");
  for (const auto& v : e.shape.source.outputs.elements())
    e.decorations.push_back(io_detail::get<std::string>(io_detail::field(d, v.id.c_str()), "decoration"));
  return e;
}

// ---------------------------------------------------------------------------
// W points

template <Operad O>
json decoration_to_json(const O&, const YoungForest&, const OperadValue<O>&) {
  return nullptr;
}

inline json decoration_to_json(const SwissCheese&, const YoungForest& x, const std::vector<ScVertex>& a) {
  return sc_data_to_json(x, a);
}

inline json decoration_to_json(const FreeOperad&, const YoungForest& x, const std::vector<FreeElement>& a) {
  json o = json::object();
  for (std::size_t v = 0; v < a.size(); ++v) o[x.outputs.id(v)] = to_json(a[v]);
  return o;
}

inline std::vector<TerminalPoint> decoration_from_json(const TerminalOperad&, const json&, const YoungForest& x) {
  return std::vector<TerminalPoint>(x.outputs.size());
}

inline std::vector<ScVertex> decoration_from_json(const SwissCheese&, const json& j, const YoungForest& x) {
  return sc_data_from_json(j, x);
}

inline std::vector<FreeElement> decoration_from_json(const FreeOperad&, const json& j, const YoungForest& x) {
  std::vector<FreeElement> out;
  for (const auto& e : x.outputs.elements()) out.push_back(free_element_from_json(io_detail::field(j, e.id.c_str())));
  return out;
}

template <Operad O>
json to_json(const O& op, const std::string& operad_name, const WPoint<O>& p) {
  return {{"shape", to_json(p.shape)},
          {"labels", labels_to_json(p.shape, p.labels)},
          {"operad", operad_name},
          {"decoration", decoration_to_json(op, p.shape.source, p.decoration)}};
}

template <Operad O>
WPoint<O> wpoint_from_json(const O& op, const json& j) {
  auto shape = forest_from_json(io_detail::field(j, "shape"));
  auto labels = labels_from_json(io_detail::field(j, "labels"), shape);
  auto dec = decoration_from_json(op, j.contains("decoration") ? j.at("decoration") : json(nullptr), shape.source);
  return {std::move(shape), std::move(labels), std::move(dec)};
}

}  // namespace folab
