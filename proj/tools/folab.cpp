// folab: command-line front end for forests, W points and swiss-cheese data.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "folab/folab.hpp"

using namespace folab;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kParse = 2;

struct Options {
  std::string verb;
  std::vector<std::string> args;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  double tol = 1e-9;
  std::string operad;
  int d = 2;
  std::string out;
  std::vector<double> point;
  std::string root;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw parse_error("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

const std::string& arg(const Options& o, std::size_t k, const char* what) {
  if (o.args.size() <= k) throw parse_error(std::string("missing argument: ") + what);
  return o.args[k];
}

enum class Kind { young, forest, sc_element, wpoint, collection };

Kind kind_of(const json& j) {
  if (j.contains("labels")) return Kind::wpoint;
  if (j.contains("attach")) return Kind::forest;
  if (j.contains("data") && j.contains("d")) return Kind::sc_element;
  if (j.contains("generators")) return Kind::collection;
  if (j.contains("inputs") && j.contains("outputs")) return Kind::young;
  throw parse_error("unrecognized document");
}

json check_json(const ForestCheck& c) {
  return {{"valid", c.defect == ForestDefect::none}, {"defect", to_string(c.defect)}, {"detail", c.detail}};
}

// ---------------------------------------------------------------------------
// W points over a runtime-selected operad

std::string operad_name(const Options& o, const json& doc) {
  if (!o.operad.empty()) return o.operad;
  if (doc.contains("operad")) return doc.at("operad").get<std::string>();
  return "terminal";
}

template <class F>
int with_operad(const std::string& name, const std::string& base_dir, F&& body) {
  if (name == "terminal") return body(TerminalOperad{});
  if (name.rfind("sc:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(3));
    } catch (const std::exception&) {
      throw parse_error("bad operad name " + name);
    }
    return body(SwissCheese(d));
  }
  if (name.rfind("free:", 0) == 0) {
    std::filesystem::path p = name.substr(5);
    if (!std::filesystem::exists(p) && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return body(FreeOperad(collection_from_json(read_json_file(p.string()))));
  }
  throw parse_error("unknown operad " + name);
}

std::string dir_of(const std::string& file) { return std::filesystem::path(file).parent_path().string(); }

// ---------------------------------------------------------------------------
// verbs

int cmd_validate(const Options& o) {
  const auto& file = arg(o, 0, "file");
  const auto doc = read_json_file(file);
  switch (kind_of(doc)) {
    case Kind::young: young_from_json(doc); emit(o, json{{"valid", true}}); return kOk;
    case Kind::collection: collection_from_json(doc); emit(o, json{{"valid", true}}); return kOk;
    case Kind::forest: {
      const auto c = validate_forest(forest_from_json(doc));
      emit(o, check_json(c));
      return c.defect == ForestDefect::none ? kOk : kCounterexample;
    }
    case Kind::sc_element: {
      const auto c = validate_sc(sc_element_from_json(doc));
      emit(o, json{{"valid", static_cast<bool>(c)}, {"defect", to_string(c.defect)}, {"detail", c.detail}});
      return c ? kOk : kCounterexample;
    }
    case Kind::wpoint:
      return with_operad(operad_name(o, doc), dir_of(file), [&](const auto& op) {
        using O = std::decay_t<decltype(op)>;
        try {
          require_valid(wpoint_from_json<O>(op, doc));
        } catch (const parse_error&) {
          throw;
        } catch (const error& e) {
          emit(o, json{{"valid", false}, {"detail", e.what()}});
          return kCounterexample;
        }
        emit(o, json{{"valid", true}});
        return kOk;
      });
  }
  return kOk;
}

int cmd_compose(const Options& o) {
  const auto a = read_json_file(arg(o, 0, "outer forest"));
  const auto b = read_json_file(arg(o, 1, "inner forest or element"));
  const auto f = forest_from_json(a);
  if (auto c = validate_forest(f); c.defect != ForestDefect::none) throw parse_error("first forest is invalid: " + c.detail);
  if (kind_of(b) == Kind::sc_element) {
    emit(o, to_json(compose_sc(f, sc_element_from_json(b))));
    return kOk;
  }
  const auto g = forest_from_json(b);
  if (auto c = validate_forest(g); c.defect != ForestDefect::none) throw parse_error("second forest is invalid: " + c.detail);
  emit(o, to_json(compose(f, g)));
  return kOk;
}

json classification_json(const Forest& f) {
  const auto c = classify_edges(f);
  auto ids = [](const ColoredSet& s, const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(s.id(i));
    return a;
  };
  json units = json::array();
  for (const auto& [i, j] : c.unit_edges) units.push_back({f.target.inputs.id(i), f.target.outputs.id(j)});
  const auto rm = root_map(f);
  json roots = json::object();
  for (std::size_t v = 0; v < rm.source_outputs.size(); ++v) roots[f.source.outputs.id(v)] = f.target.outputs.id(rm.source_outputs[v]);
  json per = json::object();
  const auto e = internal_edges_per_root(f);
  for (std::size_t j = 0; j < e.size(); ++j) per[f.target.outputs.id(j)] = e[j];
  return {{"unit_edges", units},
          {"leaves", ids(f.target.inputs, c.leaves)},
          {"root_edges", ids(f.source.outputs, c.root_edges)},
          {"internal_edges", ids(f.source.outputs, c.internal_edges)},
          {"root_map", roots},
          {"internal_edges_per_root", per}};
}

int cmd_classify(const Options& o) {
  const auto doc = read_json_file(arg(o, 0, "file"));
  if (kind_of(doc) == Kind::sc_element) {
    const auto e = sc_element_from_json(doc);
    std::size_t j = 0;
    if (!o.root.empty()) j = e.shape.outputs.index_of(o.root);
    if (o.point.empty()) throw parse_error("classify of an element needs --point");
    const auto& v = e.data.at(j);
    json r = {{"in_realization", realization_contains(v, o.point)}};
    if (r["in_realization"]) {
      const auto t = boundary_classify(v, o.point);
      json tags = json::array();
      if (t.h_boundary) tags.push_back("h_boundary");
      if (t.rt_boundary) tags.push_back("rt_boundary");
      for (auto i : t.inputs) tags.push_back("input_" + std::to_string(i));
      r["tags"] = tags;
    }
    emit(o, r);
    return kOk;
  }
  const auto f = forest_from_json(doc);
  if (auto c = validate_forest(f); c.defect != ForestDefect::none) throw parse_error("forest is invalid: " + c.detail);
  emit(o, classification_json(f));
  return kOk;
}

int cmd_reduce(const Options& o) {
  const auto& file = arg(o, 0, "point");
  const auto doc = read_json_file(file);
  const auto name = operad_name(o, doc);
  return with_operad(name, dir_of(file), [&](const auto& op) {
    using O = std::decay_t<decltype(op)>;
    auto p = wpoint_from_json<O>(op, doc);
    try {
      require_valid(p);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
    auto r = reduce(op, p);
    json out = to_json(op, name, r);
    if (o.args.size() > 1) {
      auto q = wpoint_from_json<O>(op, read_json_file(o.args[1]));
      require_valid(q);
      out = {{"reduced", out}, {"equal", w_equal(op, p, q, o.tol)}};
    }
    emit(o, out);
    return kOk;
  });
}

int cmd_check(const Options& o) {
  const auto& name = arg(o, 0, "suite");
  auto suite = find_suite(name);
  if (!suite) throw parse_error("unknown suite " + name);
  const auto r = run_suite(name, *suite, o.seed, o.count);
  emit(o, r.to_json());
  return r.failure ? kCounterexample : kOk;
}

json gen_one(const std::string& kind, Rng& rng, const Options& o) {
  GenParams p;
  if (kind == "young") return to_json(random_young(rng, random_color_set(rng, p), 4, 3));
  if (kind == "forest") return to_json(random_chain(rng, 1, p).front());
  if (kind == "chain") {
    auto c = random_chain(rng, 2, p);
    return {{"g", to_json(c[0])}, {"f", to_json(c[1])}};
  }
  if (kind == "weighted") {
    auto f = random_chain(rng, 1, p).front();
    auto wx = random_source_weights(rng, f.source, 3);
    return {{"forest", to_json(f)},
            {"source", to_json(WeightedYoungForest(f.source, wx))},
            {"target", to_json(WeightedYoungForest(f.target, tight_target_weights(rng, f, wx, 2)))}};
  }
  if (kind == "wpoint") {
    auto g = random_chain(rng, 1, p).front();
    TerminalOperad op;
    return to_json(op, "terminal", make_point<TerminalOperad>(g, random_labels(rng, g), std::vector<TerminalPoint>(g.source.outputs.size())));
  }
  if (kind == "sc") {
    for (int t = 0; t < 200; ++t) {
      auto x = random_sc_young(rng, 4, 2, false);
      if (!sc_realizable_shape(x, o.d)) continue;
      if (auto a = random_sc_value(rng, o.d, x)) return to_json(SCElement{o.d, x, *a});
    }
    throw error("gen sc: sampler found no configuration");
  }
  if (kind == "sc-bullet") {
    for (int t = 0; t < 200; ++t) {
      auto x = random_bullet_young(rng, 2);
      if (auto a = random_sc_value(rng, o.d, x)) return to_json(SCElement{o.d, x, *a});
    }
    throw error("gen sc-bullet: sampler found no configuration");
  }
  if (kind == "ch-tree") return to_json(random_ch_tree(rng, 4));
  throw parse_error("unknown kind " + kind + " (young | forest | chain | weighted | wpoint | sc | sc-bullet | ch-tree)");
}

int cmd_gen(const Options& o) {
  const auto& kind = arg(o, 0, "kind");
  if (o.count == 1) {
    auto rng = case_rng(o.seed, 0);
    emit(o, gen_one(kind, rng, o));
    return kOk;
  }
  json all = json::array();
  for (std::size_t n = 0; n < o.count; ++n) {
    auto rng = case_rng(o.seed, n);
    all.push_back(gen_one(kind, rng, o));
  }
  emit(o, all);
  return kOk;
}

int cmd_render(const Options& o) {
  const auto e = sc_element_from_json(read_json_file(arg(o, 0, "element")));
  if (e.d != 2) throw parse_error("render draws d = 2 elements only");
  std::size_t j = 0;
  if (!o.root.empty()) j = e.shape.outputs.index_of(o.root);
  if (j >= e.data.size()) throw parse_error("element has no roots");
  emit(o, render_vertex_svg(e.data[j], e.shape.outputs.color(j)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folab: forests, W points and swiss-cheese configurations"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--seed", o.seed, "random seed (FOLAB_SEED overrides)");
  app.add_option("--count", o.count, "number of cases or instances");
  app.add_option("--tol", o.tol, "tolerance for numeric comparisons");
  app.add_option("--operad", o.operad, "terminal | sc:<d> | free:<collection.json>");
  app.add_option("--d", o.d, "dimension for generated swiss-cheese data");
  app.add_option("--out", o.out, "output path (stdout by default)");
  app.add_option("--point", o.point, "point for classify")->delimiter(',');
  app.add_option("--root", o.root, "root id for classify and render");
  app.add_option("verb", o.verb, "validate | compose | classify | reduce | check | gen | render")->required();
  app.add_option("args", o.args, "files, suite name or kind");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (const char* s = std::getenv("FOLAB_SEED")) {
    try {
      o.seed = std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "folab: FOLAB_SEED is not a number\n";
      return kParse;
    }
  }
  try {
    if (o.verb == "validate") return cmd_validate(o);
    if (o.verb == "compose") return cmd_compose(o);
    if (o.verb == "classify") return cmd_classify(o);
    if (o.verb == "reduce") return cmd_reduce(o);
    if (o.verb == "check") return cmd_check(o);
    if (o.verb == "gen") return cmd_gen(o);
    if (o.verb == "render") return cmd_render(o);
    std::cerr << "folab: unknown verb '" << o.verb << "'\n";
    return kParse;
  } catch (const parse_error& e) {
    std::cerr << "folab: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "folab: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "folab: " << e.what() << "\n";
    return kParse;
  }
}
