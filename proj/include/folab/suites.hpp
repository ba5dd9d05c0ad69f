#pragma once

// Seeded property suites with size-based shrinking of counterexamples.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "folab/forest.hpp"
#include "folab/io.hpp"
#include "folab/random.hpp"
#include "folab/swiss_cheese.hpp"
#include "folab/trees_alpha.hpp"
#include "folab/w_construction.hpp"
#include "folab/weight.hpp"

namespace folab {

/// Generator size; larger levels allow more elements and edges.
struct SuiteSize {
  int level = 4;  // 0..4

  GenParams params() const {
    GenParams p;
    p.max_elements = static_cast<std::size_t>(2 + 3 * level / 2);
    p.max_new_edges = static_cast<std::size_t>(std::min(2, level));
    p.max_colors = static_cast<std::size_t>(1 + std::min(2, level / 2));
    return p;
  }
};

struct Counterexample {
  std::size_t case_index = 0;
  int level = 0;
  std::string what;
  json instance;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::optional<Counterexample> failure;

  json to_json() const {
    json j = {{"suite", suite}, {"seed", seed}, {"cases", cases}, {"ok", !failure}};
    if (failure)
      j["counterexample"] = {{"case", failure->case_index}, {"level", failure->level}, {"what", failure->what},
                             {"instance", failure->instance}};
    return j;
  }
};

/// One case: returns a description and instance on failure.
using SuiteCase = std::function<std::optional<std::pair<std::string, json>>(Rng&, const SuiteSize&)>;

inline Rng case_rng(std::uint64_t seed, std::size_t n) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(n)};
  return Rng(s);
}

/// Runs `count` cases; on failure re-runs the failing case at smaller sizes
/// and reports the smallest size that still fails.
inline SuiteReport run_suite(const std::string& name, const SuiteCase& body, std::uint64_t seed, std::size_t count) {
  SuiteReport r{name, seed, 0, std::nullopt};
  auto run = [&](std::size_t n, int level) -> std::optional<std::pair<std::string, json>> {
    auto rng = case_rng(seed, n);
    try {
      return body(rng, SuiteSize{level});
    } catch (const std::exception& e) {
      return std::pair<std::string, json>{std::string("exception: ") + e.what(), nullptr};
    }
  };
  for (std::size_t n = 0; n < count; ++n) {
    ++r.cases;
    auto bad = run(n, 4);
    if (!bad) continue;
    Counterexample c{n, 4, bad->first, bad->second};
    for (int level = 0; level < 4; ++level)
      if (auto smaller = run(n, level)) {
        c = {n, level, smaller->first, smaller->second};
        break;
      }
    r.failure = std::move(c);
    break;
  }
  return r;
}

using CaseResult = std::optional<std::pair<std::string, json>>;

inline CaseResult fail(std::string what, json instance) { return std::pair<std::string, json>{std::move(what), std::move(instance)}; }

// ---------------------------------------------------------------------------
// suites

inline CaseResult forest_axioms_case(Rng& rng, const SuiteSize& size) {
  auto c = random_chain(rng, 3, size.params());
  const auto &h = c[0], &g = c[1], &f = c[2];
  for (const auto* x : {&h, &g, &f})
    if (!validate_forest(*x)) return fail("generated forest is invalid", to_json(*x));
  const auto gf = compose(g, f);
  if (!validate_forest(gf)) return fail("composite is invalid", json{{"g", to_json(g)}, {"f", to_json(f)}});
  if (!(compose(h, gf) == compose(compose(h, g), f)))
    return fail("composition is not associative", json{{"h", to_json(h)}, {"g", to_json(g)}, {"f", to_json(f)}});
  if (!(compose(f, identity_forest(f.source)) == f) || !(compose(identity_forest(f.target), f) == f))
    return fail("identity law fails", to_json(f));
  const auto rgf = root_map(gf), rg = root_map(g), rf = root_map(f);
  for (std::size_t v = 0; v < rf.source_outputs.size(); ++v)
    if (rgf.source_outputs[v] != rg.source_outputs[rf.source_outputs[v]])
      return fail("root map does not factor", json{{"g", to_json(g)}, {"f", to_json(f)}});
  return std::nullopt;
}

inline CaseResult weights_case(Rng& rng, const SuiteSize& size) {
  auto c = random_chain(rng, 2, size.params());
  const auto &g = c[0], &f = c[1];
  const auto wx = random_source_weights(rng, f.source, 3);
  const auto wy = tight_target_weights(rng, f, wx, 2);
  const auto wz = tight_target_weights(rng, g, wy, 2);
  const auto r = weighted_compose(g, f, wx, wy, wz);
  json inst = {{"g", to_json(g)}, {"f", to_json(f)}, {"wx", wx}, {"wy", wy}, {"wz", wz}};
  if (!r.preconditions) return fail("generated weights are not weighted", inst);
  if (!r.certified) return fail("composite of weighted forests is not weighted", inst);
  const auto b = edge_bookkeeping(g, f);
  for (std::size_t j = 0; j < b.composite.size(); ++j) {
    long expected = r.edge_formula[j];
    if (b.composite_is_unit[j] && b.inner_unit[j] > 0) ++expected;
    if (r.edges[j] != expected) return fail("edge count of the composite is off at " + g.target.outputs.id(j), inst);
  }
  return std::nullopt;
}

/// A composable SC-legal pair g, f with a random value over f's source.
struct ScTriple {
  int d;
  Forest g, f;
  std::vector<ScVertex> alpha;
};

inline std::optional<ScTriple> random_sc_triple(Rng& rng, const SuiteSize& size, int d) {
  auto p = size.params();
  p.max_new_edges = std::max<std::size_t>(p.max_new_edges, 1);
  for (int t = 0; t < 50; ++t) {
    auto z = random_sc_young(rng, std::min<std::size_t>(3, p.max_elements), 2, false);
    if (!sc_realizable_shape(z, d)) continue;
    auto g = random_sc_forest_into(rng, z, d, p);
    auto f = random_sc_forest_into(rng, g.source, d, p);
    auto a = random_sc_value(rng, d, f.source);
    if (a) return ScTriple{d, std::move(g), std::move(f), std::move(*a)};
  }
  return std::nullopt;
}

inline CaseResult w_relations_case(Rng& rng, const SuiteSize& size) {
  auto c = random_chain(rng, 3, size.params());
  const auto &h = c[0], &g = c[1], &f = c[2];
  auto t = random_labels(rng, g);
  if (!(w_infty(h, compose(g, f), w_sigma(g, f, t)) == w_sigma(compose(h, g), f, w_infty(h, g, t))))
    return fail("W_Σ and W_∞ do not commute", json{{"h", to_json(h)}, {"g", to_json(g)}, {"f", to_json(f)}});

  TerminalOperad term;
  std::vector<TerminalPoint> a(f.source.outputs.size());
  auto lhs = make_point<TerminalOperad>(compose(g, f), w_sigma(g, f, t), a);
  auto rhs = make_point<TerminalOperad>(g, t, term.act(f, a));
  if (!w_equal(term, lhs, rhs, 0)) return fail("coend relation fails for the terminal operad", to_json(term, "terminal", lhs));
  if (!w_equal(term, reduce(term, lhs, ReductionOrder::random, &rng), lhs, 0))
    return fail("reduction is not confluent", to_json(term, "terminal", lhs));

  auto s = random_sc_triple(rng, size, 2);
  if (!s) return std::nullopt;
  SwissCheese sc(2);
  auto ts = random_labels(rng, s->g);
  auto l2 = make_point<SwissCheese>(compose(s->g, s->f), w_sigma(s->g, s->f, ts), s->alpha);
  auto r2 = make_point<SwissCheese>(s->g, ts, sc.act(s->f, s->alpha));
  if (!w_equal(sc, l2, r2, 1e-9)) return fail("coend relation fails for SC_2", to_json(sc, "sc:2", l2));
  if (!w_equal(sc, reduce(sc, l2, ReductionOrder::random, &rng), l2, 1e-9))
    return fail("reduction is not confluent for SC_2", to_json(sc, "sc:2", l2));
  return std::nullopt;
}

inline CaseResult sc_functoriality_case(Rng& rng, const SuiteSize& size) {
  const int d = 1 + static_cast<int>(uniform(rng, 0, 2));
  if (auto s = random_sc_triple(rng, size, d)) {
    SCElement e{d, s->f.source, s->alpha};
    auto one = compose_sc(compose(s->g, s->f), e);
    auto two = compose_sc(s->g, compose_sc(s->f, e));
    if (!values_equal(SwissCheese(d), one.data, two.data, 1e-9))
      return fail("SC(gf) differs from SC(g)SC(f)", json{{"g", to_json(s->g)}, {"f", to_json(s->f)}, {"e", to_json(e)}});
  }
  auto y = random_bullet_young(rng, size.level < 2 ? 1 : 3);
  auto g = random_bullet_forest_into(rng, y, size.params());
  auto f = random_bullet_forest_into(rng, g.source, size.params());
  if (!(project_p(compose(g, f)) == compose(project_p(g), project_p(f))))
    return fail("p is not functorial", json{{"g", to_json(g)}, {"f", to_json(f)}});
  const int db = 2 + static_cast<int>(uniform(rng, 0, 1));
  if (auto a = random_sc_value(rng, db, f.source)) {
    SCElement e{db, f.source, *a};
    auto lhs = project_p(compose_sc(f, e));
    auto rhs = compose_sc(project_p(f), project_p(e));
    if (!values_equal(SwissCheese(db), lhs.data, rhs.data, 1e-12))
      return fail("p does not commute with composition", json{{"f", to_json(f)}, {"e", to_json(e)}});
  }
  return std::nullopt;
}

inline CaseResult trees_alpha_case(Rng& rng, const SuiteSize& size) {
  auto t = random_ch_tree(rng, static_cast<std::size_t>(1 + std::min(3, size.level)));
  auto objs = trees_alpha_objects(t);
  auto expected = expected_trees_alpha_morphisms(t, objs);
  for (std::size_t a = 0; a < objs.size(); ++a) {
    if (!(project_p(objs[a].S).source == objs[a].nu.target)) return fail("ν does not land in pS", to_json(t));
    for (std::size_t b = 0; b < objs.size(); ++b) {
      const auto n = trees_alpha_morphisms(objs[a], objs[b]).size();
      if (n != (expected[a][b] ? 1u : 0u))
        return fail(objs[a].name + " -> " + objs[b].name + ": " + std::to_string(n) + " morphisms", to_json(t));
    }
  }
  return std::nullopt;
}

inline const std::vector<std::pair<std::string, SuiteCase>>& suites() {
  static const std::vector<std::pair<std::string, SuiteCase>> all = {
      {"forest-axioms", forest_axioms_case}, {"weights", weights_case},         {"w-relations", w_relations_case},
      {"sc-functoriality", sc_functoriality_case}, {"trees-alpha", trees_alpha_case}};
  return all;
}

inline std::optional<SuiteCase> find_suite(const std::string& name) {
  for (const auto& [n, c] : suites())
    if (n == name) return c;
  return std::nullopt;
}

}  // namespace folab
