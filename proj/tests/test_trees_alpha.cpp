#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "folab/iso.hpp"
#include "folab/trees_alpha.hpp"

using namespace folab;
using namespace folab::fixtures;

namespace {

/// The running forest with every element colored h.
Forest running_t() {
  const auto k = sc_colors();
  auto x = make_young(k, {{"p", kHalf}, {"q", kHalf}, {"s", kHalf}, {"t", kHalf}}, {{"u", kHalf}, {"v", kHalf}},
                      {{"p", "v"}, {"q", "v"}, {"s", "u"}, {"t", "u"}});
  auto y = young_tree(k, {{"1", kHalf}, {"2", kHalf}, {"3", kHalf}}, {"r", kHalf});
  return make_forest(x, y, {{"in:1", "src_in:s"}, {"in:2", "src_in:t"}, {"in:3", "src_in:q"},
                            {"src_out:u", "src_in:p"}, {"src_out:v", "out:r"}});
}

bool isomorphic(const Forest& a, const Forest& b) { return !find_isos(a, b, 1).empty(); }

}  // namespace

TEST(TreesAlpha, GammaTrees) {
  auto g0 = gamma_tree(0);
  EXPECT_TRUE(validate_forest(g0));
  EXPECT_TRUE(g0.source.outputs.empty());
  auto g1 = gamma_tree(1);
  EXPECT_TRUE(validate_forest(g1));
  EXPECT_EQ(g1.source.outputs.size(), 1u);
  EXPECT_EQ(g1.source.outputs.color(0), kHalfDot);
}

TEST(TreesAlpha, VertexObjectProjectsToT) {
  auto t = running_t();
  const auto v = t.source.outputs.index_of("v");
  auto o = build_s_vertex(t, v, 0);
  const auto& x = o.S.source;
  std::size_t dots = 0;
  for (std::size_t i = 0; i < x.inputs.size(); ++i)
    if (x.inputs.color(i) == kFullDot) {
      ++dots;
      EXPECT_EQ(x.outputs.id(x.structure[i]), "L:v");
    }
  EXPECT_EQ(dots, 1u);
  EXPECT_TRUE(isomorphic(project_p(o.S), t));
  EXPECT_TRUE(is_bullet_shape(o.S.target));
}

TEST(TreesAlpha, InsertionFactorsT) {
  auto t = running_t();
  for (std::size_t i = 0; i < t.source.inputs.size(); ++i) {
    auto ins = insert_unary(t, i);
    EXPECT_EQ(compose(ins.tree, ins.nu), t);
  }
  auto root = insert_unary(t, std::nullopt);
  EXPECT_EQ(compose(root.tree, root.nu), t);
}

TEST(TreesAlpha, EdgeObjectsProjectToInsertion) {
  auto t = running_t();
  const auto p = t.source.inputs.index_of("p");
  auto ins = insert_unary(t, p);
  for (int k = 0; k < 2; ++k) {
    auto o = build_s_edge(t, p, k);
    EXPECT_TRUE(isomorphic(project_p(o.S), ins.tree));
    EXPECT_TRUE(o.in_edge.has_value());
    EXPECT_TRUE(o.out_edge.has_value());
    EXPECT_EQ(o.bullet_edge.has_value(), k == 1);
  }
}

TEST(TreesAlpha, BulletEdgeIsTheOnlyHalfDotEdge) {
  auto t = running_t();
  auto o = build_s_edge(t, t.source.inputs.index_of("q"), 1);
  std::size_t found = 0;
  for (std::size_t v = 0; v < o.S.source.outputs.size(); ++v)
    if (is_internal_edge(o.S, v) && o.S.source.outputs.color(v) == kHalfDot) {
      ++found;
      EXPECT_EQ(o.bullet_edge, v);
    }
  EXPECT_EQ(found, 1u);
  EXPECT_FALSE(o.in_edge.has_value());
}

TEST(TreesAlpha, UniqueCollapseOfTheBulletEdge) {
  auto t = running_t();
  for (std::optional<std::size_t> i : {std::optional<std::size_t>{0}, std::optional<std::size_t>{}}) {
    auto a = build_s_edge(t, i, 1), b = build_s_edge(t, i, 0);
    EXPECT_EQ(trees_alpha_morphisms(a, b).size(), 1u);
    EXPECT_TRUE(trees_alpha_morphisms(b, a).empty());
  }
}

TEST(TreesAlpha, MorphismsOfTheRunningTree) {
  auto t = running_t();
  auto objs = trees_alpha_objects(t);
  auto expected = expected_trees_alpha_morphisms(t, objs);
  std::size_t arrows = 0;
  for (const auto& row : expected) arrows += std::count(row.begin(), row.end(), true);
  EXPECT_GT(arrows, 2 * objs.size());
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      EXPECT_EQ(trees_alpha_morphisms(objs[a], objs[b]).size(), expected[a][b] ? 1u : 0u)
          << objs[a].name << " -> " << objs[b].name;
}

TEST(TreesAlpha, MorphismsOfRandomTrees) {
  Rng rng(21);
  for (int n = 0; n < 5; ++n) {
    auto t = random_ch_tree(rng, 3);
    auto objs = trees_alpha_objects(t);
    auto expected = expected_trees_alpha_morphisms(t, objs);
    for (std::size_t a = 0; a < objs.size(); ++a)
      for (std::size_t b = 0; b < objs.size(); ++b)
        ASSERT_EQ(trees_alpha_morphisms(objs[a], objs[b]).size(), expected[a][b] ? 1u : 0u)
            << objs[a].name << " -> " << objs[b].name;
  }
}

TEST(TreesAlpha, FactorizationsIncludeIdentity) {
  auto t = running_t();
  auto o = build_s_vertex(t, 0, 1);
  auto phis = find_factorizations(o.S, o.S);
  ASSERT_EQ(phis.size(), 1u);
  EXPECT_EQ(phis[0], identity_forest(o.S.source));
}

TEST(WAlpha, Membership) {
  auto t = running_t();
  auto o = build_s_edge(t, t.source.inputs.index_of("p"), 1);
  const auto in = *o.in_edge, out = *o.out_edge, dot = *o.bullet_edge;
  EXPECT_TRUE(w_alpha_membership(o, {{in, Length(1)}, {out, Length(2)}, {dot, Length(5)}}, Length(3), WAlphaVariant::plain));
  EXPECT_FALSE(w_alpha_membership(o, {{in, Length(1)}, {out, Length(1)}, {dot, Length(5)}}, Length(3), WAlphaVariant::plain));
  EXPECT_TRUE(w_alpha_membership(o, {{in, Length(0)}, {out, Length(3)}, {dot, kInfinity}}, Length(3), WAlphaVariant::one));
  EXPECT_FALSE(w_alpha_membership(o, {{in, Length(1)}, {out, Length(2)}, {dot, Length(5)}}, Length(3), WAlphaVariant::one));
  EXPECT_THROW(w_alpha_membership(o, {{in, Length(1)}}, Length(3), WAlphaVariant::plain), error);
}

TEST(WAlpha, VertexObjectsCarryOnlyTheBulletEdge) {
  auto t = running_t();
  auto o = build_s_vertex(t, 0, 1);
  EXPECT_EQ(o.alpha_edges().size(), 1u);
  EXPECT_TRUE(w_alpha_membership(o, {{*o.bullet_edge, Length(2)}}, Length(3), WAlphaVariant::plain));
  EXPECT_TRUE(build_s_vertex(t, 0, 0).alpha_edges().empty());
}

TEST(RMap, Endpoints) {
  EXPECT_EQ(r_map(Length(0), Length(3)), Length(0));
  EXPECT_EQ(r_map(Length(3), Length(0)), kInfinity);
  for (double s : {0.1, 1.0, 7.0}) EXPECT_NEAR(r_map(Length(s), Length(s)).value(), 1.0, 1e-15);
  EXPECT_EQ(r_map(kInfinity, kInfinity), Length(1));
  EXPECT_THROW(r_map(Length(0), Length(0)), error);
}

TEST(RMap, IncreasingInOuterCoordinate) {
  for (double si : {0.2, 1.0, 4.0}) {
    double prev = -1;
    for (int n = 0; n <= 40; ++n) {
      const double v = r_map(Length(n * 0.25), Length(si)).value();
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(RMap, ContinuousAlongTheConstraintLine) {
  for (double t : {0.5, 2.0, 9.0}) {
    for (int n = 1; n < 100; ++n) {
      const double a = t * n / 100.0, h = 1e-7;
      const double ra = r_map(Length(a), Length(t - a)).value();
      const double rb = r_map(Length(a + h), Length(t - a - h)).value();
      EXPECT_LT(std::abs(rb - ra), 1e-4 * (1 + ra * ra));
    }
  }
  // t = ∞: s_i = ∞ gives r = 1 - e^{-s_o}
  for (double a : {0.1, 1.0, 5.0}) EXPECT_NEAR(r_map(Length(a), kInfinity).value(), -std::expm1(-a), 1e-15);
}
