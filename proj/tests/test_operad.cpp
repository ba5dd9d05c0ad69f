#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "folab/operad.hpp"
#include "folab/random.hpp"

using namespace folab;
using namespace folab::fixtures;

namespace {

FreeOperad binary_free() {
  PointedCollection c{one_color(), {}};
  c.add("m", {"a", "a"}, "a");
  c.add("u", {"a"}, "a");
  c.add("e", {}, "a");
  return FreeOperad(c);
}

/// The forest corolla_2 -> corolla_3 grafting a second binary vertex into input 0.
Forest graft_into_first() {
  auto x = make_young(one_color(), {{"p", "a"}, {"q", "a"}, {"s", "a"}, {"t", "a"}}, {{"lo", "a"}, {"hi", "a"}},
                      {{"p", "lo"}, {"q", "lo"}, {"s", "hi"}, {"t", "hi"}});
  auto y = young_tree(one_color(), {{"0", "a"}, {"1", "a"}, {"2", "a"}}, {"r", "a"});
  return make_forest(x, y, {{"in:0", "src_in:s"}, {"in:1", "src_in:t"}, {"in:2", "src_in:q"},
                            {"src_out:hi", "src_in:p"}, {"src_out:lo", "out:r"}});
}

}  // namespace

TEST(FreeOperad, GraftingTwoGenerators) {
  auto op = binary_free();
  auto f = graft_into_first();
  std::vector<FreeElement> a{op.generator("m"), op.generator("m")};
  auto r = op.act(f, a);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].decorations.size(), 2u);
  EXPECT_EQ(internal_edge_count(r[0].shape), 1u);
  EXPECT_EQ(r[0].shape.target.inputs.size(), 3u);
}

TEST(FreeOperad, GraftingAUnitIsTheIdentity) {
  auto op = binary_free();
  // corolla_2 -> corolla_2 with a unary vertex on input 0
  auto x = make_young(one_color(), {{"p", "a"}, {"q", "a"}, {"w", "a"}}, {{"m", "a"}, {"u", "a"}},
                      {{"p", "m"}, {"q", "m"}, {"w", "u"}});
  auto y = young_tree(one_color(), {{"0", "a"}, {"1", "a"}}, {"r", "a"});
  auto f = make_forest(x, y, {{"in:0", "src_in:w"}, {"in:1", "src_in:q"}, {"src_out:u", "src_in:p"},
                              {"src_out:m", "out:r"}});
  std::vector<FreeElement> a{op.generator("m"), op.unit("a")};
  auto r = op.act(f, a);
  EXPECT_TRUE(op.equal(r[0], op.generator("m"), 0));
  // a basepoint-decorated unary vertex is deleted the same way
  FreeElement one{identity_forest(young_tree(one_color(), {{"0", "a"}}, {"r", "a"})), {"1"}};
  std::vector<FreeElement> b{op.generator("m"), one};
  EXPECT_TRUE(op.equal(op.act(f, b)[0], op.generator("m"), 0));
}

TEST(FreeOperad, SymmetricActionIsFree) {
  auto op = binary_free();
  auto c2 = young_tree(one_color(), {{"0", "a"}, {"1", "a"}}, {"r", "a"});
  auto swap = relabeling_forest(c2, c2, YoungIso{{1, 0}, {0}});
  std::vector<FreeElement> m{op.generator("m")};
  auto once = op.act(swap, m);
  auto twice = op.act(swap, once);
  EXPECT_FALSE(op.equal(once[0], m[0], 0));
  EXPECT_TRUE(op.equal(twice[0], m[0], 0));
}

TEST(FreeOperad, RejectsMismatchedDecoration) {
  auto op = binary_free();
  auto f = graft_into_first();
  std::vector<FreeElement> a{op.generator("u"), op.generator("m")};
  EXPECT_THROW(op.act(f, a), error);
}

TEST(CounitEval, Examples) {
  auto op = binary_free();
  auto m = op.generator("m");
  DecoratedTree<FreeElement> single{identity_forest(m.shape.target), {m}};
  EXPECT_TRUE(op.equal(counit_eval(op, single), m, 0));

  TerminalOperad t;
  DecoratedTree<TerminalPoint> two{graft_into_first(), {TerminalPoint{}, TerminalPoint{}}};
  EXPECT_EQ(counit_eval(t, two), TerminalPoint{});
}

TEST(OperadProperties, FreeOperadFunctorialAndUnital) {
  auto op = binary_free();
  Rng rng(31);
  GenParams p;
  p.max_colors = 1;
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    auto c = random_chain(rng, 2, p);
    const auto &g = c[0], &f = c[1];
    // decorate every vertex of x by the unique-fitting generator, skipping unfit arities
    std::vector<FreeElement> alpha;
    bool ok = true;
    for (std::size_t v = 0; ok && v < f.source.outputs.size(); ++v) {
      switch (f.source.fiber(v).size()) {
        case 0: alpha.push_back(op.generator("e")); break;
        case 1: alpha.push_back(coin(rng, 0.3) ? op.unit("a") : op.generator("u")); break;
        case 2: alpha.push_back(op.generator("m")); break;
        default: ok = false;
      }
    }
    if (!ok) continue;
    ++checked;
    auto lhs = op.act(compose(g, f), alpha);
    auto rhs = op.act(g, op.act(f, alpha));
    EXPECT_TRUE(values_equal(op, lhs, rhs, 0));
    EXPECT_TRUE(values_equal(op, op.act(identity_forest(f.source), alpha), alpha, 0));
  }
  EXPECT_GT(checked, 50);
}
