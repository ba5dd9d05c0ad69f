#pragma once

#include "folab/forest.hpp"

namespace folab::fixtures {

inline const ColorSet& one_color() {
  static const ColorSet k({"a"});
  return k;
}

/// y: corolla with inputs {1,2,3} and root r.
inline YoungForest corolla_y() { return young_tree(one_color(), {{"1", "a"}, {"2", "a"}, {"3", "a"}}, {"r", "a"}); }

/// x: p,q -> v and s,t -> u.
inline YoungForest two_corollas_x() {
  return make_young(one_color(), {{"p", "a"}, {"q", "a"}, {"s", "a"}, {"t", "a"}}, {{"u", "a"}, {"v", "a"}},
                    {{"p", "v"}, {"q", "v"}, {"s", "u"}, {"t", "u"}});
}

/// z: corolla with inputs {a,b,c} and root R.
inline YoungForest corolla_z() { return young_tree(one_color(), {{"a", "a"}, {"b", "a"}, {"c", "a"}}, {"R", "a"}); }

inline Forest make_forest(const YoungForest& x, const YoungForest& y,
                          const std::map<std::string, std::string>& attach) {
  Forest f{x, y, std::vector<Slot>(y.inputs.size(), Slot{}), std::vector<Slot>(x.outputs.size(), Slot{})};
  auto parse = [&](const std::string& s) -> Slot {
    if (s.rfind("out:", 0) == 0) return target_output(y.outputs.index_of(s.substr(4)));
    return source_input(x.inputs.index_of(s.substr(7)));
  };
  for (const auto& [k, v] : attach) {
    if (k.rfind("in:", 0) == 0) f.on_target_inputs[y.inputs.index_of(k.substr(3))] = parse(v);
    else f.on_source_outputs[x.outputs.index_of(k.substr(8))] = parse(v);
  }
  return f;
}

/// f: 1->s, 2->t, 3->q, u->p, v->r.
inline Forest running_f() {
  return make_forest(two_corollas_x(), corolla_y(),
                     {{"in:1", "src_in:s"}, {"in:2", "src_in:t"}, {"in:3", "src_in:q"},
                      {"src_out:u", "src_in:p"}, {"src_out:v", "out:r"}});
}

/// g: a->1, b->2, c->3, r->R.
inline Forest running_g() {
  return make_forest(corolla_y(), corolla_z(),
                     {{"in:a", "src_in:1"}, {"in:b", "src_in:2"}, {"in:c", "src_in:3"}, {"src_out:r", "out:R"}});
}

}  // namespace folab::fixtures
