#include "mlrelax/fixtures.hpp"

namespace mlrelax::fixtures {

namespace {

Linearization build(int num_vars, const std::vector<Arc>& arcs, const Hypergraph& g) {
  std::vector<VarSet> nodes;
  for (const auto& [from, to] : arcs) {
    nodes.push_back(from);
    nodes.push_back(to);
  }
  return validate_linearization(num_vars, nodes, arcs, g).digraph;
}

Point point(std::initializer_list<std::pair<VarSet, Rational>> entries) {
  Point p;
  for (const auto& [s, v] : entries) p.emplace(VarKey::of(s), v);
  return p;
}

const Rational kHalf(1, 2);

}  // namespace

Hypergraph fig1_hypergraph() { return validate_hypergraph(4, {{1, 2, 3}, {2, 3, 4}, {1, 2}}); }

MultilinearInstance fig1_instance() {
  MultilinearInstance inst;
  inst.hypergraph = fig1_hypergraph();
  for (const auto& e : inst.hypergraph.edges) inst.objective.push_back({1, VarKey::edge(e)});
  return inst;
}

Linearization fig1_standard() { return standard_linearization(fig1_hypergraph()); }

Linearization fig1_mccormick() {
  return build(4,
               {{{1, 2, 3}, {1}}, {{1, 2, 3}, {2, 3}}, {{2, 3, 4}, {2, 3}}, {{2, 3, 4}, {4}},
                {{1, 2}, {1}}, {{1, 2}, {2}}, {{2, 3}, {2}}, {{2, 3}, {3}}},
               fig1_hypergraph());
}

Linearization fig1_nonpartitioning() {
  return build(4,
               {{{1, 2, 3}, {1, 2}}, {{1, 2, 3}, {2, 3}}, {{2, 3, 4}, {2, 3}}, {{2, 3, 4}, {4}},
                {{1, 2}, {1}}, {{1, 2}, {2}}, {{2, 3}, {2}}, {{2, 3}, {3}}},
               fig1_hypergraph());
}

Point fig1_z1() {
  return point({{{2, 3, 4}, 0}, {{1, 2, 3}, kHalf}, {{1, 2}, kHalf}, {{1}, kHalf}, {{2}, kHalf},
                {{3}, kHalf}, {{4}, 1}});
}

Point fig1_z2() {
  return point({{{1, 2, 3}, 0}, {{2, 3, 4}, kHalf}, {{1, 2}, kHalf}, {{2}, kHalf}, {{3}, kHalf},
                {{4}, kHalf}, {{1}, 1}});
}

Point fig1_z3() {
  return point({{{1, 2}, 0}, {{1, 2, 3}, kHalf}, {{2, 3, 4}, kHalf}, {{1}, kHalf}, {{2}, kHalf},
                {{3}, kHalf}, {{4}, kHalf}});
}

Hypergraph fig2_hypergraph(int k) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({1, 2, 2 + i});
  return validate_hypergraph(k + 2, edges);
}

Hypergraph fig3a_hypergraph() { return validate_hypergraph(3, {{1, 2, 3}, {1, 2}, {2, 3}}); }

Linearization fig3a_linearization() {
  return build(3, {{{1, 2, 3}, {1, 2}}, {{1, 2, 3}, {2, 3}}, {{1, 2}, {1}}, {{1, 2}, {2}}, {{2, 3}, {2}}, {{2, 3}, {3}}},
               fig3a_hypergraph());
}

Linearization fig3b_linearization() {
  std::vector<Arc> arcs = {
      {{1, 2, 3, 4, 5, 6}, {1, 2}}, {{1, 2, 3, 4, 5, 6}, {3, 4}}, {{1, 2, 3, 4, 5, 6}, {5, 6}},
      {{1, 2}, {1}},                {{1, 2}, {2}},                {{3, 4}, {3}},
      {{3, 4}, {4}},                {{5, 6}, {5}},                {{5, 6}, {6}},
      {{1, 2, 3, 4}, {1, 3}},       {{1, 2, 3, 4}, {2, 4}},       {{1, 2, 5, 6}, {1, 5}},
      {{1, 2, 5, 6}, {2, 6}},       {{3, 4, 5, 6}, {3, 5}},       {{3, 4, 5, 6}, {4, 6}},
      {{1, 3}, {1}},                {{1, 3}, {3}},                {{2, 4}, {2}},
      {{2, 4}, {4}},                {{1, 5}, {1}},                {{1, 5}, {5}},
      {{2, 6}, {2}},                {{2, 6}, {6}},                {{3, 5}, {3}},
      {{3, 5}, {5}},                {{4, 6}, {4}},                {{4, 6}, {6}},
  };
  Hypergraph g = validate_hypergraph(6, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  return build(6, arcs, g);
}

Hypergraph fig4_hypergraph() {
  return validate_hypergraph(15, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 2, 3}, {4, 5, 6, 11, 12}, {7, 8, 13},
                                  {9, 10, 14, 15}});
}

ExtendedFlower fig4_flower() {
  return ExtendedFlower(VarSet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                        {VarKey::edge({1, 2, 3}), VarKey::edge({4, 5, 6, 11, 12}), VarKey::edge({7, 8, 13}),
                         VarKey::edge({9, 10, 14, 15})});
}

}  // namespace mlrelax::fixtures
