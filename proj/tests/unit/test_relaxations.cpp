#include <doctest.h>

#include <algorithm>

#include "mlrelax/error.hpp"
#include "mlrelax/fixtures.hpp"
#include "mlrelax/relaxations.hpp"
#include "mlrelax/sampling.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

long count_with_edge(const std::vector<EnumeratedFlower>& flowers) {
  return std::count_if(flowers.begin(), flowers.end(), [](const auto& f) { return f.flower.has_edge_neighbor(); });
}

// Oracle for non-redundant extended flowers: all subsets of candidate
// neighbors, filtered by the definition.
std::vector<ExtendedFlower> brute_flowers(const Hypergraph& g) {
  std::vector<ExtendedFlower> out;
  for (const auto& center : g.edges) {
    std::vector<VarKey> cands;
    for (const auto& key : g.keys())
      if (key.set() != center && key.set().intersects(center)) cands.push_back(key);
    for (unsigned mask = 1; mask < (1U << cands.size()); ++mask) {
      std::vector<VarKey> nb;
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (mask & (1U << i)) nb.push_back(cands[i]);
      ExtendedFlower f(center, nb);
      if (is_well_formed(f) && is_nonredundant(f)) out.push_back(f);
    }
  }
  return out;
}

Point random_point(Sampler& sampler, const Hypergraph& g) {
  Point p;
  for (const auto& k : g.keys()) {
    p[k] = Rational(sampler.uniform(0, 4), 4);
    p[k].canonicalize();
  }
  return p;
}

}  // namespace

TEST_CASE("standard relaxation rows") {
  auto single = validate_hypergraph(2, {{1, 2}});
  auto sys = standard_relaxation(single);
  CHECK(sys.size() == 3);
  CHECK(sys.contains(LinIneq::le({{z({1, 2}), 1}, {x(1), -1}}, 0).canonical()));
  CHECK(sys.contains(LinIneq::le({{z({1, 2}), 1}, {x(2), -1}}, 0).canonical()));
  CHECK(sys.contains(LinIneq::ge({{z({1, 2}), 1}, {x(1), -1}, {x(2), -1}}, -1).canonical()));

  CHECK(standard_relaxation(fixtures::fig1_hypergraph()).size() == 8 + 3);
  auto edgeless = standard_relaxation(validate_hypergraph(3, {}));
  CHECK(edgeless.size() == 0);
  CHECK(edgeless.vars().size() == 3);
}

TEST_CASE("flower_ineq") {
  auto long_row = flower_ineq(ExtendedFlower(VarSet{1, 2}, {x(1), x(2)}));
  CHECK(long_row == LinIneq::ge({{z({1, 2}), 1}, {x(1), -1}, {x(2), -1}}, -1).canonical());

  auto row = flower_ineq(ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({2, 3, 4}), x(1)}));
  CHECK(row == LinIneq::ge({{z({1, 2, 3}), 1}, {z({2, 3, 4}), -1}, {x(1), -1}}, -1).canonical());
  CHECK(valid_at_all_vertices(fixtures::fig1_hypergraph(), row));

  CHECK(code_of([] { flower_ineq(ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({1, 2})})); }) ==
        ErrorCode::MalformedFlower);
}

TEST_CASE("is_nonredundant on the Fig. 2 family") {
  CHECK(is_nonredundant(ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({1, 2, 4}), x(3)})));
  CHECK_FALSE(is_nonredundant(ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({1, 2, 4}), VarKey::edge({1, 2, 5}), x(3)})));
  CHECK(is_nonredundant(ExtendedFlower(VarSet{1, 2}, {VarKey::edge({1, 2, 3})})));
}

TEST_CASE("minimalize drops a removable neighbor") {
  ExtendedFlower padded(VarSet{1, 2, 3}, {VarKey::edge({1, 2, 4}), VarKey::edge({1, 2, 5}), x(3)});
  auto m = minimalize(padded);
  CHECK(is_nonredundant(m));
  CHECK(m.k() == 2);
}

TEST_CASE("validate_flower checks membership in G") {
  auto g = fixtures::fig1_hypergraph();
  CHECK_NOTHROW(validate_flower(g, ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({2, 3, 4}), x(1)})));
  CHECK(code_of([&] { validate_flower(g, ExtendedFlower(VarSet{1, 2, 3}, {VarKey::edge({2, 3}), x(1)})); }) ==
        ErrorCode::MalformedFlower);
  CHECK(code_of([&] { validate_flower(g, ExtendedFlower(VarSet{1, 2, 3}, {x(4), x(1), x(2), x(3)})); }) ==
        ErrorCode::MalformedFlower);
}

TEST_CASE("enumerate_flowers counts") {
  for (int k = 3; k <= 6; ++k) {
    auto flowers = enumerate_flowers(fixtures::fig2_hypergraph(k));
    CAPTURE(k);
    CHECK(count_with_edge(flowers) == k * (k - 1));
    CHECK(static_cast<long>(flowers.size()) - count_with_edge(flowers) == k);
  }
  auto single = enumerate_flowers(validate_hypergraph(2, {{1, 2}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].flower.neighbors == std::vector<VarKey>{x(1), x(2)});
}

TEST_CASE("enumerate_flowers matches subset enumeration") {
  Sampler sampler(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampler.hypergraph(2, 6, 4);
    auto listed = enumerate_flowers(g);
    auto expected = brute_flowers(g);
    CAPTURE(trial);
    REQUIRE(listed.size() == expected.size());
    for (const auto& f : expected)
      CHECK(std::any_of(listed.begin(), listed.end(), [&](const auto& ef) { return ef.flower == f; }));
    for (const auto& ef : listed)
      CHECK((ef.kind == FlowerKind::Flower) == (flower_kind(ef.flower) == FlowerKind::Flower));
  }
}

TEST_CASE("enumerate_flowers ordering and cap") {
  auto flowers = enumerate_flowers(fixtures::fig1_hypergraph());
  for (std::size_t i = 1; i < flowers.size(); ++i) {
    const auto& a = flowers[i - 1].flower;
    const auto& b = flowers[i].flower;
    CHECK((a.center < b.center || (a.center == b.center && (a.k() < b.k() || (a.k() == b.k() && a.neighbors < b.neighbors)))));
  }
  for (const auto& ef : enumerate_flowers(fixtures::fig1_hypergraph(), 2)) CHECK(ef.flower.k() <= 2);
}

TEST_CASE("flower_relaxation") {
  auto single = validate_hypergraph(2, {{1, 2}});
  CHECK(poly_equal(flower_relaxation(single), standard_relaxation(single)));
  CHECK(flower_relaxation(single).size() == standard_relaxation(single).size());
  CHECK(flower_relaxation(validate_hypergraph(2, {})).size() == 0);

  auto g = fixtures::fig1_hypergraph();
  Point z1 = fixtures::fig1_z1();
  CHECK_FALSE(is_member(flower_relaxation(g), z1).member);
}

TEST_CASE("flower rows are valid at every ML vertex") {
  Sampler sampler(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = sampler.hypergraph(2, 7, 5);
    const auto fr = flower_relaxation(g);
    for (const auto& row : fr.rows()) CHECK(valid_at_all_vertices(g, row));
  }
}

TEST_CASE("separate_flower on a violated point and on ML vertices") {
  auto g = validate_hypergraph(3, {{1, 2}, {1, 2, 3}});
  Point p{{z({1, 2, 3}), 0}, {z({1, 2}), 1}, {x(1), 1}, {x(2), 1}, {x(3), 1}};
  auto cut = separate_flower(g, p);
  REQUIRE(cut);
  CHECK(cut->flower.center == VarSet{1, 2, 3});
  CHECK(cut->flower.neighbors == std::vector<VarKey>{z({1, 2}), x(3)});
  CHECK(cut->violation == 1);

  for (const auto& v : ml_vertices(fixtures::fig1_hypergraph())) {
    Point pv;
    for (const auto& [k, val] : v.assignment) pv[k] = val;
    CHECK_FALSE(separate_flower(fixtures::fig1_hypergraph(), pv).has_value());
  }

  CHECK(code_of([&] { separate_flower(g, Point{{x(1), 1}}); }) == ErrorCode::MissingCoordinate);
}

TEST_CASE("separate_flower at z2 of Fig. 1 finds the flower cutting it off") {
  auto g = fixtures::fig1_hypergraph();
  auto cut = separate_flower(g, fixtures::fig1_z2());
  REQUIRE(cut);
  CHECK(cut->flower.center == VarSet{1, 2, 3});
  CHECK(cut->flower.neighbors == std::vector<VarKey>{x(1), z({2, 3, 4})});
  CHECK(cut->violation == q("1/2"));
  CHECK_FALSE(is_member(flower_relaxation(g), fixtures::fig1_z2()).member);
}

TEST_CASE("separate_flower returns the most violated row") {
  Sampler sampler(29);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = sampler.hypergraph(2, 6, 4);
    const int cap = sampler.uniform(0, 3);
    auto p = random_point(sampler, g);
    Rational best = 0;
    const auto fr = flower_relaxation(g, cap);
    for (const auto& row : fr.rows()) best = std::max(best, Rational(row.rhs - row.lhs_at(p)));
    auto cut = separate_flower(g, p, cap);
    CAPTURE(trial);
    if (best == 0) {
      CHECK_FALSE(cut.has_value());
      continue;
    }
    REQUIRE(cut);
    auto row = flower_ineq(cut->flower);
    CHECK(row.rhs - row.lhs_at(p) == cut->violation);
    CHECK(cut->violation > 0);
    if (cap > 0 && cut->flower.has_edge_neighbor()) CHECK(cut->flower.k() <= static_cast<std::size_t>(cap));
  }
}

TEST_CASE("separate_flower tie-break prefers fewer neighbors") {
  auto g = validate_hypergraph(3, {{1, 2}, {1, 2, 3}});
  Point p{{z({1, 2, 3}), 0}, {z({1, 2}), 1}, {x(1), 1}, {x(2), 1}, {x(3), 1}};
  auto cut = separate_flower(g, p);
  REQUIRE(cut);
  CHECK(cut->flower.k() == 2);
}
