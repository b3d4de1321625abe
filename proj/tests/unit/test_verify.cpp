#include <doctest.h>

#include "mlrelax/error.hpp"
#include "mlrelax/fixtures.hpp"
#include "mlrelax/relaxations.hpp"
#include "mlrelax/sampling.hpp"
#include "mlrelax/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MultilinearInstance fig2_instance(int k) {
  MultilinearInstance inst;
  inst.hypergraph = fixtures::fig2_hypergraph(k);
  inst.objective = {{1, z({1, 2, 3})}, {-1, z({1, 2, 4})}, {-1, x(3)}};
  return inst;
}

}  // namespace

TEST_CASE("projection lemma on fixtures") {
  auto single = validate_hypergraph(2, {{1, 2}});
  CHECK(check_projection_lemma(single, VarSet{1, 2}).holds);
  CHECK(check_projection_lemma(fixtures::fig1_hypergraph(), VarSet{1, 2, 3}).holds);
  CHECK(check_projection_lemma(fixtures::fig2_hypergraph(3), VarSet{1, 2, 3}).holds);
}

TEST_CASE("projection lemma guards") {
  CHECK_THROWS_AS(check_projection_lemma(fixtures::fig4_hypergraph(), VarSet{1, 2, 3}), Error);
  CHECK_THROWS_AS(check_projection_lemma(fixtures::fig1_hypergraph(), VarSet{1, 3}), Error);
}

TEST_CASE("path lemma on fixtures and samples") {
  CHECK(check_path_lemma(fixtures::fig1_mccormick()).holds);
  CHECK(check_path_lemma(fixtures::fig1_standard()).holds);
  CHECK(check_path_lemma(fixtures::fig1_nonpartitioning()).holds);
  CHECK_THROWS_AS(check_path_lemma(fixtures::fig3b_linearization(), 12), Error);
  Sampler sampler(41);
  for (int i = 0; i < 10; ++i) CHECK(check_path_lemma(sampler.linearization(sampler.uniform(2, 6), 12)).holds);
}

TEST_CASE("theorem on fixtures") {
  auto single = check_theorem(validate_hypergraph(2, {{1, 2}}));
  CHECK(single.holds);
  auto fig1 = check_theorem(fixtures::fig1_hypergraph(), {fixtures::fig1_mccormick(), fixtures::fig1_nonpartitioning()});
  CHECK(fig1.holds);
  CHECK(check_theorem(fixtures::fig2_hypergraph(3)).holds);
}

TEST_CASE("theorem on Fig. 2 needs only the extra node {u1,u2}") {
  auto g = fixtures::fig2_hypergraph(3);
  std::set<VarSet> extra;
  for (const auto& ef : enumerate_flowers(g)) {
    const auto d = mccormick_from_flower(g, ef.flower);
    for (const auto& n : d.nodes())
      if (n.size() >= 2 && !g.has_edge(n)) extra.insert(n);
  }
  CHECK(extra == std::set<VarSet>{{1, 2}});
}

TEST_CASE("theorem rejects extras that are not linearizations of G") {
  try {
    check_theorem(fixtures::fig1_hypergraph(), {fixtures::fig3a_linearization()});
    FAIL("expected InvalidExtraLinearization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidExtraLinearization);
  }
}

TEST_CASE("theorem check detects a missing flower row") {
  auto g = fixtures::fig1_hypergraph();
  auto standard = project_relaxation(standard_linearization(g), g);
  CHECK_FALSE(poly_equal(standard, flower_relaxation(g)));
}

TEST_CASE("Fig. 3 propositions") {
  auto report = check_fig3_propositions();
  CHECK(report.holds);
  CHECK(report.stats.at("a_dominating_partitioning") == "0");
  CHECK(report.stats.at("a_dominating") != "0");
  CHECK(report.stats.at("b_facts_confirmed") == "5");
  CHECK(report.stats.at("b_exhaustive_search") == "not performed");
}

TEST_CASE("static bounds") {
  MultilinearInstance single;
  single.hypergraph = validate_hypergraph(2, {{1, 2}});
  single.objective = {{-1, x(1)}, {-1, x(2)}, {2, z({1, 2})}};
  auto r = bound_static(single, StandardRelaxation{});
  CHECK(r.bound == -1);
  REQUIRE(r.integer_opt);
  CHECK(*r.integer_opt == -1);

  auto fig1 = fixtures::fig1_instance();
  CHECK(bound_static(fig1, StandardRelaxation{}).bound == 0);
  CHECK(bound_static(fig1, FlowerRelaxation{}).bound == 0);
  CHECK(bound_static(fig1, LinearizationRelaxation{{fixtures::fig1_mccormick()}}).bound == 0);
}

TEST_CASE("empty relaxation raises Infeasible") {
  auto inst = fixtures::fig1_instance();
  inst.constraints.push_back({{{1, x(1)}}, -1});
  try {
    bound_static(inst, StandardRelaxation{});
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
}

TEST_CASE("Fig. 2 instance: standard, flower and iterative bounds") {
  auto inst = fig2_instance(3);
  CHECK(bound_static(inst, StandardRelaxation{}).bound == q("-3/2"));
  auto flower = bound_static(inst, FlowerRelaxation{});
  CHECK(flower.bound == -1);
  CHECK(*flower.integer_opt == -1);

  auto cp = bound_cutting_plane(inst, 0, 100);
  CHECK(cp.bound == flower.bound);
  CHECK(cp.trace.front() == q("-3/2"));
  CHECK(cp.rows_generated >= 1);

  CHECK(bound_cutting_plane(inst, 0, 0).bound == q("-3/2"));
  CHECK(bound_cutting_plane(inst, 0, 0).iterations == 1);
}

TEST_CASE("dynamic linearization adds {u1,u2} and 2k+3 rows on Fig. 2") {
  for (int k = 3; k <= 8; ++k) {
    auto r = bound_dynamic_linearization(fig2_instance(k), 0, 1);
    CAPTURE(k);
    CHECK(r.variables_added == 1);
    CHECK(r.rows_generated == 2 * k + 3);
    CHECK(r.iterations == 2);
  }
  auto done = bound_dynamic_linearization(fig2_instance(3), 0, 100);
  CHECK(done.bound >= bound_cutting_plane(fig2_instance(3), 0, 100).bound);
}

TEST_CASE("tight instances need no cuts") {
  auto inst = fixtures::fig1_instance();
  auto cp = bound_cutting_plane(inst, 0, 10);
  CHECK(cp.rows_generated == 0);
  CHECK(cp.iterations == 1);
  auto dyn = bound_dynamic_linearization(inst, 0, 10);
  CHECK(dyn.bound == bound_static(inst, StandardRelaxation{}).bound);
  CHECK(dyn.variables_added == 0);
}

TEST_CASE("bound ordering on random instances") {
  Sampler sampler(43);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = sampler.hypergraph(2, 6, 4);
    auto inst = sampler.instance(g);
    auto standard = bound_static(inst, StandardRelaxation{});
    auto flower = bound_static(inst, FlowerRelaxation{});
    auto cp = bound_cutting_plane(inst, 0, 1000);
    auto dyn = bound_dynamic_linearization(inst, 0, 1000);
    CAPTURE(trial);
    REQUIRE(flower.integer_opt);
    CHECK(standard.bound <= flower.bound);
    CHECK(flower.bound <= *flower.integer_opt);
    CHECK(cp.bound == flower.bound);
    CHECK(dyn.bound >= cp.bound);
    CHECK(dyn.bound <= *flower.integer_opt);
    for (std::size_t i = 1; i < cp.trace.size(); ++i) CHECK(cp.trace[i - 1] <= cp.trace[i]);
  }
}

TEST_CASE("capped cutting plane matches the capped flower relaxation") {
  Sampler sampler(47);
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = sampler.instance(sampler.hypergraph(3, 6, 4));
    CHECK(bound_cutting_plane(inst, 2, 1000).bound == bound_static(inst, FlowerRelaxation{2}).bound);
  }
}

TEST_CASE("theorem and projection lemma on 100 sampled hypergraphs") {
  Sampler sampler(53);
  for (int s = 0; s < 100; ++s) {
    auto g = sampler.hypergraph(2, 5, 4);
    std::vector<Linearization> extra;
    for (int i = 0; i < 3; ++i) extra.push_back(sampler.linearization_of(g, g.num_vars + static_cast<int>(g.edges.size()) + 3));
    CAPTURE(s);
    CHECK(check_theorem(g, extra).holds);
    for (const auto& e : g.edges) CHECK(check_projection_lemma(g, e).holds);
  }
}
