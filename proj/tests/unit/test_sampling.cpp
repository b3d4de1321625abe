#include <doctest.h>

#include "mlrelax/sampling.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("same seed, same draws") {
  Sampler a(42);
  Sampler b(42);
  for (int i = 0; i < 20; ++i) {
    auto ga = a.hypergraph(2, 8, 5);
    auto gb = b.hypergraph(2, 8, 5);
    CHECK(ga == gb);
    CHECK(a.linearization_of(ga, 14) == b.linearization_of(gb, 14));
  }
}

TEST_CASE("uniform stays in range and hits both ends") {
  Sampler s(1);
  bool lo = false;
  bool hi = false;
  for (int i = 0; i < 500; ++i) {
    int v = s.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    lo = lo || v == -3;
    hi = hi || v == 3;
  }
  CHECK(lo);
  CHECK(hi);
}

TEST_CASE("sampled hypergraphs respect their bounds") {
  Sampler s(2);
  for (int i = 0; i < 100; ++i) {
    auto g = s.hypergraph(2, 8, 5);
    CHECK(g.num_vars >= 2);
    CHECK(g.num_vars <= 8);
    CHECK(g.edges.size() >= 1);
    CHECK(g.edges.size() <= 5);
    for (const auto& e : g.edges) CHECK(e.size() <= 4);
  }
}

TEST_CASE("sampled linearizations are valid and bounded") {
  Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    auto g = s.hypergraph(2, 5, 4);
    const int budget = g.num_vars + static_cast<int>(g.edges.size()) + 4;
    auto d = s.linearization_of(g, budget);
    CHECK(classify(d, g).of_g);
    CHECK(static_cast<int>(d.nodes().size()) <= budget);
    auto free = s.linearization(s.uniform(2, 6), 12);
    CHECK(free.nodes().size() <= 12);
  }
}

TEST_CASE("sampled instances match their hypergraph") {
  Sampler s(4);
  auto g = s.hypergraph(3, 6, 4);
  auto inst = s.instance(g);
  CHECK_NOTHROW(validate_instance(inst));
  for (const auto& t : inst.objective) {
    CHECK(t.coef != 0);
    CHECK(t.coef >= -3);
    CHECK(t.coef <= 3);
  }
}
