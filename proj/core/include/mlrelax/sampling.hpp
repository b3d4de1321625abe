#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mlrelax/linearization.hpp"
#include "mlrelax/model.hpp"

namespace mlrelax {

// Seeded generator; integer draws are rejection-sampled from the raw engine
// output, so sequences match across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  // num_vars in [min_vars, max_vars], up to max_edges distinct edges whose
  // sizes are uniform in 2..min(4, num_vars).
  Hypergraph hypergraph(int min_vars, int max_vars, int max_edges);

  // A random linearization of g with at most max_nodes nodes in total.
  Linearization linearization_of(const Hypergraph& g, int max_nodes);

  // A random recursive linearization on num_vars variables.
  Linearization linearization(int num_vars, int max_nodes);

  // Objective coefficients uniform in [lo, hi] for every key of g.
  MultilinearInstance instance(const Hypergraph& g, int lo = -3, int hi = 3);

 private:
  std::vector<int> random_subset(const std::vector<int>& from, int size);
  std::mt19937_64 engine_;
};

}  // namespace mlrelax
