#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mlrelax/rational.hpp"
#include "mlrelax/varset.hpp"

namespace mlrelax {

inline constexpr int kDefaultEnumerationGuard = 20;

/// G = (V, E): ground set {1..num_vars} plus distinct hyperedges of size >= 2,
/// kept sorted. Construct through validate_hypergraph.
struct Hypergraph {
  int num_vars = 0;
  std::vector<VarSet> edges;

  bool has_edge(const VarSet& s) const;
  // Singletons {1}..{n} followed by the edges.
  std::vector<VarKey> keys() const;
  // The hypergraph with one edge removed (same ground set).
  Hypergraph without_edge(const VarSet& edge) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

Hypergraph validate_hypergraph(int num_vars, const std::vector<std::vector<int>>& raw_edges);

struct Term {
  Rational coef;
  VarKey key;
};

// sum(coef * z_key) <= rhs
struct LinearConstraint {
  std::vector<Term> terms;
  Rational rhs;
};

struct MultilinearInstance {
  Hypergraph hypergraph;
  std::vector<Term> objective;
  std::vector<LinearConstraint> constraints;
};

// Throws MonomialNotInHypergraph / VarOutOfRange when a term does not match G.
void validate_instance(const MultilinearInstance& inst);

/// A binary point of the multilinear set: x in {0,1}^V with z_I = prod x_v.
struct MLVertex {
  std::vector<std::uint8_t> x;  // x[v-1]
  std::map<VarKey, int> assignment;

  int value_of(const VarKey& key) const { return assignment.at(key); }
};

MLVertex make_ml_vertex(const Hypergraph& g, const std::vector<std::uint8_t>& x);

// All 2^n vertices, x enumerated in lexicographic order (x_1 most significant).
std::vector<MLVertex> ml_vertices(const Hypergraph& g, int guard = kDefaultEnumerationGuard);

struct IntegerOptimum {
  Rational value;
  MLVertex argmin;
};

Rational evaluate(const std::vector<Term>& terms, const MLVertex& vertex);

// Minimum over the feasible binary points; std::nullopt when none is feasible.
std::optional<IntegerOptimum> integer_optimum(const MultilinearInstance& inst,
                                              int guard = kDefaultEnumerationGuard);

}  // namespace mlrelax
