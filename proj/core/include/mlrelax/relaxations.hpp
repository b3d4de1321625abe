#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"

namespace mlrelax {

inline constexpr int kDefaultCoverGuard = 20;

/// Extended flower: a center plus neighbors that cover it and each meet it.
/// Neighbors are kept sorted and distinct. Edge-centered flowers are the ones
/// enumerated; a singleton center {v} with one edge neighbor I expresses the
/// short standard row z_I <= x_v.
struct ExtendedFlower {
  VarSet center;
  std::vector<VarKey> neighbors;

  ExtendedFlower(VarSet center, std::vector<VarKey> neighbors);

  std::size_t k() const { return neighbors.size(); }
  bool has_edge_neighbor() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedFlower&, const ExtendedFlower&) = default;
};

enum class FlowerKind { Flower, ExtendedOnly };

// Cover and intersection conditions, center not among its neighbors.
bool is_well_formed(const ExtendedFlower& f);
// Additionally every neighbor (and an edge center) belongs to G.
void validate_flower(const Hypergraph& g, const ExtendedFlower& f);

FlowerKind flower_kind(const ExtendedFlower& f);

IneqSystem standard_relaxation(const Hypergraph& g);

// z_I - sum z_J >= 1 - k. Throws MalformedFlower.
LinIneq flower_ineq(const ExtendedFlower& f);

// Every neighbor owns a center element that no other neighbor contains.
bool is_nonredundant(const ExtendedFlower& f);

// Drops neighbors that the others do not need, first removable one first.
ExtendedFlower minimalize(const ExtendedFlower& f);

struct EnumeratedFlower {
  ExtendedFlower flower;
  FlowerKind kind;
};

// All non-redundant edge-centered flowers with at most max_neighbors
// neighbors (0 = no cap), center-major, then by neighbor count and list.
std::vector<EnumeratedFlower> enumerate_flowers(const Hypergraph& g, int max_neighbors = 0);

// Box + standard rows + every enumerated flower row (0 = no cap).
IneqSystem flower_relaxation(const Hypergraph& g, int max_neighbors = 0);

struct ViolatedFlower {
  ExtendedFlower flower;
  Rational violation;
};

// Most violated row of flower_relaxation(g, max_neighbors) at point, or
// nullopt when the point satisfies all of them. Ties: smaller center, then
// fewer neighbors, then lexicographically smaller neighbor list.
std::optional<ViolatedFlower> separate_flower(const Hypergraph& g, const Point& point,
                                              int max_neighbors = 0,
                                              int cover_guard = kDefaultCoverGuard);

}  // namespace mlrelax
