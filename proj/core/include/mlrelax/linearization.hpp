#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"
#include "mlrelax/relaxations.hpp"

namespace mlrelax {

using Arc = std::pair<VarSet, VarSet>;

/// Recursive linearization: a digraph on subsets of {1..num_vars} containing
/// every singleton, where each arc goes to a strict subset and every
/// non-singleton node is the union of its successors.
class Linearization {
 public:
  int num_vars() const noexcept { return num_vars_; }
  const std::vector<VarSet>& nodes() const noexcept { return nodes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<VarSet>& successors(const VarSet& node) const;
  const std::vector<VarSet>& predecessors(const VarSet& node) const;
  bool has_node(const VarSet& node) const { return succ_.count(node) > 0; }

  friend bool operator==(const Linearization& a, const Linearization& b) {
    return a.num_vars_ == b.num_vars_ && a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_;
  }

 private:
  friend class LinearizationBuilder;
  int num_vars_ = 0;
  std::vector<VarSet> nodes_;
  std::vector<Arc> arcs_;
  std::map<VarSet, std::vector<VarSet>> succ_;
  std::map<VarSet, std::vector<VarSet>> pred_;
};

struct LinClass {
  bool of_g = false;
  bool partitioning = false;
  bool binary = false;
  bool mccormick = false;
};

struct ValidatedLinearization {
  Linearization digraph;
  LinClass cls;
};

// Checks the digraph invariants (singletons are added automatically) and
// classifies it against g. With require_of_g, a digraph that is not a
// linearization of g is rejected with NotOfG.
ValidatedLinearization validate_linearization(int num_vars, const std::vector<VarSet>& nodes,
                                              const std::vector<Arc>& arcs, const Hypergraph& g,
                                              bool require_of_g = false);

LinClass classify(const Linearization& d, const Hypergraph& g);

// Predecessor-free non-singleton nodes: the smallest E this digraph is "of".
Hypergraph source_hypergraph(const Linearization& d);

Linearization standard_linearization(const Hypergraph& g);

IneqSystem relaxation_system(const Linearization& d);

bool has_path(const Linearization& d, const VarSet& from, const VarSet& to);

// z_I = 0 if I reaches j_star, 1/2 otherwise. Throws PathExists.
Point nonpath_witness(const Linearization& d, const VarSet& i_star, const VarSet& j_star);

// P_T(D): projection of P(D) onto targets and singletons.
IneqSystem project_relaxation(const Linearization& d, const std::set<VarSet>& targets);
IneqSystem project_relaxation(const Linearization& d, const Hypergraph& g);

/// The prefix-tree digraph built from a non-redundant flower before the
/// unprocessed nodes are completed.
struct FlowerSkeleton {
  std::vector<VarKey> ordered_neighbors;
  std::vector<VarSet> parts;        // L_1..L_k
  std::vector<VarSet> prefixes;     // L_1 u .. u L_i for i = k-1 .. 2
  std::vector<VarSet> nodes;        // non-singleton nodes, sorted
  std::vector<Arc> arcs;            // sorted
  std::vector<VarSet> unprocessed;  // sorted
};

FlowerSkeleton flower_skeleton(const ExtendedFlower& f);

// Recursive McCormick linearization of g whose projection onto E implies
// flower_ineq(f). Throws RedundantFlower / MalformedFlower.
Linearization mccormick_from_flower(const Hypergraph& g, const ExtendedFlower& f);

// Graphviz rendering, nodes labelled "{1,2,3}" in sorted order.
std::string to_dot(const Linearization& d, const std::string& name = "D");

}  // namespace mlrelax
