#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mlrelax/linearization.hpp"
#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"

namespace mlrelax {

struct Counterexample {
  std::string description;
  std::optional<Point> point;
  std::optional<LinIneq> inequality;
};

struct CheckReport {
  std::string name;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::map<std::string, std::string> stats;

  void fail(Counterexample ce) {
    holds = false;
    if (!counterexample) counterexample = std::move(ce);
  }
};

struct CheckLimits {
  int max_vars = 6;
  int max_edges = 5;
};

CheckReport check_projection_lemma(const Hypergraph& g, const VarSet& i_star,
                                   CheckLimits limits = {6, 5});

CheckReport check_path_lemma(const Linearization& d, int max_nodes = 12);

CheckReport check_theorem(const Hypergraph& g, const std::vector<Linearization>& extra = {},
                          CheckLimits limits = {6, 4});

CheckReport check_fig3_propositions();

struct BoundReport {
  std::string method;
  Rational bound;
  std::optional<Rational> integer_opt;
  long rows_generated = 0;
  long iterations = 0;
  long variables_added = 0;
  std::vector<Rational> trace;  // bound after every LP solve
};

struct StandardRelaxation {};
struct FlowerRelaxation {
  int max_neighbors = 0;
};
struct LinearizationRelaxation {
  std::vector<Linearization> linearizations;
};
using RelaxationChoice = std::variant<StandardRelaxation, FlowerRelaxation, LinearizationRelaxation>;

// Adds the instance's linear constraints as rows: -sum c z >= -b.
void append_instance_rows(IneqSystem& sys, const MultilinearInstance& inst);

// Throws Error(Infeasible) when the relaxation with the constraints is empty.
// integer_opt is filled when the ground set is within integer_guard.
BoundReport bound_static(const MultilinearInstance& inst, const RelaxationChoice& relaxation,
                         int integer_guard = 12);

BoundReport bound_cutting_plane(const MultilinearInstance& inst, int max_neighbors, int max_iters,
                                int integer_guard = 12);

BoundReport bound_dynamic_linearization(const MultilinearInstance& inst, int max_neighbors,
                                        int max_iters, int integer_guard = 12);

}  // namespace mlrelax
