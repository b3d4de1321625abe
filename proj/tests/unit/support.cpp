#include "support.hpp"

#include <set>

namespace testing {

std::string data_path(const std::string& name) { return std::string(MLRELAX_DATA_DIR) + "/" + name; }

Rational q(const char* text) { return parse_rational(text); }

bool valid_at_all_vertices(const Hypergraph& g, const LinIneq& row) {
  for (const auto& vertex : ml_vertices(g)) {
    Point p;
    for (const auto& [key, value] : vertex.assignment) p[key] = value;
    if (!row.holds_at(p)) return false;
  }
  return true;
}

Linearization digraph(int num_vars, const std::vector<Arc>& arcs) {
  std::set<VarSet> nodes;
  for (const auto& [a, b] : arcs) {
    nodes.insert(a);
    nodes.insert(b);
  }
  return validate_linearization(num_vars, {nodes.begin(), nodes.end()}, arcs, Hypergraph{num_vars, {}}).digraph;
}

}  // namespace testing
