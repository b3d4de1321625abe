#pragma once

#include <string>

#include "mlrelax/linearization.hpp"
#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"

namespace testing {

using namespace mlrelax;

std::string data_path(const std::string& name);

Rational q(const char* text);

// x_v / z_I shorthands for building rows and points.
inline VarKey x(int v) { return VarKey::singleton(v); }
inline VarKey z(std::initializer_list<int> members) { return VarKey::of(VarSet(members)); }

// The linear functional value of row at every ML vertex of g (binary
// assignment of the keys it mentions).
bool valid_at_all_vertices(const Hypergraph& g, const LinIneq& row);

// Builds a linearization from explicit arcs; nodes are the arc endpoints.
Linearization digraph(int num_vars, const std::vector<Arc>& arcs);

}  // namespace testing
