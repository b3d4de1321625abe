#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "mlrelax/linearization.hpp"
#include "mlrelax/model.hpp"
#include "mlrelax/polyhedra.hpp"
#include "mlrelax/relaxations.hpp"
#include "mlrelax/verify.hpp"

namespace mlrelax::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Reads and parses a JSON document; failures become Error(ParseError).
Json read_json(const std::filesystem::path& path);

// Instance file: num_vars, objective [{coef, vars}], constraints
// [{terms, rhs, sense}], optional extra edges.
MultilinearInstance instance_from_json(const Json& doc);
Json instance_to_json(const MultilinearInstance& inst);

// Linearization file: num_vars, nodes (int lists), arcs ([from, to] indices
// into nodes). Singletons need not be listed.
ValidatedLinearization linearization_from_json(const Json& doc, const Hypergraph& g);
Json linearization_to_json(const Linearization& d);

// Point file: entries [{vars, value}].
Point point_from_json(const Json& doc);
Json point_to_json(const Point& point);

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);
Json set_to_json(const VarSet& s);
VarSet parse_var_list(std::string_view text);

Json ineq_to_json(const LinIneq& row);
Json flower_to_json(const ExtendedFlower& f);
Json report_to_json(const CheckReport& report);
Json report_to_json(const BoundReport& report);

}  // namespace mlrelax::cli
