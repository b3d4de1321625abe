#include "formats.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "mlrelax/error.hpp"

namespace mlrelax::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

void check_format(const Json& doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  if (doc.contains("format") && doc.at("format") != kFormatVersion)
    fail("unsupported format " + doc.at("format").dump());
}

std::vector<int> int_list(const Json& value, const std::string& what) {
  if (!value.is_array()) fail(what + " must be a list of integers");
  std::vector<int> out;
  for (const auto& v : value) {
    if (!v.is_number_integer()) fail(what + " must be a list of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// Monomial variables: non-empty, no repeats (exponents are 0 or 1).
std::vector<int> monomial(const Json& value) {
  std::vector<int> vars = int_list(value, "vars");
  if (vars.empty()) fail("vars must be non-empty");
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    fail("repeated variable in a monomial: exponents above 1 are not multilinear");
  return vars;
}

struct RawTerm {
  Rational coef;
  std::vector<int> vars;
};

std::vector<RawTerm> raw_terms(const Json& list, const char* what) {
  if (!list.is_array()) fail(std::string(what) + " must be a list");
  std::vector<RawTerm> out;
  for (const auto& t : list) {
    RawTerm term;
    term.vars = monomial(field(t, "vars"));
    term.coef = rational_from_json(field(t, "coef"));
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<Term> to_terms(const std::vector<RawTerm>& raw) {
  std::vector<Term> out;
  for (const auto& t : raw) out.push_back({t.coef, VarKey::of(VarSet(t.vars))});
  return out;
}

Json terms_to_json(const std::vector<Term>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"coef", rational_to_json(t.coef)}, {"vars", set_to_json(t.key.set())}});
  return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  fail("expected a rational as a string or an integer, got " + value.dump());
}

Json set_to_json(const VarSet& s) { return s.members(); }

VarSet parse_var_list(std::string_view text) {
  std::vector<int> vars;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      fail("bad variable list \"" + std::string(text) + "\"");
    vars.push_back(std::stoi(item));
    pos = comma + 1;
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) fail("repeated variable in \"" + std::string(text) + "\"");
  return VarSet(vars);
}

MultilinearInstance instance_from_json(const Json& doc) {
  check_format(doc);
  const Json& n = field(doc, "num_vars");
  if (!n.is_number_integer() || n.get<int>() < 1) fail("num_vars must be a positive integer");
  const int num_vars = n.get<int>();

  std::vector<RawTerm> objective = raw_terms(doc.value("objective", Json::array()), "objective");
  struct RawConstraint {
    std::vector<RawTerm> terms;
    Rational rhs;
    std::string sense;
  };
  std::vector<RawConstraint> constraints;
  for (const auto& c : doc.value("constraints", Json::array())) {
    std::string sense = c.value("sense", std::string("<="));
    if (sense != "<=" && sense != ">=" && sense != "=") fail("unknown sense \"" + sense + "\"");
    RawConstraint rc;
    rc.terms = raw_terms(field(c, "terms"), "terms");
    rc.rhs = rational_from_json(field(c, "rhs"));
    rc.sense = sense;
    constraints.push_back(std::move(rc));
  }

  std::vector<std::vector<int>> edges;
  for (const auto& e : doc.value("edges", Json::array())) edges.push_back(monomial(e));
  auto collect = [&](const std::vector<RawTerm>& terms) {
    for (const auto& t : terms) {
      for (int v : t.vars)
        if (v < 1 || v > num_vars) throw Error(ErrorCode::VarOutOfRange, "variable " + std::to_string(v) + " out of range");
      if (t.vars.size() >= 2) edges.push_back(t.vars);
    }
  };
  collect(objective);
  for (const auto& c : constraints) collect(c.terms);

  MultilinearInstance inst;
  inst.hypergraph = validate_hypergraph(num_vars, edges);
  inst.objective = to_terms(objective);
  for (const auto& c : constraints) {
    std::vector<Term> terms = to_terms(c.terms);
    if (c.sense != ">=") inst.constraints.push_back({terms, c.rhs});
    if (c.sense != "<=") {
      for (auto& t : terms) t.coef = -t.coef;
      inst.constraints.push_back({terms, -c.rhs});
    }
  }
  validate_instance(inst);
  return inst;
}

Json instance_to_json(const MultilinearInstance& inst) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["num_vars"] = inst.hypergraph.num_vars;
  Json edges = Json::array();
  for (const auto& e : inst.hypergraph.edges) edges.push_back(set_to_json(e));
  doc["edges"] = edges;
  doc["objective"] = terms_to_json(inst.objective);
  Json constraints = Json::array();
  for (const auto& c : inst.constraints)
    constraints.push_back({{"terms", terms_to_json(c.terms)}, {"rhs", rational_to_json(c.rhs)}, {"sense", "<="}});
  doc["constraints"] = constraints;
  return doc;
}

ValidatedLinearization linearization_from_json(const Json& doc, const Hypergraph& g) {
  check_format(doc);
  std::vector<VarSet> nodes;
  int max_var = 0;
  for (const auto& raw : field(doc, "nodes")) {
    std::vector<int> members = monomial(raw);
    max_var = std::max(max_var, members.back());
    nodes.emplace_back(members);
  }
  int num_vars = max_var;
  if (doc.contains("num_vars")) {
    if (!doc.at("num_vars").is_number_integer()) fail("num_vars must be an integer");
    num_vars = doc.at("num_vars").get<int>();
  }
  std::vector<Arc> arcs;
  for (const auto& raw : doc.value("arcs", Json::array())) {
    std::vector<int> pair = int_list(raw, "arc");
    if (pair.size() != 2) fail("arc must be a [from, to] pair");
    for (int idx : pair)
      if (idx < 0 || idx >= static_cast<int>(nodes.size()))
        fail("arc index " + std::to_string(idx) + " out of range");
    arcs.emplace_back(nodes[pair[0]], nodes[pair[1]]);
  }
  return validate_linearization(num_vars, nodes, arcs, g);
}

Json linearization_to_json(const Linearization& d) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["num_vars"] = d.num_vars();
  Json nodes = Json::array();
  for (const auto& n : d.nodes()) nodes.push_back(set_to_json(n));
  doc["nodes"] = nodes;
  auto index_of = [&](const VarSet& s) {
    return std::lower_bound(d.nodes().begin(), d.nodes().end(), s) - d.nodes().begin();
  };
  Json arcs = Json::array();
  for (const auto& [from, to] : d.arcs()) arcs.push_back({index_of(from), index_of(to)});
  doc["arcs"] = arcs;
  return doc;
}

Point point_from_json(const Json& doc) {
  check_format(doc);
  Point point;
  for (const auto& entry : field(doc, "entries")) {
    VarKey key = VarKey::of(VarSet(monomial(field(entry, "vars"))));
    if (!point.emplace(key, rational_from_json(field(entry, "value"))).second)
      fail("duplicate point entry for " + key.to_string());
  }
  return point;
}

Json point_to_json(const Point& point) {
  Json entries = Json::array();
  for (const auto& [key, value] : point)
    entries.push_back({{"vars", set_to_json(key.set())}, {"value", rational_to_json(value)}});
  return {{"format", kFormatVersion}, {"entries", entries}};
}

Json ineq_to_json(const LinIneq& row) {
  Json coeffs = Json::array();
  for (const auto& [key, c] : row.coeffs) coeffs.push_back({{"vars", set_to_json(key.set())}, {"coef", rational_to_json(c)}});
  return {{"coeffs", coeffs}, {"sense", ">="}, {"rhs", rational_to_json(row.rhs)}, {"text", row.to_string()}};
}

Json flower_to_json(const ExtendedFlower& f) {
  Json neighbors = Json::array();
  for (const auto& n : f.neighbors) neighbors.push_back(set_to_json(n.set()));
  return {{"center", set_to_json(f.center)}, {"neighbors", neighbors}};
}

Json report_to_json(const CheckReport& report) {
  Json doc;
  doc["name"] = report.name;
  doc["holds"] = report.holds;
  Json stats = Json::object();
  for (const auto& [k, v] : report.stats) stats[k] = v;
  doc["stats"] = stats;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    Json c;
    c["description"] = ce.description;
    if (ce.point) c["point"] = point_to_json(*ce.point)["entries"];
    if (ce.inequality) c["inequality"] = ineq_to_json(*ce.inequality);
    doc["counterexample"] = c;
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc;
}

Json report_to_json(const BoundReport& report) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["method"] = report.method;
  doc["bound"] = rational_to_json(report.bound);
  doc["integer_opt"] = report.integer_opt ? rational_to_json(*report.integer_opt) : Json(nullptr);
  doc["iterations"] = report.iterations;
  doc["rows_generated"] = report.rows_generated;
  doc["variables_added"] = report.variables_added;
  Json trace = Json::array();
  for (const auto& b : report.trace) trace.push_back(rational_to_json(b));
  doc["trace"] = trace;
  return doc;
}

}  // namespace mlrelax::cli
