#include "mlrelax/model.hpp"

#include <algorithm>

#include "mlrelax/error.hpp"

namespace mlrelax {

bool Hypergraph::has_edge(const VarSet& s) const {
  return std::binary_search(edges.begin(), edges.end(), s);
}

std::vector<VarKey> Hypergraph::keys() const {
  std::vector<VarKey> out;
  out.reserve(num_vars + edges.size());
  for (int v = 1; v <= num_vars; ++v) out.push_back(VarKey::singleton(v));
  for (const auto& e : edges) out.push_back(VarKey::edge(e));
  return out;
}

Hypergraph Hypergraph::without_edge(const VarSet& edge) const {
  Hypergraph out{num_vars, {}};
  for (const auto& e : edges)
    if (e != edge) out.edges.push_back(e);
  return out;
}

Hypergraph validate_hypergraph(int num_vars, const std::vector<std::vector<int>>& raw_edges) {
  if (num_vars < 1) throw Error(ErrorCode::VarOutOfRange, "num_vars must be positive");
  Hypergraph g{num_vars, {}};
  for (const auto& raw : raw_edges) {
    if (raw.empty()) throw Error(ErrorCode::EmptyEdge, "empty edge");
    for (int v : raw)
      if (v < 1 || v > num_vars)
        throw Error(ErrorCode::VarOutOfRange,
                    "variable " + std::to_string(v) + " outside 1.." + std::to_string(num_vars));
    VarSet s(raw);
    if (s.size() < 2) throw Error(ErrorCode::EdgeTooSmall, "edge " + s.to_string() + " has fewer than 2 members");
    g.edges.push_back(std::move(s));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

namespace {

void check_term(const Hypergraph& g, const Term& t) {
  if (t.key.set().back() > g.num_vars || t.key.set().front() < 1)
    throw Error(ErrorCode::VarOutOfRange, "monomial " + t.key.to_string() + " outside the ground set");
  if (t.key.is_edge() && !g.has_edge(t.key.set()))
    throw Error(ErrorCode::MonomialNotInHypergraph, "monomial " + t.key.to_string() + " is not an edge");
}

}  // namespace

void validate_instance(const MultilinearInstance& inst) {
  for (const auto& t : inst.objective) check_term(inst.hypergraph, t);
  for (const auto& c : inst.constraints)
    for (const auto& t : c.terms) check_term(inst.hypergraph, t);
}

MLVertex make_ml_vertex(const Hypergraph& g, const std::vector<std::uint8_t>& x) {
  MLVertex vertex;
  vertex.x = x;
  for (int v = 1; v <= g.num_vars; ++v) vertex.assignment.emplace(VarKey::singleton(v), x[v - 1]);
  for (const auto& e : g.edges) {
    int product = 1;
    for (int v : e) product &= x[v - 1];
    vertex.assignment.emplace(VarKey::edge(e), product);
  }
  return vertex;
}

namespace {

void check_guard(const Hypergraph& g, int guard) {
  if (g.num_vars > guard)
    throw Error(ErrorCode::TooLarge, std::to_string(g.num_vars) + " variables exceed the enumeration guard of " +
                                         std::to_string(guard));
}

std::vector<std::uint8_t> bits_of(std::uint64_t code, int n) {
  std::vector<std::uint8_t> x(n);
  for (int i = 0; i < n; ++i) x[i] = (code >> (n - 1 - i)) & 1U;
  return x;
}

}  // namespace

std::vector<MLVertex> ml_vertices(const Hypergraph& g, int guard) {
  check_guard(g, guard);
  std::vector<MLVertex> out;
  const std::uint64_t count = std::uint64_t{1} << g.num_vars;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) out.push_back(make_ml_vertex(g, bits_of(code, g.num_vars)));
  return out;
}

Rational evaluate(const std::vector<Term>& terms, const MLVertex& vertex) {
  Rational total = 0;
  for (const auto& t : terms) {
    int value = 1;
    for (int v : t.key.set()) value &= vertex.x[v - 1];
    if (value) total += t.coef;
  }
  return total;
}

std::optional<IntegerOptimum> integer_optimum(const MultilinearInstance& inst, int guard) {
  const Hypergraph& g = inst.hypergraph;
  check_guard(g, guard);
  validate_instance(inst);
  std::optional<IntegerOptimum> best;
  const std::uint64_t count = std::uint64_t{1} << g.num_vars;
  for (std::uint64_t code = 0; code < count; ++code) {
    MLVertex vertex = make_ml_vertex(g, bits_of(code, g.num_vars));
    bool feasible = std::all_of(inst.constraints.begin(), inst.constraints.end(),
                                [&](const LinearConstraint& c) { return evaluate(c.terms, vertex) <= c.rhs; });
    if (!feasible) continue;
    Rational value = evaluate(inst.objective, vertex);
    if (!best || value < best->value) best = IntegerOptimum{value, std::move(vertex)};
  }
  return best;
}

}  // namespace mlrelax
