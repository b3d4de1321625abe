#include "mlrelax/verify.hpp"

#include <algorithm>
#include <functional>

#include "mlrelax/error.hpp"
#include "mlrelax/fixtures.hpp"
#include "mlrelax/relaxations.hpp"

namespace mlrelax {

namespace {

void guard(const Hypergraph& g, CheckLimits limits) {
  if (g.num_vars > limits.max_vars || static_cast<int>(g.edges.size()) > limits.max_edges)
    throw Error(ErrorCode::TooLarge, std::to_string(g.num_vars) + " variables / " + std::to_string(g.edges.size()) +
                                         " edges exceed the check limits (" + std::to_string(limits.max_vars) + " / " +
                                         std::to_string(limits.max_edges) + ")");
}

std::set<VarKey> keys_of(const Hypergraph& g) {
  auto keys = g.keys();
  return {keys.begin(), keys.end()};
}

// First row of b that a does not imply, if any.
std::optional<LinIneq> unimplied_row(const IneqSystem& a, const IneqSystem& b) {
  for (const auto& row : b.rows())
    if (!is_valid(a, row)) return row;
  return std::nullopt;
}

void compare(CheckReport& report, const IneqSystem& lhs, const std::string& lhs_name, const IneqSystem& rhs,
             const std::string& rhs_name) {
  if (auto row = unimplied_row(lhs, rhs)) {
    report.fail({rhs_name + " row not implied by " + lhs_name, std::nullopt, row});
    return;
  }
  if (auto row = unimplied_row(rhs, lhs)) report.fail({lhs_name + " row not implied by " + rhs_name, std::nullopt, row});
}

}  // namespace

CheckReport check_projection_lemma(const Hypergraph& g, const VarSet& i_star, CheckLimits limits) {
  guard(g, limits);
  if (!g.has_edge(i_star)) throw Error(ErrorCode::UnknownNode, i_star.to_string() + " is not an edge");
  CheckReport report;
  report.name = "projection-lemma";
  const IneqSystem full = flower_relaxation(g);
  const IneqSystem projected = fm_eliminate(full, VarKey::edge(i_star), true);
  const IneqSystem reduced = flower_relaxation(g.without_edge(i_star));
  compare(report, projected, "projection", reduced, "FR(G - I)");
  report.stats["removed_edge"] = i_star.to_string();
  report.stats["rows_full"] = std::to_string(full.size());
  report.stats["rows_projected"] = std::to_string(projected.size());
  report.stats["rows_reduced"] = std::to_string(reduced.size());
  return report;
}

CheckReport check_path_lemma(const Linearization& d, int max_nodes) {
  if (static_cast<int>(d.nodes().size()) > max_nodes)
    throw Error(ErrorCode::TooLarge, std::to_string(d.nodes().size()) + " nodes exceed " + std::to_string(max_nodes));
  CheckReport report;
  report.name = "path-lemma";
  const IneqSystem relaxation = relaxation_system(d);
  long pairs = 0;
  long paths = 0;
  for (const auto& from : d.nodes()) {
    for (const auto& to : d.nodes()) {
      if (from == to) continue;
      ++pairs;
      const LinIneq row = LinIneq::ge({{VarKey::of(to), 1}, {VarKey::of(from), -1}}, 0);
      const bool path = has_path(d, from, to);
      paths += path;
      if (is_valid(relaxation, row) != path) {
        report.fail({"validity of " + row.to_string() + " disagrees with reachability " + from.to_string() + " -> " +
                         to.to_string(),
                     std::nullopt, row});
        continue;
      }
      if (path) continue;
      Point witness = nonpath_witness(d, from, to);
      if (!is_member(relaxation, witness) || row.holds_at(witness))
        report.fail({"witness for " + from.to_string() + " -> " + to.to_string() + " is not a violating member",
                     witness, row});
    }
  }
  report.stats["nodes"] = std::to_string(d.nodes().size());
  report.stats["pairs"] = std::to_string(pairs);
  report.stats["paths"] = std::to_string(paths);
  return report;
}

CheckReport check_theorem(const Hypergraph& g, const std::vector<Linearization>& extra, CheckLimits limits) {
  guard(g, limits);
  CheckReport report;
  report.name = "theorem";
  const IneqSystem fr = flower_relaxation(g);
  const auto keys = keys_of(g);

  IneqSystem intersection(true);
  for (const auto& k : keys) intersection.add_var(k);

  std::vector<Linearization> seen;
  auto add_projection = [&](const Linearization& d) -> std::optional<IneqSystem> {
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) return std::nullopt;
    seen.push_back(d);
    IneqSystem projected = project_relaxation(d, g);
    intersection.append(projected);
    return projected;
  };

  add_projection(standard_linearization(g));
  const auto flowers = enumerate_flowers(g);
  for (const auto& ef : flowers) {
    const Linearization d = mccormick_from_flower(g, ef.flower);
    const LinClass cls = classify(d, g);
    if (!cls.mccormick || !cls.of_g) {
      report.fail({"construction for " + ef.flower.to_string() + " is not a McCormick linearization of G",
                   std::nullopt, flower_ineq(ef.flower)});
      continue;
    }
    auto it = std::find(seen.begin(), seen.end(), d);
    IneqSystem projected = it == seen.end() ? *add_projection(d) : project_relaxation(d, g);
    const LinIneq row = flower_ineq(ef.flower);
    if (!is_valid(projected, row))
      report.fail({"projected construction does not imply " + ef.flower.to_string(), std::nullopt, row});
  }

  long extra_checked = 0;
  for (const auto& d : extra) {
    if (!classify(d, g).of_g)
      throw Error(ErrorCode::InvalidExtraLinearization, "extra digraph is not a linearization of G");
    const IneqSystem projected = project_relaxation(d, g);
    if (auto row = unimplied_row(fr, projected))
      report.fail({"projected relaxation of an extra linearization cuts into FR(G)", std::nullopt, row});
    intersection.append(projected);
    ++extra_checked;
  }

  const IneqSystem pruned = remove_redundant(intersection);
  compare(report, fr, "FR(G)", pruned, "intersection");
  report.stats["flowers"] = std::to_string(flowers.size());
  report.stats["linearizations"] = std::to_string(seen.size() + extra_checked);
  report.stats["rows_flower_relaxation"] = std::to_string(fr.size());
  report.stats["rows_intersection"] = std::to_string(pruned.size());
  return report;
}

namespace {

// Every recursive linearization of g whose nodes are subsets of the ground
// set; calls visit with the validated digraph.
void for_each_linearization(const Hypergraph& g, const std::function<void(const ValidatedLinearization&)>& visit) {
  std::vector<int> ground(g.num_vars);
  for (int v = 0; v < g.num_vars; ++v) ground[v] = v + 1;
  std::vector<VarSet> optional_nodes;
  for (unsigned code = 1; code < (1U << g.num_vars); ++code) {
    std::vector<int> members;
    for (int v = 0; v < g.num_vars; ++v)
      if (code & (1U << v)) members.push_back(v + 1);
    VarSet s(members);
    if (s.size() >= 2 && !g.has_edge(s)) optional_nodes.push_back(s);
  }

  for (unsigned pick = 0; pick < (1U << optional_nodes.size()); ++pick) {
    std::vector<VarSet> nodes(g.edges.begin(), g.edges.end());
    for (std::size_t i = 0; i < optional_nodes.size(); ++i)
      if (pick & (1U << i)) nodes.push_back(optional_nodes[i]);
    for (int v = 1; v <= g.num_vars; ++v) nodes.push_back(VarSet{v});
    std::sort(nodes.begin(), nodes.end());

    // Successor choices per non-singleton node: subsets of its strict-subset
    // nodes whose union is the node.
    std::vector<VarSet> inner;
    std::vector<std::vector<std::vector<VarSet>>> choices;
    for (const auto& node : nodes) {
      if (node.size() == 1) continue;
      std::vector<VarSet> below;
      for (const auto& cand : nodes)
        if (cand.is_strict_subset_of(node)) below.push_back(cand);
      std::vector<std::vector<VarSet>> options;
      for (unsigned s = 1; s < (1U << below.size()); ++s) {
        std::vector<VarSet> succ;
        std::vector<int> covered;
        for (std::size_t i = 0; i < below.size(); ++i)
          if (s & (1U << i)) {
            succ.push_back(below[i]);
            covered = set_union(covered, below[i].members());
          }
        if (covered == node.members()) options.push_back(std::move(succ));
      }
      inner.push_back(node);
      choices.push_back(std::move(options));
    }

    std::vector<std::size_t> index(inner.size(), 0);
    for (;;) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < inner.size(); ++i)
        for (const auto& s : choices[i][index[i]]) arcs.emplace_back(inner[i], s);
      ValidatedLinearization v = validate_linearization(g.num_vars, nodes, arcs, g);
      if (v.cls.of_g) visit(v);
      std::size_t pos = 0;
      while (pos < index.size() && ++index[pos] == choices[pos].size()) index[pos++] = 0;
      if (pos == index.size()) break;
    }
  }
}

}  // namespace

CheckReport check_fig3_propositions() {
  CheckReport report;
  report.name = "fig3";

  // (a) no partitioning linearization of G_a is at least as strong as D(a).
  const Hypergraph ga = fixtures::fig3a_hypergraph();
  const IneqSystem target = relaxation_system(fixtures::fig3a_linearization());
  long total = 0;
  long partitioning = 0;
  long dominating = 0;
  long dominating_partitioning = 0;
  for_each_linearization(ga, [&](const ValidatedLinearization& v) {
    ++total;
    partitioning += v.cls.partitioning;
    const IneqSystem projected = project_relaxation(v.digraph, ga);
    if (!is_subset(projected, target)) return;
    ++dominating;
    if (v.cls.partitioning) {
      ++dominating_partitioning;
      report.fail({"partitioning linearization dominates the non-partitioning one:\n" + to_dot(v.digraph),
                   std::nullopt, std::nullopt});
    }
  });
  report.stats["a_linearizations"] = std::to_string(total);
  report.stats["a_partitioning"] = std::to_string(partitioning);
  report.stats["a_dominating"] = std::to_string(dominating);
  report.stats["a_dominating_partitioning"] = std::to_string(dominating_partitioning);

  // (b) the validity facts on the non-binary digraph; no exhaustive search.
  const IneqSystem pb = relaxation_system(fixtures::fig3b_linearization());
  const std::vector<std::pair<VarSet, VarSet>> facts = {
      {{1, 2, 3, 4}, {1, 3}}, {{1, 2, 3, 4}, {2, 4}}, {{1, 2, 3, 4, 5, 6}, {1, 2}},
      {{1, 2, 3, 4, 5, 6}, {3, 4}}, {{1, 2, 3, 4, 5, 6}, {5, 6}}};
  long confirmed = 0;
  for (const auto& [big, small] : facts) {
    const LinIneq row = LinIneq::ge({{VarKey::of(small), 1}, {VarKey::of(big), -1}}, 0);
    if (is_valid(pb, row))
      ++confirmed;
    else
      report.fail({"expected validity of " + row.to_string(), std::nullopt, row});
  }
  report.stats["b_facts_confirmed"] = std::to_string(confirmed);
  report.stats["b_exhaustive_search"] = "not performed";
  return report;
}

void append_instance_rows(IneqSystem& sys, const MultilinearInstance& inst) {
  for (const auto& c : inst.constraints) {
    std::map<VarKey, Rational> coeffs;
    for (const auto& t : c.terms) coeffs[t.key] += t.coef;
    sys.add(LinIneq::le(std::move(coeffs), c.rhs));
  }
}

namespace {

std::map<VarKey, Rational> objective_of(const MultilinearInstance& inst) {
  std::map<VarKey, Rational> obj;
  for (const auto& t : inst.objective) obj[t.key] += t.coef;
  return obj;
}

Rational solve_or_throw(const IneqSystem& sys, const std::map<VarKey, Rational>& obj, Point* point) {
  LpOutcome out = lp_solve(sys, obj, Direction::Minimize);
  if (out.status == LpOutcome::Status::Infeasible) throw Error(ErrorCode::Infeasible, "relaxation is empty");
  if (out.status == LpOutcome::Status::Unbounded) throw Error(ErrorCode::Infeasible, "relaxation is unbounded");
  if (point) *point = std::move(out.point);
  return out.value;
}

void fill_integer(BoundReport& report, const MultilinearInstance& inst, int integer_guard) {
  if (inst.hypergraph.num_vars > integer_guard) return;
  if (auto opt = integer_optimum(inst, integer_guard)) report.integer_opt = opt->value;
}

IneqSystem base_system(const MultilinearInstance& inst) {
  IneqSystem sys = standard_relaxation(inst.hypergraph);
  append_instance_rows(sys, inst);
  return sys;
}

}  // namespace

BoundReport bound_static(const MultilinearInstance& inst, const RelaxationChoice& relaxation, int integer_guard) {
  validate_instance(inst);
  BoundReport report;
  IneqSystem sys(true);
  if (std::holds_alternative<StandardRelaxation>(relaxation)) {
    report.method = "standard";
    sys = standard_relaxation(inst.hypergraph);
  } else if (const auto* flower = std::get_if<FlowerRelaxation>(&relaxation)) {
    report.method = "flower";
    sys = flower_relaxation(inst.hypergraph, flower->max_neighbors);
  } else {
    report.method = "linearizations";
    for (const auto& key : inst.hypergraph.keys()) sys.add_var(key);
    for (const auto& d : std::get<LinearizationRelaxation>(relaxation).linearizations) {
      for (const auto& e : inst.hypergraph.edges)
        if (!d.has_node(e)) throw Error(ErrorCode::UnknownNode, "linearization lacks edge " + e.to_string());
      sys.append(relaxation_system(d));
    }
  }
  append_instance_rows(sys, inst);
  report.bound = solve_or_throw(sys, objective_of(inst), nullptr);
  report.iterations = 1;
  report.trace.push_back(report.bound);
  fill_integer(report, inst, integer_guard);
  return report;
}

BoundReport bound_cutting_plane(const MultilinearInstance& inst, int max_neighbors, int max_iters,
                                int integer_guard) {
  validate_instance(inst);
  BoundReport report;
  report.method = "cutting-plane";
  IneqSystem sys = base_system(inst);
  const auto obj = objective_of(inst);
  for (int rounds = 0;; ++rounds) {
    Point point;
    report.bound = solve_or_throw(sys, obj, &point);
    ++report.iterations;
    report.trace.push_back(report.bound);
    if (rounds == max_iters) break;
    auto cut = separate_flower(inst.hypergraph, point, max_neighbors);
    if (!cut) break;
    if (sys.add(flower_ineq(cut->flower))) ++report.rows_generated;
  }
  fill_integer(report, inst, integer_guard);
  return report;
}

BoundReport bound_dynamic_linearization(const MultilinearInstance& inst, int max_neighbors, int max_iters,
                                        int integer_guard) {
  validate_instance(inst);
  BoundReport report;
  report.method = "dynamic";
  IneqSystem sys = base_system(inst);
  const auto obj = objective_of(inst);
  for (int rounds = 0;; ++rounds) {
    Point point;
    report.bound = solve_or_throw(sys, obj, &point);
    ++report.iterations;
    report.trace.push_back(report.bound);
    if (rounds == max_iters) break;
    auto cut = separate_flower(inst.hypergraph, point, max_neighbors);
    if (!cut) break;
    const std::size_t vars_before = sys.vars().size();
    const IneqSystem rows = relaxation_system(mccormick_from_flower(inst.hypergraph, cut->flower));
    long added = static_cast<long>(sys.append(rows));
    if (added == 0 && sys.add(flower_ineq(cut->flower))) added = 1;
    report.rows_generated += added;
    report.variables_added += static_cast<long>(sys.vars().size() - vars_before);
    if (added == 0) break;
  }
  fill_integer(report, inst, integer_guard);
  return report;
}

}  // namespace mlrelax
