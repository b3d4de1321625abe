#include "mlrelax/linearization.hpp"

#include <algorithm>
#include <deque>

#include "mlrelax/error.hpp"

namespace mlrelax {

class LinearizationBuilder {
 public:
  static Linearization build(int num_vars, const std::set<VarSet>& nodes, const std::set<Arc>& arcs) {
    Linearization d;
    d.num_vars_ = num_vars;
    d.nodes_.assign(nodes.begin(), nodes.end());
    d.arcs_.assign(arcs.begin(), arcs.end());
    for (const auto& n : d.nodes_) {
      d.succ_[n];
      d.pred_[n];
    }
    for (const auto& [from, to] : d.arcs_) {
      d.succ_[from].push_back(to);
      d.pred_[to].push_back(from);
    }
    return d;
  }
};

namespace {

const std::vector<VarSet>& lookup(const std::map<VarSet, std::vector<VarSet>>& m, const VarSet& node) {
  auto it = m.find(node);
  if (it == m.end()) throw Error(ErrorCode::UnknownNode, node.to_string() + " is not a node");
  return it->second;
}

std::set<VarSet> with_singletons(int num_vars, std::set<VarSet> nodes) {
  for (int v = 1; v <= num_vars; ++v) nodes.insert(VarSet{v});
  return nodes;
}

}  // namespace

const std::vector<VarSet>& Linearization::successors(const VarSet& node) const { return lookup(succ_, node); }

const std::vector<VarSet>& Linearization::predecessors(const VarSet& node) const { return lookup(pred_, node); }

LinClass classify(const Linearization& d, const Hypergraph& g) {
  LinClass cls;
  cls.partitioning = true;
  cls.binary = true;
  for (const auto& node : d.nodes()) {
    if (node.size() == 1) continue;
    const auto& succ = d.successors(node);
    if (succ.size() != 2) cls.binary = false;
    for (std::size_t i = 0; i < succ.size(); ++i)
      for (std::size_t j = i + 1; j < succ.size(); ++j)
        if (succ[i].intersects(succ[j])) cls.partitioning = false;
  }
  cls.mccormick = cls.partitioning && cls.binary;
  cls.of_g = g.num_vars == d.num_vars() &&
             std::all_of(g.edges.begin(), g.edges.end(), [&](const VarSet& e) { return d.has_node(e); });
  for (const auto& node : d.nodes())
    if (node.size() > 1 && d.predecessors(node).empty() && !g.has_edge(node)) cls.of_g = false;
  return cls;
}

ValidatedLinearization validate_linearization(int num_vars, const std::vector<VarSet>& raw_nodes,
                                              const std::vector<Arc>& raw_arcs, const Hypergraph& g,
                                              bool require_of_g) {
  if (num_vars < 1) throw Error(ErrorCode::VarOutOfRange, "num_vars must be positive");
  std::set<VarSet> nodes;
  for (const auto& n : raw_nodes) {
    if (n.front() < 1 || n.back() > num_vars)
      throw Error(ErrorCode::VarOutOfRange, "node " + n.to_string() + " outside the ground set");
    nodes.insert(n);
  }
  nodes = with_singletons(num_vars, std::move(nodes));

  std::set<Arc> arcs;
  for (const auto& arc : raw_arcs) {
    const auto& [from, to] = arc;
    if (!nodes.count(from)) throw Error(ErrorCode::UnknownNode, "arc tail " + from.to_string() + " is not a node");
    if (!nodes.count(to)) throw Error(ErrorCode::UnknownNode, "arc head " + to.to_string() + " is not a node");
    if (!to.is_strict_subset_of(from))
      throw Error(ErrorCode::ArcNotStrictSubset, from.to_string() + " -> " + to.to_string());
    if (!arcs.insert(arc).second)
      throw Error(ErrorCode::DuplicateArc, from.to_string() + " -> " + to.to_string());
  }

  Linearization d = LinearizationBuilder::build(num_vars, nodes, arcs);
  for (const auto& node : d.nodes()) {
    if (node.size() == 1) continue;
    std::vector<int> covered;
    for (const auto& s : d.successors(node)) covered = set_union(covered, s.members());
    if (covered != node.members())
      throw Error(ErrorCode::SuccessorUnionMismatch, "successors of " + node.to_string() + " do not unite to it");
  }
  LinClass cls = classify(d, g);
  if (require_of_g && !cls.of_g) throw Error(ErrorCode::NotOfG, "digraph is not a linearization of G");
  return {std::move(d), cls};
}

Hypergraph source_hypergraph(const Linearization& d) {
  Hypergraph g{d.num_vars(), {}};
  for (const auto& node : d.nodes())
    if (node.size() > 1 && d.predecessors(node).empty()) g.edges.push_back(node);
  return g;
}

Linearization standard_linearization(const Hypergraph& g) {
  std::set<VarSet> nodes(g.edges.begin(), g.edges.end());
  std::set<Arc> arcs;
  for (const auto& e : g.edges)
    for (int v : e) arcs.emplace(e, VarSet{v});
  return LinearizationBuilder::build(g.num_vars, with_singletons(g.num_vars, std::move(nodes)), arcs);
}

IneqSystem relaxation_system(const Linearization& d) {
  IneqSystem sys(true);
  for (const auto& node : d.nodes()) sys.add_var(VarKey::of(node));
  for (const auto& [from, to] : d.arcs()) sys.add(LinIneq::ge({{VarKey::of(to), 1}, {VarKey::of(from), -1}}, 0));
  for (const auto& node : d.nodes()) {
    const auto& succ = d.successors(node);
    if (succ.empty()) continue;
    std::map<VarKey, Rational> coeffs{{VarKey::of(node), 1}};
    for (const auto& s : succ) coeffs[VarKey::of(s)] = -1;
    sys.add(LinIneq::ge(std::move(coeffs), 1 - static_cast<long>(succ.size())));
  }
  return sys;
}

namespace {

std::set<VarSet> reachable(const Linearization& d, const VarSet& start, bool forward) {
  std::set<VarSet> seen{start};
  std::deque<VarSet> queue{start};
  while (!queue.empty()) {
    VarSet cur = queue.front();
    queue.pop_front();
    for (const auto& next : forward ? d.successors(cur) : d.predecessors(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

void require_node(const Linearization& d, const VarSet& node) {
  if (!d.has_node(node)) throw Error(ErrorCode::UnknownNode, node.to_string() + " is not a node");
}

}  // namespace

bool has_path(const Linearization& d, const VarSet& from, const VarSet& to) {
  require_node(d, from);
  require_node(d, to);
  if (!to.is_subset_of(from)) return false;
  return reachable(d, from, true).count(to) > 0;
}

Point nonpath_witness(const Linearization& d, const VarSet& i_star, const VarSet& j_star) {
  require_node(d, i_star);
  require_node(d, j_star);
  const auto reaching = reachable(d, j_star, false);
  if (reaching.count(i_star))
    throw Error(ErrorCode::PathExists, i_star.to_string() + " reaches " + j_star.to_string());
  Point z;
  for (const auto& node : d.nodes()) z.emplace(VarKey::of(node), reaching.count(node) ? Rational(0) : Rational(1, 2));
  return z;
}

IneqSystem project_relaxation(const Linearization& d, const std::set<VarSet>& targets) {
  std::set<VarKey> keep;
  for (const auto& t : targets) {
    require_node(d, t);
    keep.insert(VarKey::of(t));
  }
  for (int v = 1; v <= d.num_vars(); ++v) keep.insert(VarKey::singleton(v));
  return fm_project(relaxation_system(d), keep);
}

IneqSystem project_relaxation(const Linearization& d, const Hypergraph& g) {
  return project_relaxation(d, std::set<VarSet>(g.edges.begin(), g.edges.end()));
}

namespace {

void require_nonredundant(const ExtendedFlower& f) {
  if (!is_well_formed(f))
    throw Error(ErrorCode::MalformedFlower, "neighbors of " + f.to_string() + " do not cover and meet the center");
  if (!is_nonredundant(f)) {
    std::string which;
    for (const auto& n : f.neighbors) {
      std::vector<int> others;
      for (const auto& m : f.neighbors)
        if (m != n) others = set_union(others, m.set().members());
      auto own = set_difference(set_intersection(n.set().members(), f.center.members()), others);
      if (own.empty()) which += (which.empty() ? "" : ", ") + n.to_string();
    }
    throw Error(ErrorCode::RedundantFlower,
                "in " + f.to_string() + " no center element is covered only by " + which);
  }
}

}  // namespace

FlowerSkeleton flower_skeleton(const ExtendedFlower& f) {
  require_nonredundant(f);
  FlowerSkeleton sk;
  sk.ordered_neighbors = f.neighbors;
  const std::size_t k = f.k();

  std::vector<int> seen;
  for (const auto& n : sk.ordered_neighbors) {
    sk.parts.emplace_back(set_difference(set_intersection(f.center.members(), n.set().members()), seen));
    seen = set_union(seen, n.set().members());
  }

  std::set<VarSet> nodes{f.center};
  std::set<Arc> arcs;
  std::set<VarSet> unprocessed;
  for (const auto& part : sk.parts) {
    nodes.insert(part);
    unprocessed.insert(part);
  }
  // Prefix chain I = L1..Lk -> (L1..L_{k-1}, L_k) -> ... -> (L1, L2).
  VarSet upper = f.center;
  for (std::size_t i = k; i >= 2; --i) {
    std::vector<int> lower_members;
    for (std::size_t j = 0; j + 1 < i; ++j) lower_members = set_union(lower_members, sk.parts[j].members());
    VarSet lower(lower_members);
    if (i > 2) sk.prefixes.push_back(lower);
    nodes.insert(lower);
    arcs.emplace(upper, lower);
    arcs.emplace(upper, sk.parts[i - 1]);
    upper = lower;
  }

  for (std::size_t i = 0; i < k; ++i) {
    const VarSet& neighbor = sk.ordered_neighbors[i].set();
    const VarSet& part = sk.parts[i];
    if (neighbor == part) continue;
    VarSet rest(set_difference(neighbor.members(), part.members()));
    nodes.insert(neighbor);
    nodes.insert(rest);
    arcs.emplace(neighbor, part);
    arcs.emplace(neighbor, rest);
    unprocessed.insert(rest);
  }
  sk.nodes.assign(nodes.begin(), nodes.end());
  sk.arcs.assign(arcs.begin(), arcs.end());
  sk.unprocessed.assign(unprocessed.begin(), unprocessed.end());
  return sk;
}

Linearization mccormick_from_flower(const Hypergraph& g, const ExtendedFlower& f) {
  validate_flower(g, f);
  FlowerSkeleton sk = flower_skeleton(f);

  std::set<VarSet> nodes(sk.nodes.begin(), sk.nodes.end());
  std::set<Arc> arcs(sk.arcs.begin(), sk.arcs.end());
  std::set<VarSet> has_successors;
  for (const auto& [from, to] : arcs) has_successors.insert(from);

  std::set<VarSet> pending(sk.unprocessed.begin(), sk.unprocessed.end());
  auto complete = [&] {
    while (!pending.empty()) {
      VarSet node = *pending.begin();
      pending.erase(pending.begin());
      if (node.size() == 1 || has_successors.count(node)) continue;
      // Balanced split of the sorted members; existing nodes are reused.
      const auto& m = node.members();
      const auto half = static_cast<std::ptrdiff_t>((m.size() + 1) / 2);
      VarSet left(std::vector<int>(m.begin(), m.begin() + half));
      VarSet right(std::vector<int>(m.begin() + half, m.end()));
      for (const VarSet& part : {left, right}) {
        nodes.insert(part);
        arcs.emplace(node, part);
        pending.insert(part);
      }
      has_successors.insert(node);
    }
  };
  complete();
  for (const auto& e : g.edges) {
    nodes.insert(e);
    pending.insert(e);
  }
  complete();
  return LinearizationBuilder::build(g.num_vars, with_singletons(g.num_vars, std::move(nodes)), arcs);
}

std::string to_dot(const Linearization& d, const std::string& name) {
  std::map<VarSet, std::size_t> id;
  std::string out = "digraph " + name + " {\n";
  for (const auto& node : d.nodes()) {
    const std::size_t i = id.size();
    id.emplace(node, i);
    out += "  n" + std::to_string(i) + " [label=\"" + node.to_string() + "\"];\n";
  }
  for (const auto& [from, to] : d.arcs())
    out += "  n" + std::to_string(id.at(from)) + " -> n" + std::to_string(id.at(to)) + ";\n";
  return out + "}\n";
}

}  // namespace mlrelax
