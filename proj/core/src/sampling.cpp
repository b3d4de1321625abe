#include "mlrelax/sampling.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mlrelax {

int Sampler::uniform(int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do draw = engine_();
  while (draw >= limit);
  return lo + static_cast<int>(draw % range);
}

std::vector<int> Sampler::random_subset(const std::vector<int>& from, int size) {
  std::vector<int> pool = from;
  for (int i = 0; i < size; ++i) std::swap(pool[i], pool[uniform(i, static_cast<int>(pool.size()) - 1)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Hypergraph Sampler::hypergraph(int min_vars, int max_vars, int max_edges) {
  const int n = uniform(min_vars, max_vars);
  const int m = uniform(1, max_edges);
  std::vector<int> ground(n);
  for (int v = 0; v < n; ++v) ground[v] = v + 1;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < m; ++i) edges.push_back(random_subset(ground, uniform(2, std::min(4, n))));
  return validate_hypergraph(n, edges);
}

Linearization Sampler::linearization_of(const Hypergraph& g, int max_nodes) {
  std::set<VarSet> nodes(g.edges.begin(), g.edges.end());
  for (int v = 1; v <= g.num_vars; ++v) nodes.insert(VarSet{v});
  std::vector<Arc> arcs;
  std::vector<VarSet> queue(g.edges.begin(), g.edges.end());

  while (!queue.empty()) {
    VarSet node = queue.front();
    queue.erase(queue.begin());
    std::set<VarSet> succ;
    std::vector<int> covered;
    while (covered != node.members()) {
      const auto uncovered = set_difference(node.members(), covered);
      const int pick = uncovered[uniform(0, static_cast<int>(uncovered.size()) - 1)];
      std::optional<VarSet> chosen;
      const bool room = static_cast<int>(nodes.size()) < max_nodes;
      if (room && node.size() >= 3 && coin()) {
        // fresh strict subset containing pick
        std::vector<int> others;
        for (int v : node)
          if (v != pick) others.push_back(v);
        auto members = random_subset(others, uniform(1, static_cast<int>(node.size()) - 2));
        members.push_back(pick);
        chosen = VarSet(members);
      } else {
        std::vector<VarSet> options;
        for (const auto& cand : nodes)
          if (cand.contains(pick) && cand.is_strict_subset_of(node)) options.push_back(cand);
        chosen = options[uniform(0, static_cast<int>(options.size()) - 1)];
      }
      if (succ.insert(*chosen).second) {
        covered = set_union(covered, chosen->members());
        if (nodes.insert(*chosen).second) queue.push_back(*chosen);
      }
    }
    for (const auto& s : succ) arcs.emplace_back(node, s);
  }
  return validate_linearization(g.num_vars, std::vector<VarSet>(nodes.begin(), nodes.end()), arcs, g).digraph;
}

Linearization Sampler::linearization(int num_vars, int max_nodes) {
  std::vector<int> ground(num_vars);
  for (int v = 0; v < num_vars; ++v) ground[v] = v + 1;
  std::vector<std::vector<int>> tops;
  const int count = uniform(1, 2);
  for (int i = 0; i < count; ++i) tops.push_back(random_subset(ground, uniform(2, num_vars)));
  return linearization_of(validate_hypergraph(num_vars, tops), max_nodes);
}

MultilinearInstance Sampler::instance(const Hypergraph& g, int lo, int hi) {
  MultilinearInstance inst;
  inst.hypergraph = g;
  for (const auto& key : g.keys()) {
    const int c = uniform(lo, hi);
    if (c != 0) inst.objective.push_back({c, key});
  }
  return inst;
}

}  // namespace mlrelax
