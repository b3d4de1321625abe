#include "mlrelax/relaxations.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "mlrelax/error.hpp"

namespace mlrelax {

ExtendedFlower::ExtendedFlower(VarSet c, std::vector<VarKey> n) : center(std::move(c)), neighbors(std::move(n)) {
  std::sort(neighbors.begin(), neighbors.end());
  neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
}

bool ExtendedFlower::has_edge_neighbor() const {
  return std::any_of(neighbors.begin(), neighbors.end(), [](const VarKey& k) { return k.is_edge(); });
}

std::string ExtendedFlower::to_string() const {
  std::string out = center.to_string() + " |";
  for (std::size_t i = 0; i < neighbors.size(); ++i) out += (i ? ", " : " ") + neighbors[i].to_string();
  return out;
}

bool is_well_formed(const ExtendedFlower& f) {
  if (f.neighbors.empty()) return false;
  std::vector<int> covered;
  for (const auto& n : f.neighbors) {
    if (n.set() == f.center || !n.set().intersects(f.center)) return false;
    covered = set_union(covered, n.set().members());
  }
  return f.center.is_subset_of(VarSet(covered));
}

void validate_flower(const Hypergraph& g, const ExtendedFlower& f) {
  if (!is_well_formed(f))
    throw Error(ErrorCode::MalformedFlower, "neighbors of " + f.to_string() + " do not cover and meet the center");
  auto in_graph = [&](const VarSet& s) {
    if (s.front() < 1 || s.back() > g.num_vars) return false;
    return s.size() == 1 || g.has_edge(s);
  };
  if (!in_graph(f.center))
    throw Error(ErrorCode::MalformedFlower, "center " + f.center.to_string() + " is not a node of G");
  for (const auto& n : f.neighbors)
    if (!in_graph(n.set()))
      throw Error(ErrorCode::MalformedFlower, "neighbor " + n.to_string() + " is not in E or S");
}

FlowerKind flower_kind(const ExtendedFlower& f) {
  std::vector<int> seen;
  for (const auto& n : f.neighbors) {
    auto part = set_intersection(n.set().members(), f.center.members());
    if (!set_intersection(seen, part).empty()) return FlowerKind::ExtendedOnly;
    seen = set_union(seen, part);
  }
  return FlowerKind::Flower;
}

IneqSystem standard_relaxation(const Hypergraph& g) {
  IneqSystem sys(true);
  for (const auto& key : g.keys()) sys.add_var(key);
  for (const auto& e : g.edges) {
    const VarKey z = VarKey::edge(e);
    std::map<VarKey, Rational> long_row{{z, 1}};
    for (int v : e) {
      sys.add(LinIneq::ge({{VarKey::singleton(v), 1}, {z, -1}}, 0));
      long_row[VarKey::singleton(v)] = -1;
    }
    sys.add(LinIneq::ge(std::move(long_row), 1 - static_cast<long>(e.size())));
  }
  return sys;
}

LinIneq flower_ineq(const ExtendedFlower& f) {
  if (!is_well_formed(f))
    throw Error(ErrorCode::MalformedFlower, "neighbors of " + f.to_string() + " do not cover and meet the center");
  std::map<VarKey, Rational> coeffs{{VarKey::of(f.center), 1}};
  for (const auto& n : f.neighbors) coeffs[n] = -1;
  return LinIneq::ge(std::move(coeffs), 1 - static_cast<long>(f.k()));
}

namespace {

bool covers_without(const ExtendedFlower& f, std::size_t skip) {
  std::vector<int> covered;
  for (std::size_t i = 0; i < f.neighbors.size(); ++i)
    if (i != skip) covered = set_union(covered, f.neighbors[i].set().members());
  return std::includes(covered.begin(), covered.end(), f.center.begin(), f.center.end());
}

}  // namespace

bool is_nonredundant(const ExtendedFlower& f) {
  for (std::size_t i = 0; i < f.neighbors.size(); ++i) {
    bool exclusive = false;
    for (int v : f.neighbors[i].set()) {
      if (!f.center.contains(v)) continue;
      bool elsewhere = false;
      for (std::size_t j = 0; j < f.neighbors.size() && !elsewhere; ++j)
        elsewhere = j != i && f.neighbors[j].set().contains(v);
      if (!elsewhere) {
        exclusive = true;
        break;
      }
    }
    if (!exclusive) return false;
  }
  return true;
}

ExtendedFlower minimalize(const ExtendedFlower& f) {
  ExtendedFlower out = f;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < out.neighbors.size(); ++i) {
      if (covers_without(out, i)) {
        out.neighbors.erase(out.neighbors.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask mask_within(const VarSet& center, const VarSet& s) {
  Mask m = 0;
  for (std::size_t p = 0; p < center.size(); ++p)
    if (s.contains(center.members()[p])) m |= Mask{1} << p;
  return m;
}

struct Candidate {
  VarKey key;
  Mask mask;
};

std::vector<Candidate> candidates_for(const Hypergraph& g, const VarSet& center) {
  std::vector<Candidate> out;
  for (const auto& key : g.keys()) {
    if (key.set() == center) continue;
    const Mask m = mask_within(center, key.set());
    if (m) out.push_back({key, m});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  return out;
}

}  // namespace

std::vector<EnumeratedFlower> enumerate_flowers(const Hypergraph& g, int max_neighbors) {
  std::vector<EnumeratedFlower> out;
  for (const auto& center : g.edges) {
    if (center.size() > 63) throw Error(ErrorCode::CenterTooLarge, center.to_string() + " is too large to enumerate");
    const auto cands = candidates_for(g, center);
    const Mask full = (Mask{1} << center.size()) - 1;
    const std::size_t cap = max_neighbors > 0 ? std::min<std::size_t>(max_neighbors, center.size()) : center.size();

    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> found;
    // Every chosen neighbor must keep an element no other chosen neighbor has.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t size) {
      if (chosen.size() == size) {
        Mask covered = 0;
        for (auto c : chosen) covered |= cands[c].mask;
        if (covered == full) found.push_back(chosen);
        return;
      }
      for (std::size_t c = start; c < cands.size(); ++c) {
        chosen.push_back(c);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
          Mask others = 0;
          for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) others |= cands[chosen[j]].mask;
          ok = (cands[chosen[i]].mask & ~others) != 0;
        }
        if (ok) extend(c + 1, size);
        chosen.pop_back();
      }
    };
    for (std::size_t size = 1; size <= cap; ++size) extend(0, size);

    for (const auto& combo : found) {
      std::vector<VarKey> neighbors;
      for (auto c : combo) neighbors.push_back(cands[c].key);
      ExtendedFlower f(center, std::move(neighbors));
      const FlowerKind kind = flower_kind(f);
      out.push_back({std::move(f), kind});
    }
  }
  return out;
}

IneqSystem flower_relaxation(const Hypergraph& g, int max_neighbors) {
  IneqSystem sys = standard_relaxation(g);
  for (const auto& ef : enumerate_flowers(g, max_neighbors)) sys.add(flower_ineq(ef.flower));
  return sys;
}

namespace {

struct Best {
  std::optional<ViolatedFlower> found;

  static bool better(const ExtendedFlower& a, const Rational& va, const ExtendedFlower& b, const Rational& vb) {
    if (va != vb) return va > vb;
    if (a.center != b.center) return a.center < b.center;
    if (a.k() != b.k()) return a.k() < b.k();
    return a.neighbors < b.neighbors;
  }

  void offer(ExtendedFlower f, Rational violation) {
    if (sgn(violation) <= 0) return;
    if (!found || better(f, violation, found->flower, found->violation))
      found = ViolatedFlower{std::move(f), std::move(violation)};
  }
};

// Minimum cost of covering `full` starting from `start` with at most `sets`
// candidates taken from cands[from..]. Returns nullopt when impossible.
std::optional<Rational> completion_cost(const std::vector<Candidate>& cands, const std::vector<Rational>& weight,
                                        std::size_t from, std::size_t sets, Mask start, Mask full) {
  const std::size_t states = static_cast<std::size_t>(full) + 1;
  std::vector<std::optional<Rational>> cur(states);
  cur[start] = Rational(0);
  std::optional<Rational> best;
  if (start == full) best = Rational(0);
  for (std::size_t t = 0; t < sets; ++t) {
    std::vector<std::optional<Rational>> next = cur;
    for (std::size_t u = 0; u < states; ++u) {
      if (!cur[u]) continue;
      for (std::size_t c = from; c < cands.size(); ++c) {
        const std::size_t v = u | cands[c].mask;
        Rational cost = *cur[u] + weight[c];
        if (!next[v] || cost < *next[v]) next[v] = std::move(cost);
      }
    }
    cur = std::move(next);
    if (cur[full] && (!best || *cur[full] < *best)) best = cur[full];
  }
  return best;
}

}  // namespace

std::optional<ViolatedFlower> separate_flower(const Hypergraph& g, const Point& point, int max_neighbors,
                                              int cover_guard) {
  for (const auto& key : g.keys())
    if (!point.count(key))
      throw Error(ErrorCode::MissingCoordinate, "point has no coordinate for " + key.to_string());
  auto value = [&](const VarKey& key) -> const Rational& { return point.at(key); };

  std::vector<VarSet> centers(g.edges.begin(), g.edges.end());
  for (int v = 1; v <= g.num_vars; ++v) centers.push_back(VarSet{v});
  std::sort(centers.begin(), centers.end());

  Best best;
  for (const auto& center : centers) {
    if (center.size() == 1) {
      // x_v - z_I >= 0 for every edge I containing v
      const VarKey x = VarKey::singleton(center.front());
      for (const auto& e : g.edges)
        if (e.contains(center.front()))
          best.offer(ExtendedFlower(center, {VarKey::edge(e)}), value(VarKey::edge(e)) - value(x));
      continue;
    }
    if (static_cast<int>(center.size()) > cover_guard)
      throw Error(ErrorCode::CenterTooLarge, center.to_string() + " exceeds the cover guard of " +
                                                 std::to_string(cover_guard));
    const VarKey z = VarKey::edge(center);
    const auto cands = candidates_for(g, center);
    std::vector<Rational> weight;
    for (const auto& c : cands) weight.push_back(1 - value(c.key));
    const Mask full = (Mask{1} << center.size()) - 1;
    const std::size_t cap =
        max_neighbors > 0 ? std::min<std::size_t>(max_neighbors, center.size()) : center.size();

    if (cap < center.size()) {
      // The all-singleton row belongs to the standard part of the relaxation.
      std::vector<VarKey> singles;
      Rational cost = 0;
      for (int v : center) {
        singles.push_back(VarKey::singleton(v));
        cost += 1 - value(VarKey::singleton(v));
      }
      best.offer(ExtendedFlower(center, std::move(singles)), 1 - value(z) - cost);
    }

    // Minimum cover cost per exact number of sets.
    const std::size_t states = static_cast<std::size_t>(full) + 1;
    std::vector<std::optional<Rational>> layer(states);
    layer[0] = Rational(0);
    std::optional<Rational> min_cost;
    std::size_t min_sets = 0;
    for (std::size_t t = 1; t <= cap; ++t) {
      std::vector<std::optional<Rational>> next(states);
      for (std::size_t u = 0; u < states; ++u) {
        if (!layer[u]) continue;
        for (std::size_t c = 0; c < cands.size(); ++c) {
          const std::size_t v = u | cands[c].mask;
          Rational cost = *layer[u] + weight[c];
          if (!next[v] || cost < *next[v]) next[v] = std::move(cost);
        }
      }
      layer = std::move(next);
      if (layer[full] && (!min_cost || *layer[full] < *min_cost)) {
        min_cost = layer[full];
        min_sets = t;
      }
    }
    if (!min_cost) continue;
    Rational violation = 1 - value(z) - *min_cost;
    if (sgn(violation) <= 0) continue;

    // Lexicographically smallest cover with min_sets members at min_cost.
    std::vector<VarKey> chosen;
    Mask covered = 0;
    Rational spent = 0;
    std::size_t from = 0;
    for (std::size_t pos = 0; pos < min_sets; ++pos) {
      for (std::size_t c = from; c < cands.size(); ++c) {
        const Rational budget = *min_cost - spent - weight[c];
        auto rest = completion_cost(cands, weight, c + 1, min_sets - pos - 1, covered | cands[c].mask, full);
        if (rest && *rest <= budget) {
          chosen.push_back(cands[c].key);
          covered |= cands[c].mask;
          spent += weight[c];
          from = c + 1;
          break;
        }
      }
    }
    best.offer(minimalize(ExtendedFlower(center, std::move(chosen))), std::move(violation));
  }
  return best.found;
}

}  // namespace mlrelax
