#include "mlrelax/polyhedra.hpp"

#include <algorithm>
#include <optional>
#include <limits>

#include "mlrelax/error.hpp"
#include "mlrelax/simplex.hpp"

namespace mlrelax {

// ---------------------------------------------------------------------------
// LinIneq

LinIneq LinIneq::ge(std::map<VarKey, Rational> coeffs, Rational rhs) {
  LinIneq row{std::move(coeffs), std::move(rhs)};
  return row.canonicalize();
}

LinIneq LinIneq::le(std::map<VarKey, Rational> coeffs, Rational rhs) {
  for (auto& [key, c] : coeffs) c = -c;
  return ge(std::move(coeffs), -rhs);
}

LinIneq& LinIneq::canonicalize() {
  std::erase_if(coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (coeffs.empty()) {
    rhs = sgn(rhs) > 0 ? 1 : 0;
    return *this;
  }
  mpz_class denominators = 1;
  for (const auto& [key, c] : coeffs) denominators = lcm(denominators, c.get_den());
  mpz_class numerators = 0;
  for (const auto& [key, c] : coeffs) {
    mpz_class scaled = c.get_num() * (denominators / c.get_den());
    numerators = gcd(numerators, scaled);
  }
  const Rational factor(denominators, numerators);
  for (auto& [key, c] : coeffs) {
    c *= factor;
    c.canonicalize();
  }
  rhs *= factor;
  rhs.canonicalize();
  return *this;
}

Rational LinIneq::coef(const VarKey& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational LinIneq::lhs_at(const Point& point) const {
  Rational total = 0;
  for (const auto& [key, c] : coeffs) {
    auto it = point.find(key);
    if (it != point.end()) total += c * it->second;
  }
  return total;
}

std::string LinIneq::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [key, c] : coeffs) {
    Rational magnitude = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (magnitude != 1) out += mlrelax::to_string(magnitude) + "*";
    out += key.to_string();
    first = false;
  }
  if (first) out = "0";
  return out + " >= " + mlrelax::to_string(rhs);
}

bool operator==(const LinIneq& a, const LinIneq& b) {
  return a.rhs == b.rhs && a.coeffs == b.coeffs;
}

bool operator<(const LinIneq& a, const LinIneq& b) {
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  for (; ia != a.coeffs.end() && ib != b.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  if (ia != a.coeffs.end() || ib != b.coeffs.end()) return ib != b.coeffs.end();
  return a.rhs < b.rhs;
}

LinIneq operator+(const LinIneq& a, const LinIneq& b) {
  LinIneq out = a;
  for (const auto& [key, c] : b.coeffs) out.coeffs[key] += c;
  out.rhs += b.rhs;
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

LinIneq operator*(const Rational& factor, const LinIneq& row) {
  LinIneq out = row;
  for (auto& [key, c] : out.coeffs) c *= factor;
  out.rhs *= factor;
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<LinIneq> box_rows(const VarKey& key) {
  return {LinIneq::ge({{key, 1}}, 0), LinIneq::ge({{key, -1}}, -1)};
}

// ---------------------------------------------------------------------------
// IneqSystem

bool IneqSystem::add(LinIneq row) {
  row.canonicalize();
  if (row.is_trivial()) return false;
  for (const auto& [key, c] : row.coeffs) vars_.insert(key);
  if (!index_.insert(row).second) return false;
  rows_.push_back(std::move(row));
  return true;
}

std::size_t IneqSystem::append(const IneqSystem& other) {
  std::size_t added = 0;
  for (const auto& key : other.vars_) vars_.insert(key);
  for (const auto& row : other.rows_)
    if (add(row)) ++added;
  return added;
}

std::vector<LinIneq> IneqSystem::rows_with_box() const {
  std::vector<LinIneq> out = rows_;
  if (box_)
    for (const auto& key : vars_)
      for (auto& row : box_rows(key)) out.push_back(std::move(row));
  return out;
}

// ---------------------------------------------------------------------------
// LP plumbing

namespace {

// Rows of a system laid out densely over its variable order.
class DenseView {
 public:
  explicit DenseView(const IneqSystem& sys) : box_(sys.box()), vars_(sys.vars().begin(), sys.vars().end()) {
    for (std::size_t j = 0; j < vars_.size(); ++j) col_.emplace(vars_[j], j);
    for (const auto& row : sys.rows()) push(row);
  }

  std::size_t num_rows() const { return lhs_.size(); }
  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<VarKey>& vars() const { return vars_; }
  const std::vector<Rational>& lhs(std::size_t i) const { return lhs_[i]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  bool box() const { return box_; }

  void push(const LinIneq& row) {
    lhs_.push_back(dense(row.coeffs));
    rhs_.push_back(row.rhs);
  }

  std::vector<Rational> dense(const std::map<VarKey, Rational>& coeffs) const {
    std::vector<Rational> out(vars_.size());
    for (const auto& [key, c] : coeffs) {
      auto it = col_.find(key);
      if (it == col_.end())
        throw Error(ErrorCode::UnsupportedVariable, key.to_string() + " is not a variable of the system");
      out[it->second] = c;
    }
    return out;
  }

  // min c.x over the rows flagged in active (all rows when active is null).
  LpOutcome::Status minimize(const std::vector<char>* active, const std::vector<Rational>& c, Rational& value,
                             std::vector<Rational>* x) const {
    const std::size_t n = vars_.size();
    const std::size_t cols = box_ ? n : 2 * n;
    DenseLp lp;
    lp.objective.assign(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      lp.objective[j] = -c[j];
      if (!box_) lp.objective[n + j] = c[j];
    }
    for (std::size_t i = 0; i < lhs_.size(); ++i) {
      if (active && !(*active)[i]) continue;
      std::vector<Rational> row(cols);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(lhs_[i][j]) == 0) continue;
        row[j] = -lhs_[i][j];
        if (!box_) row[n + j] = lhs_[i][j];
      }
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(-rhs_[i]);
    }
    if (box_) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> row(cols);
        row[j] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.emplace_back(1);
      }
    }
    DenseLpResult res = solve_dense_lp(lp);
    if (res.status == LpStatus::Infeasible) return LpOutcome::Status::Infeasible;
    if (res.status == LpStatus::Unbounded) return LpOutcome::Status::Unbounded;
    value = -res.value;
    if (x) {
      x->assign(n, Rational(0));
      for (std::size_t j = 0; j < n; ++j) (*x)[j] = box_ ? res.x[j] : res.x[j] - res.x[n + j];
    }
    return LpOutcome::Status::Optimal;
  }

  // True when c.x >= rhs holds on the active rows.
  bool implies(const std::vector<char>* active, const std::vector<Rational>& c, const Rational& rhs) const {
    if (box_ && box_minimum(c) >= rhs) return true;
    Rational value;
    switch (minimize(active, c, value, nullptr)) {
      case LpOutcome::Status::Infeasible: return true;
      case LpOutcome::Status::Unbounded: return false;
      case LpOutcome::Status::Optimal: return value >= rhs;
    }
    return false;
  }

  static Rational box_minimum(const std::vector<Rational>& c) {
    Rational total = 0;
    for (const auto& v : c)
      if (sgn(v) < 0) total += v;
    return total;
  }

 private:
  bool box_;
  std::vector<VarKey> vars_;
  std::map<VarKey, std::size_t> col_;
  std::vector<std::vector<Rational>> lhs_;
  std::vector<Rational> rhs_;
};

void require_support(const IneqSystem& sys, const std::map<VarKey, Rational>& coeffs) {
  for (const auto& [key, c] : coeffs)
    if (!sys.has_var(key))
      throw Error(ErrorCode::UnsupportedVariable, key.to_string() + " is not a variable of the system");
}

// Is row i implied by row j together with the box (or by j alone)?
bool dominated_by(const DenseView& view, std::size_t i, std::size_t j) {
  const auto& a = view.lhs(i);
  const auto& b = view.lhs(j);
  if (!view.box()) return a == b && view.rhs(j) >= view.rhs(i);
  const Rational need = view.rhs(i) - view.rhs(j);
  Rational total = 0;
  Rational d;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    d = a[k] - b[k];
    if (sgn(d) < 0) {
      total += d;
      if (total < need) return false;
    }
  }
  return total >= need;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operations

LpOutcome lp_solve(const IneqSystem& sys, const std::map<VarKey, Rational>& objective, Direction direction) {
  require_support(sys, objective);
  DenseView view(sys);
  std::vector<Rational> c = view.dense(objective);
  if (direction == Direction::Maximize)
    for (auto& v : c) v = -v;
  LpOutcome out;
  std::vector<Rational> x;
  Rational value;
  out.status = view.minimize(nullptr, c, value, &x);
  if (out.status == LpOutcome::Status::Optimal) {
    out.value = direction == Direction::Maximize ? Rational(-value) : value;
    for (std::size_t j = 0; j < view.num_vars(); ++j) out.point.emplace(view.vars()[j], x[j]);
  }
  return out;
}

bool is_valid(const IneqSystem& sys, const LinIneq& ineq) {
  require_support(sys, ineq.coeffs);
  LinIneq row = ineq.canonical();
  if (row.is_trivial() || sys.contains(row)) return true;
  DenseView view(sys);
  return view.implies(nullptr, view.dense(row.coeffs), row.rhs);
}

Membership is_member(const IneqSystem& sys, const Point& point) {
  for (const auto& key : sys.vars())
    if (!point.count(key))
      throw Error(ErrorCode::MissingCoordinate, "point has no coordinate for " + key.to_string());
  Membership m;
  auto check = [&](const LinIneq& row) {
    if (!row.holds_at(point)) {
      m.member = false;
      m.violated.push_back(row);
    }
  };
  for (const auto& row : sys.rows()) check(row);
  if (sys.box())
    for (const auto& key : sys.vars())
      for (const auto& row : box_rows(key)) check(row);
  return m;
}

IneqSystem fm_eliminate(const IneqSystem& sys, const VarKey& victim, bool prune) {
  if (!sys.has_var(victim))
    throw Error(ErrorCode::UnknownVariable, victim.to_string() + " is not a variable of the system");
  IneqSystem out(sys.box());
  for (const auto& key : sys.vars())
    if (key != victim) out.add_var(key);

  std::vector<const LinIneq*> positive;
  std::vector<const LinIneq*> negative;
  std::vector<LinIneq> bounds;
  if (sys.box()) bounds = box_rows(victim);
  auto classify = [&](const LinIneq& row) {
    const int s = sgn(row.coef(victim));
    if (s > 0)
      positive.push_back(&row);
    else if (s < 0)
      negative.push_back(&row);
    else
      out.add(row);
  };
  for (const auto& row : sys.rows()) classify(row);
  for (const auto& row : bounds) classify(row);

  for (const LinIneq* p : positive) {
    const Rational a = p->coef(victim);
    for (const LinIneq* q : negative) {
      const Rational b = -q->coef(victim);
      LinIneq combo = b * *p + a * *q;
      combo.coeffs.erase(victim);
      out.add(std::move(combo));
    }
  }
  return prune ? remove_redundant(out) : out;
}

IneqSystem fm_project(const IneqSystem& sys, const std::set<VarKey>& keep, bool prune) {
  IneqSystem current = sys;
  for (;;) {
    std::optional<VarKey> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (const auto& key : current.vars()) {
      if (keep.count(key)) continue;
      std::size_t pos = current.box() ? 1 : 0;
      std::size_t neg = pos;
      for (const auto& row : current.rows()) {
        const int s = sgn(row.coef(key));
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos * neg < best_cost) {
        best_cost = pos * neg;
        best = key;
      }
    }
    if (!best) return current;
    current = fm_eliminate(current, *best, prune);
  }
}

IneqSystem remove_redundant(const IneqSystem& sys) {
  DenseView view(sys);
  const std::size_t m = view.num_rows();
  std::vector<char> alive(m, 1);

  if (view.box())
    for (std::size_t i = 0; i < m; ++i)
      if (DenseView::box_minimum(view.lhs(i)) >= view.rhs(i)) alive[i] = 0;

  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || !alive[j]) continue;
      if (dominated_by(view, i, j)) {
        alive[i] = 0;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    alive[i] = 0;
    if (!view.implies(&alive, view.lhs(i), view.rhs(i))) alive[i] = 1;
  }

  IneqSystem out(sys.box());
  for (const auto& key : sys.vars()) out.add_var(key);
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) out.add(sys.rows()[i]);
  return out;
}

bool is_subset(const IneqSystem& a, const IneqSystem& b) {
  for (const auto& key : b.vars())
    if (!a.has_var(key))
      throw Error(ErrorCode::VariableMismatch, key.to_string() + " is missing from the left-hand system");
  DenseView view(a);
  auto implied = [&](const LinIneq& row) {
    return a.contains(row) || view.implies(nullptr, view.dense(row.coeffs), row.rhs);
  };
  for (const auto& row : b.rows())
    if (!implied(row)) return false;
  if (b.box() && !a.box())
    for (const auto& key : b.vars())
      for (const auto& row : box_rows(key))
        if (!implied(row)) return false;
  return true;
}

bool poly_equal(const IneqSystem& a, const IneqSystem& b) {
  if (a.vars() != b.vars()) throw Error(ErrorCode::VariableMismatch, "systems are over different variables");
  return is_subset(a, b) && is_subset(b, a);
}

}  // namespace mlrelax
