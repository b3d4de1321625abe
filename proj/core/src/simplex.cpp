#include "mlrelax/simplex.hpp"

#include <cassert>
#include <cstddef>

namespace mlrelax {

namespace {

// Dictionary form: x_basic[i] = rhs[i] - sum_j coef[i][j] * x_nonbasic[j],
// objective = value + sum_j cost[j] * x_nonbasic[j].
class Dictionary {
 public:
  Dictionary(const DenseLp& lp) : m_(lp.rhs.size()), n_(lp.objective.size()) {
    coef_ = lp.rows;
    rhs_ = lp.rhs;
    basic_.resize(m_);
    nonbasic_.resize(n_);
    for (std::size_t i = 0; i < m_; ++i) basic_[i] = static_cast<int>(n_ + i);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = static_cast<int>(j);
    cost_.assign(n_, Rational(0));
  }

  DenseLpResult solve(const std::vector<Rational>& objective) {
    DenseLpResult result;
    if (!make_feasible()) {
      result.status = LpStatus::Infeasible;
      result.pivots = pivots_;
      return result;
    }
    set_objective(objective);
    if (!optimize()) {
      result.status = LpStatus::Unbounded;
      result.pivots = pivots_;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.value = value_;
    result.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < static_cast<int>(n_)) result.x[basic_[i]] = rhs_[i];
    result.pivots = pivots_;
    return result;
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    const std::size_t cols = nonbasic_.size();
    auto& prow = coef_[r];
    const Rational inv = 1 / prow[s];
    rhs_[r] *= inv;
    for (std::size_t j = 0; j < cols; ++j)
      if (j != s && sgn(prow[j]) != 0) prow[j] *= inv;
    prow[s] = inv;

    Rational a;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(coef_[i][s]) == 0) continue;
      a = coef_[i][s];
      auto& row = coef_[i];
      rhs_[i] -= a * rhs_[r];
      for (std::size_t j = 0; j < cols; ++j)
        if (j != s && sgn(prow[j]) != 0) row[j] -= a * prow[j];
      row[s] = -a * inv;
    }
    if (sgn(cost_[s]) != 0) {
      a = cost_[s];
      value_ += a * rhs_[r];
      for (std::size_t j = 0; j < cols; ++j)
        if (j != s && sgn(prow[j]) != 0) cost_[j] -= a * prow[j];
      cost_[s] = -a * inv;
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: lowest-index improving column, lowest-index leaving row
  // among the ratio-test ties. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::ptrdiff_t s = -1;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j)
        if (sgn(cost_[j]) > 0 && (s < 0 || nonbasic_[j] < nonbasic_[s])) s = static_cast<std::ptrdiff_t>(j);
      if (s < 0) return true;
      std::ptrdiff_t r = -1;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(coef_[i][s]) <= 0) continue;
        if (r < 0) {
          r = static_cast<std::ptrdiff_t>(i);
          continue;
        }
        const int cmp = cmp_ratio(i, static_cast<std::size_t>(r), static_cast<std::size_t>(s));
        if (cmp < 0 || (cmp == 0 && basic_[i] < basic_[r])) r = static_cast<std::ptrdiff_t>(i);
      }
      if (r < 0) return false;
      pivot(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
    }
  }

  int cmp_ratio(std::size_t i, std::size_t k, std::size_t s) const {
    return cmp(rhs_[i] * coef_[k][s], rhs_[k] * coef_[i][s]);
  }

  // Phase one with a single auxiliary column x0 (x_basic = rhs + x0).
  bool make_feasible() {
    std::ptrdiff_t worst = -1;
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(rhs_[i]) < 0 && (worst < 0 || rhs_[i] < rhs_[worst] ||
                               (rhs_[i] == rhs_[worst] && basic_[i] < basic_[worst])))
        worst = static_cast<std::ptrdiff_t>(i);
    if (worst < 0) return true;

    const int aux = static_cast<int>(n_ + m_);
    const std::size_t aux_col = nonbasic_.size();
    nonbasic_.push_back(aux);
    for (auto& row : coef_) row.emplace_back(-1);
    cost_.assign(nonbasic_.size(), Rational(0));
    cost_[aux_col] = -1;
    value_ = 0;
    pivot(static_cast<std::size_t>(worst), aux_col);
    optimize();
    if (sgn(value_) < 0) return false;

    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] != aux) continue;
      std::ptrdiff_t s = -1;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j)
        if (sgn(coef_[i][j]) != 0 && (s < 0 || nonbasic_[j] < nonbasic_[s])) s = static_cast<std::ptrdiff_t>(j);
      assert(s >= 0);
      pivot(i, static_cast<std::size_t>(s));
      break;
    }
    std::size_t col = 0;
    while (nonbasic_[col] != aux) ++col;
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(col));
    for (auto& row : coef_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    return true;
  }

  void set_objective(const std::vector<Rational>& objective) {
    cost_.assign(nonbasic_.size(), Rational(0));
    value_ = 0;
    for (std::size_t j = 0; j < nonbasic_.size(); ++j)
      if (nonbasic_[j] < static_cast<int>(n_)) cost_[j] += objective[nonbasic_[j]];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] >= static_cast<int>(n_)) continue;
      const Rational& c = objective[basic_[i]];
      if (sgn(c) == 0) continue;
      value_ += c * rhs_[i];
      for (std::size_t j = 0; j < nonbasic_.size(); ++j)
        if (sgn(coef_[i][j]) != 0) cost_[j] -= c * coef_[i][j];
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  Rational value_ = 0;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  long pivots_ = 0;
};

}  // namespace

DenseLpResult solve_dense_lp(const DenseLp& lp) {
  Dictionary dict(lp);
  return dict.solve(lp.objective);
}

}  // namespace mlrelax
