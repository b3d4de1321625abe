#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlrelax/rational.hpp"
#include "mlrelax/varset.hpp"

namespace mlrelax {

using Point = std::map<VarKey, Rational>;

/// sum_k coeffs[k] * z_k >= rhs. After canonicalize() zero coefficients are
/// gone and the coefficients are coprime integers (rhs scaled alongside).
struct LinIneq {
  std::map<VarKey, Rational> coeffs;
  Rational rhs;

  static LinIneq ge(std::map<VarKey, Rational> coeffs, Rational rhs);
  // sum coeffs * z <= rhs, stored negated.
  static LinIneq le(std::map<VarKey, Rational> coeffs, Rational rhs);

  LinIneq& canonicalize();
  LinIneq canonical() const { LinIneq c = *this; return c.canonicalize(); }

  Rational coef(const VarKey& key) const;
  Rational lhs_at(const Point& point) const;  // missing coordinates read as 0
  bool holds_at(const Point& point) const { return lhs_at(point) >= rhs; }
  // 0 >= rhs with rhs <= 0
  bool is_trivial() const { return coeffs.empty() && rhs <= 0; }

  std::string to_string() const;

  friend bool operator==(const LinIneq& a, const LinIneq& b);
  friend bool operator<(const LinIneq& a, const LinIneq& b);
};

LinIneq operator+(const LinIneq& a, const LinIneq& b);
LinIneq operator*(const Rational& factor, const LinIneq& row);

/// A finite H-representation over an ordered variable set. When box() is on,
/// 0 <= z <= 1 holds for every variable without being stored as rows.
class IneqSystem {
 public:
  explicit IneqSystem(bool box = true) : box_(box) {}

  bool box() const noexcept { return box_; }
  const std::set<VarKey>& vars() const noexcept { return vars_; }
  const std::vector<LinIneq>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool has_var(const VarKey& key) const { return vars_.count(key) > 0; }
  bool contains(const LinIneq& canonical_row) const { return index_.count(canonical_row) > 0; }

  void add_var(const VarKey& key) { vars_.insert(key); }
  // Canonicalizes, registers unseen variables, skips trivial rows and exact
  // duplicates. Returns true when the row was appended.
  bool add(LinIneq row);
  // Union of variables and rows.
  std::size_t append(const IneqSystem& other);

  // Stored rows plus, when box() is on, the explicit bound rows.
  std::vector<LinIneq> rows_with_box() const;

 private:
  bool box_;
  std::set<VarKey> vars_;
  std::vector<LinIneq> rows_;
  std::set<LinIneq> index_;
};

std::vector<LinIneq> box_rows(const VarKey& key);

enum class Direction { Minimize, Maximize };

struct LpOutcome {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  Point point;

  bool optimal() const { return status == Status::Optimal; }
};

LpOutcome lp_solve(const IneqSystem& sys, const std::map<VarKey, Rational>& objective,
                   Direction direction);

// True iff ineq holds on all of sys (vacuously for an empty polyhedron).
bool is_valid(const IneqSystem& sys, const LinIneq& ineq);

struct Membership {
  bool member = true;
  std::vector<LinIneq> violated;

  explicit operator bool() const { return member; }
};

// Coordinates outside sys.vars() are ignored.
Membership is_member(const IneqSystem& sys, const Point& point);

IneqSystem fm_eliminate(const IneqSystem& sys, const VarKey& victim, bool prune = true);

// Eliminates every variable not in keep, cheapest pairing count first.
IneqSystem fm_project(const IneqSystem& sys, const std::set<VarKey>& keep, bool prune = true);

IneqSystem remove_redundant(const IneqSystem& sys);

// Every row (and bound) of b is valid for a.
bool is_subset(const IneqSystem& a, const IneqSystem& b);

bool poly_equal(const IneqSystem& a, const IneqSystem& b);

}  // namespace mlrelax
