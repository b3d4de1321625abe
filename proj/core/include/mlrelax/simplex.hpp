#pragma once

#include <vector>

#include "mlrelax/rational.hpp"

namespace mlrelax {

// max c.x  s.t.  A x <= b,  x >= 0, solved exactly by a two-phase dictionary
// simplex with Bland's rule. A is dense, row-major, rows.size() == b.size().
struct DenseLp {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct DenseLpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  long pivots = 0;
};

DenseLpResult solve_dense_lp(const DenseLp& lp);

}  // namespace mlrelax
