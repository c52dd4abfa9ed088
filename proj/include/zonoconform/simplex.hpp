#ifndef ZONOCONFORM_SIMPLEX_HPP_
#define ZONOCONFORM_SIMPLEX_HPP_

#include <limits>
#include <string>

#include "zonoconform/types.hpp"

namespace zonoconform {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// Dense linear program:
///   min c'x  subject to  a.row(i)'x  {<=,=,>=}  b(i),   lower <= x <= upper.
/// Bounds may be +-kLpInfinity. rel holds one of '<', '=', '>' per row.
struct LpProblem {
  Matrix a;
  Vector b;
  Vector c;
  std::string rel;
  Vector lower;
  Vector upper;

  static LpProblem make(Index rows, Index cols);
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  Vector x;
};

/// Two-phase primal simplex on a dense tableau with bounded variables.
/// Deterministic: Dantzig pricing with lowest-index tie-breaking, falling
/// back to Bland's rule when the objective stalls. Optima are accurate to
/// ~1e-9 on well-scaled problems; callers normalise their data first.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace zonoconform

#endif  // ZONOCONFORM_SIMPLEX_HPP_
