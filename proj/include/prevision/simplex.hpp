#pragma once

#include "prevision/numeric.hpp"

namespace prevision {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Result of an exact LP over the standard-form polytope
/// { x >= 0 : A x = b }.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RVector x;           // primal optimum when Optimal
  Rational objective;  // c^T x when Optimal
  /// When Infeasible: y with y^T A <= 0 componentwise and y^T b > 0,
  /// verified exactly before being returned.
  RVector farkas;
};

/// Two-phase dense simplex over exact rationals, Bland's rule, so every
/// pivot sequence terminates and every verdict is exact.
LpResult lp_maximize(const RMatrix& A, const RVector& b, const RVector& c);
LpResult lp_minimize(const RMatrix& A, const RVector& b, const RVector& c);

/// Feasibility only (phase 1): x is some feasible point when one exists.
LpResult lp_feasible(const RMatrix& A, const RVector& b);

}  // namespace prevision
