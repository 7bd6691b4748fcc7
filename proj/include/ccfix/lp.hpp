#pragma once

#include <limits>
#include <vector>

#include <Eigen/Core>

#include "ccfix/errors.hpp"

namespace ccfix {

/// Feasibility / optimality tolerance of the simplex kernel, applied after
/// row equilibration.
inline constexpr double kLpTol = 1e-9;

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

enum class RowSense { Eq, Le, Ge };
enum class LPSense { Maximize, Minimize };

enum class LPStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

/// Dense linear program
///   optimize c'x  subject to  A x (sense) b,  lower <= x <= upper,
/// with +-infinity allowed in the bounds.
struct LinearProgram {
  Eigen::MatrixXd A;            // m x k
  Eigen::VectorXd b;            // m
  std::vector<RowSense> sense;  // m
  Eigen::VectorXd c;            // k
  LPSense objective_sense = LPSense::Maximize;
  Eigen::VectorXd lower;  // k
  Eigen::VectorXd upper;  // k

  /// Zero program with the classic default bounds 0 <= x < inf.
  static LinearProgram make(int rows, int cols);
};

struct LPResult {
  LPStatus status = LPStatus::NumericalFailure;
  Eigen::VectorXd x;      // k, valid when Optimal
  double objective = 0.0; // c'x in the requested sense; for Infeasible, the
                          // phase-1 certificate value
  int iterations = 0;
  double max_violation = 0.0;  // scaled constraint/bound violation
};

/// Two-phase dense primal simplex with Bland's anti-cycling rule.  Rows are
/// equilibrated before solving; phase 1 decides feasibility, phase 2
/// optimizes.  Exceeding the pivot cap 1e4*(m+k) yields NumericalFailure,
/// distinct from Infeasible.
LPResult solve_lp(const LinearProgram& lp);

struct HullResult {
  bool member = false;
  Eigen::VectorXd coefficients;  // one per vertex, valid when member
  double violation = 0.0;
};

/// Is `point` a convex combination of `vertices`?  Solved as the LP
/// feasibility  sum_j lambda_j v_j = point, sum_j lambda_j = 1,
/// lambda >= 0, accepted when the scaled equality slack is at most tol.
HullResult hull_membership(const Eigen::VectorXd& point,
                           const std::vector<Eigen::VectorXd>& vertices,
                           double tol = kLpTol);

}  // namespace ccfix
