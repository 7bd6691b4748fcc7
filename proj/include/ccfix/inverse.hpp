#pragma once

#include <vector>

#include <Eigen/Core>

#include "ccfix/lp.hpp"
#include "ccfix/simplex_coords.hpp"

namespace ccfix {

/// Absolute tolerance on the mass-recovery equality constraints, measured
/// on equilibrated rows.
inline constexpr double kFeasTol = 1e-9;
/// Relative floor below which a recovered mass counts as zero.
inline constexpr double kPosTol = 1e-9;

/// The (n-1) x n inverse-problem matrix with entries Q_{i,j} - Q_{i+1,j},
/// built from the span-1, zero-sum configuration of a gap point, together
/// with the column sums Q_{1,j} + Q_{j,n} (verified, strictly positive).
class YMatrix {
 public:
  YMatrix(Eigen::MatrixXd y, Eigen::VectorXd colsum, double alpha);

  int n() const { return static_cast<int>(y_.cols()); }
  const Eigen::MatrixXd& y() const { return y_; }
  const Eigen::VectorXd& colsum() const { return colsum_; }
  double alpha() const { return alpha_; }

 private:
  Eigen::MatrixXd y_;
  Eigen::VectorXd colsum_;
  double alpha_;
};

YMatrix y_matrix(const GapPoint& x, double alpha);

/// The n normalized columns Y_j / (Q_{1j} + Q_{jn}); each lies in the
/// coordinate-sum-1 slice, and their convex hull is the value of the
/// simplex-valued map at x.
struct PsiImage {
  std::vector<Eigen::VectorXd> vertices;  // n vectors of length n-1
  double alpha = 0.0;
};

PsiImage psi_vertices(const GapPoint& x, double alpha);

/// x is solvable with nonnegative masses exactly when it is a convex
/// combination of its own psi vertices; returns the hull coefficients.
HullResult psi_contains(const GapPoint& x, double alpha, double tol = kFeasTol);

/// Positive masses solving Y m = c x, scaled to sum m = n.  The LP
/// maximizes the smallest mass; `lp_optimum` is that value and serves as the
/// certificate when no strictly positive solution exists.  In the (rank
/// deficient) case where even sign-unrestricted masses cannot satisfy the
/// system, `system_solvable` is false and `residual` carries the phase-1
/// infeasibility measure.
struct MassSolution {
  bool feasible = false;
  bool system_solvable = true;
  Eigen::VectorXd m;
  double c = 0.0;         // proportionality scale, positive when feasible
  double residual = 0.0;  // scaled max violation of Y m = c x
  double min_mass = 0.0;
  double lp_optimum = 0.0;
};

MassSolution solve_masses(const GapPoint& x, double alpha,
                          double pos_tol = kPosTol);

/// Exact elimination oracle for three bodies: the solution set of
/// Y m = c x (any c) is a plane; with sum m = 3 it is the affine line
/// base + t * direction.  Independent of the LP path.
struct MassFamilyN3 {
  Eigen::Vector3d base;       // sum 3, on the solution line
  Eigen::Vector3d direction;  // sum 0, unit
  bool has_positive_segment = false;
  double t_low = 0.0;   // open interval of t with all masses positive
  double t_high = 0.0;

  Eigen::Vector3d at(double t) const { return base + t * direction; }
  bool contains(const Eigen::Vector3d& m, double tol) const;
};

MassFamilyN3 n3_parametric_oracle(const GapPoint& x, double alpha);

/// The three scalar maps of the three-body picture: vertices of the
/// simplex-valued map pushed through the arc chart
/// t -> (t, sqrt(1-t^2)) rotated by pi/4.  Always f1 > f2 > f3.
struct FMapsN3 {
  double f1, f2, f3;
};

FMapsN3 f_maps_n3(double t, double alpha);

/// Gap point of the arc parameter t in (-sqrt(2)/2, sqrt(2)/2).
GapPoint gap_of_arc_parameter(double t);

}  // namespace ccfix
