#pragma once

#include <Eigen/Core>

#include "ccfix/geometry.hpp"

namespace ccfix {

/// Value of the pair potential together with the exponent it was computed
/// for; strictly positive on collision-free configurations.
struct PotentialValue {
  double value;
  double alpha;
};

/// U = sum_{i<j} m_i m_j / |q_i - q_j|^alpha.
double potential(const Configuration& cfg, const MassVector& masses,
                 double alpha);
PotentialValue potential_value(const Configuration& cfg,
                               const MassVector& masses, double alpha);

/// dU/dq_i = -alpha * m_i * sum_{j != i} m_j Q_ij, returned as an n x d array.
Eigen::MatrixXd euclidean_gradient(const Configuration& cfg,
                                   const MassVector& masses, double alpha);

/// The normalized negative mass-metric gradient
///   F(q) = -grad_M U / |grad_M U|_M.
/// Translation and scale invariant; the image has mass-norm 1 and zero
/// mass-weighted centroid.
Eigen::MatrixXd f_map(const Configuration& cfg, const MassVector& masses,
                      double alpha);

/// Same map written on the positive cone of mutual differences:
/// the mass-normalization of the rows sum_j m_j Q_ij.  Agrees with f_map to
/// rounding; kept as an independent route for consistency checks.
Eigen::MatrixXd f_map_qform(const Configuration& cfg, const MassVector& masses,
                            double alpha);

/// The proportionality constant of a central configuration, recovered from
/// the homogeneity identity: lambda = -alpha U(q) / I(q) with I the
/// mass-centered moment of inertia.  Negative for any admissible input.
double lambda_of(const Configuration& cfg, const MassVector& masses,
                 double alpha);

/// Analytic second derivatives of U, as a symmetric (n d) x (n d) matrix.
/// Row/column (i, a) maps to index i*d + a.
Eigen::MatrixXd hessian(const Configuration& cfg, const MassVector& masses,
                        double alpha);

/// A configuration certified central: cfg lies on the mass-metric unit
/// sphere, lambda < 0 and residual = |q - F(q)|_M is below the solver
/// tolerance that produced it.
struct CentralConfigCertificate {
  Configuration cfg;
  double lambda;
  double residual;
};

}  // namespace ccfix
