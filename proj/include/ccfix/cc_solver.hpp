#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "ccfix/ordering.hpp"
#include "ccfix/potential.hpp"
#include "ccfix/projective.hpp"

namespace ccfix {

/// Eigenvalues within this relative distance of zero make a critical point
/// degenerate, leaving the index undefined.
inline constexpr double kDegenEps = 1e-8;

/// Finds the central configuration of one collinear ordering component by
/// minimizing the potential on the mass-metric unit sphere inside the open
/// cone: projected (eigenvalue-modified) Newton with Armijo backtracking,
/// halving any step that would leave the component, started from the
/// equally spaced configuration of the ordering.
CentralConfigCertificate solve_component(const OrderingComponent& comp,
                                         const MassVector& masses,
                                         double alpha, double tol = 1e-10,
                                         int max_iter = 200);

struct CollinearSolution {
  OrderingComponent component;
  CentralConfigCertificate certificate;
};

struct EnumerationFailure {
  OrderingComponent component;
  double best_residual;
  std::string message;
};

/// One certificate per projective ordering class (n!/2 of them for n
/// bodies), sorted by permutation, deduplicated by projective distance
/// below 10*tol.  Components that fail to converge are reported alongside
/// the partial result instead of aborting the run.
struct EnumerationResult {
  std::vector<CollinearSolution> solutions;
  std::vector<EnumerationFailure> failures;
};

EnumerationResult enumerate_collinear(const MassVector& masses, double alpha,
                                      double tol = 1e-10);

/// Morse data at a collinear certificate: mu counts the negative
/// eigenvalues of the second variation of the potential on the sphere
///   B' (Hess U - lambda M) B
/// in a mass-orthonormal tangent frame B (translations and the radial
/// direction removed); the fixed point index is (-1)^mu.
struct IndexReport {
  CentralConfigCertificate certificate;
  int mu = 0;
  int fp_index = 1;
  std::vector<double> eigenvalues;  // ascending
};

IndexReport morse_index(const CentralConfigCertificate& cert,
                        const MassVector& masses, double alpha);

/// Damped fixed-point iteration q <- normalize((1-s) q + s F(q)) with the
/// step shrunk until the residual decreases.  In dimension >= 2 the
/// residual is measured after optimally rotating F(q) onto q, so
/// convergence is detected up to rotation.
CentralConfigCertificate solve_fixed_point_iterative(const Configuration& start,
                                                     const MassVector& masses,
                                                     double alpha,
                                                     double tol = 1e-10,
                                                     int max_iter = 2000);

/// Mass-orthonormal basis of the tangent space
/// {v : sum m_i v_i = 0, <v, q>_M = 0} at a collinear unit-sphere point.
Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& q,
                                     const MassVector& masses);

/// Best special-orthogonal alignment of `from` onto `onto` in the mass
/// metric (mass-weighted Kabsch); returns the d x d rotation.
Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& onto,
                                    const Eigen::MatrixXd& from,
                                    const MassVector& masses);

}  // namespace ccfix
