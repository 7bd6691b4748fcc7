#pragma once

#include <Eigen/Core>

#include "ccfix/errors.hpp"

namespace ccfix {

/// Minimum pairwise separation, relative to the configuration diameter,
/// below which a configuration counts as colliding.  Mutual-difference
/// entries grow like separation^-(alpha+1); 1e-9 keeps them inside double
/// range for alpha <= 2.
inline constexpr double kCollisionEps = 1e-9;

/// Strictly positive mass parameters, one per body.
class MassVector {
 public:
  explicit MassVector(Eigen::VectorXd m);
  static MassVector ones(int n);

  int n() const { return static_cast<int>(m_.size()); }
  const Eigen::VectorXd& values() const { return m_; }
  double operator[](int i) const { return m_(i); }
  double total() const { return m_.sum(); }

 private:
  Eigen::VectorXd m_;
};

/// n labeled points in d-dimensional space, pairwise distinct.
/// Construction rejects collisions within kCollisionEps of the diameter,
/// n < 3 and d < 1.
class Configuration {
 public:
  explicit Configuration(Eigen::MatrixXd points);  // n x d
  static Configuration collinear(const Eigen::VectorXd& q);

  int n() const { return static_cast<int>(points_.rows()); }
  int d() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  /// The single coordinate column; requires d == 1.
  Eigen::VectorXd axis() const;

  double diameter() const;
  double min_separation() const;

 private:
  Eigen::MatrixXd points_;
};

/// Skew-symmetric array of mutual-difference vectors
///   Q_ij = (q_i - q_j) / |q_i - q_j|^(alpha+2),   Q_ii = 0.
/// Skew-symmetry and the zero diagonal hold exactly by construction.
class MutualMatrix {
 public:
  MutualMatrix(const Configuration& cfg, double alpha);

  int n() const { return n_; }
  int d() const { return d_; }
  double alpha() const { return alpha_; }

  /// Q_ij as a d-vector.
  Eigen::MatrixXd::ConstRowXpr vec(int i, int j) const {
    return q_.row(i * n_ + j);
  }
  /// Q_ij for collinear configurations; requires d == 1.
  double scalar(int i, int j) const;

 private:
  Eigen::MatrixXd q_;  // (n*n) x d, row i*n + j holds Q_ij
  int n_;
  int d_;
  double alpha_;
};

MutualMatrix mutual_matrix(const Configuration& cfg, double alpha);

/// Mass-metric inner product  sum_i m_i (v_i . w_i)  on n x d arrays.
double mass_inner(const Eigen::MatrixXd& v, const Eigen::MatrixXd& w,
                  const MassVector& masses);
double mass_norm(const Eigen::MatrixXd& v, const MassVector& masses);

/// Subtracts the mass-weighted centroid; the result has
/// sum_i m_i q_i = 0.  Idempotent and translation invariant.
Configuration project_translations(const Configuration& cfg,
                                   const MassVector& masses);

/// Subtracts the plain centroid (sum_i q_i = 0), the convention used by the
/// inverse problem where masses are unknowns rather than parameters.
Configuration center_unweighted(const Configuration& cfg);

/// Mass-centered configuration scaled so sum_i m_i |q_i|^2 = 1.
Configuration normalize_to_sphere(const Configuration& cfg,
                                  const MassVector& masses);

/// sum_i m_i |q_i|^2 of the mass-centered configuration.
double moment_of_inertia(const Configuration& cfg, const MassVector& masses);

}  // namespace ccfix
