#include "ccfix/potential.hpp"

#include <cmath>

namespace ccfix {

double potential(const Configuration& cfg, const MassVector& masses,
                 double alpha) {
  if (masses.n() != cfg.n())
    throw ValidationError("mass count does not match configuration");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  const Eigen::MatrixXd& p = cfg.points();
  const Eigen::VectorXd& m = masses.values();
  double u = 0.0;
  for (int i = 0; i < cfg.n(); ++i)
    for (int j = i + 1; j < cfg.n(); ++j)
      u += m(i) * m(j) / std::pow((p.row(i) - p.row(j)).norm(), alpha);
  return u;
}

PotentialValue potential_value(const Configuration& cfg,
                               const MassVector& masses, double alpha) {
  return PotentialValue{potential(cfg, masses, alpha), alpha};
}

Eigen::MatrixXd euclidean_gradient(const Configuration& cfg,
                                   const MassVector& masses, double alpha) {
  const MutualMatrix q = mutual_matrix(cfg, alpha);
  const Eigen::VectorXd& m = masses.values();
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(cfg.n(), cfg.d());
  for (int i = 0; i < cfg.n(); ++i)
    for (int j = i + 1; j < cfg.n(); ++j) {
      const Eigen::RowVectorXd g = -alpha * m(i) * m(j) * q.vec(i, j);
      grad.row(i) += g;
      grad.row(j) -= g;
    }
  return grad;
}

Eigen::MatrixXd f_map(const Configuration& cfg, const MassVector& masses,
                      double alpha) {
  const Eigen::MatrixXd grad = euclidean_gradient(cfg, masses, alpha);
  // grad_M U = M^{-1} grad U
  Eigen::MatrixXd gm =
      grad.array().colwise() / masses.values().array();
  const double norm = mass_norm(gm, masses);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DegenerateInputError("vanishing mass-metric gradient");
  return -gm / norm;
}

Eigen::MatrixXd f_map_qform(const Configuration& cfg, const MassVector& masses,
                            double alpha) {
  const MutualMatrix q = mutual_matrix(cfg, alpha);
  const Eigen::VectorXd& m = masses.values();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(cfg.n(), cfg.d());
  for (int i = 0; i < cfg.n(); ++i)
    for (int j = 0; j < cfg.n(); ++j)
      if (j != i) s.row(i) += m(j) * q.vec(i, j);
  const double norm = mass_norm(s, masses);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DegenerateInputError("vanishing mutual-difference sum");
  return s / norm;
}

double lambda_of(const Configuration& cfg, const MassVector& masses,
                 double alpha) {
  const double u = potential(cfg, masses, alpha);
  const double inertia = moment_of_inertia(cfg, masses);
  return -alpha * u / inertia;
}

Eigen::MatrixXd hessian(const Configuration& cfg, const MassVector& masses,
                        double alpha) {
  if (masses.n() != cfg.n())
    throw ValidationError("mass count does not match configuration");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  const int n = cfg.n();
  const int d = cfg.d();
  const Eigen::MatrixXd& p = cfg.points();
  const Eigen::VectorXd& m = masses.values();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n * d, n * d);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd u = (p.row(i) - p.row(j)).transpose();
      const double r = u.norm();
      // d^2/dq_i^2 of m_i m_j r^-alpha:
      //   alpha m_i m_j ((alpha+2) r^-(alpha+4) u u^T - r^-(alpha+2) I)
      const Eigen::MatrixXd block =
          alpha * m(i) * m(j) *
          ((alpha + 2.0) * std::pow(r, -(alpha + 4.0)) * (u * u.transpose()) -
           std::pow(r, -(alpha + 2.0)) *
               Eigen::MatrixXd::Identity(d, d));
      h.block(i * d, i * d, d, d) += block;
      h.block(j * d, j * d, d, d) += block;
      h.block(i * d, j * d, d, d) -= block;
      h.block(j * d, i * d, d, d) -= block;
    }
  }
  return h;
}

}  // namespace ccfix
