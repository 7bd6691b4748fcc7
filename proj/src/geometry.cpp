#include "ccfix/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ccfix {

MassVector::MassVector(Eigen::VectorXd m) : m_(std::move(m)) {
  if (m_.size() == 0) throw ValidationError("mass vector is empty");
  if (!m_.allFinite()) throw ValidationError("mass vector has non-finite entries");
  if ((m_.array() <= 0.0).any())
    throw ValidationError("masses must be strictly positive");
}

MassVector MassVector::ones(int n) {
  return MassVector(Eigen::VectorXd::Ones(n));
}

Configuration::Configuration(Eigen::MatrixXd points)
    : points_(std::move(points)) {
  if (points_.rows() < 3)
    throw ValidationError("configuration needs at least 3 points");
  if (points_.cols() < 1)
    throw ValidationError("spatial dimension must be at least 1");
  if (!points_.allFinite())
    throw ValidationError("configuration has non-finite coordinates");

  const double diam = diameter();
  const double sep = min_separation();
  if (!(sep > kCollisionEps * diam)) {
    std::ostringstream os;
    os << "points are not pairwise distinct: min separation " << sep
       << " vs diameter " << diam;
    throw CollisionError(os.str());
  }
}

Configuration Configuration::collinear(const Eigen::VectorXd& q) {
  Eigen::MatrixXd pts(q.size(), 1);
  pts.col(0) = q;
  return Configuration(std::move(pts));
}

Eigen::VectorXd Configuration::axis() const {
  if (d() != 1) throw ValidationError("axis() requires a collinear configuration");
  return points_.col(0);
}

double Configuration::diameter() const {
  double diam = 0.0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      diam = std::max(diam, (points_.row(i) - points_.row(j)).norm());
  return diam;
}

double Configuration::min_separation() const {
  double sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      sep = std::min(sep, (points_.row(i) - points_.row(j)).norm());
  return sep;
}

MutualMatrix::MutualMatrix(const Configuration& cfg, double alpha)
    : n_(cfg.n()), d_(cfg.d()), alpha_(alpha) {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  q_ = Eigen::MatrixXd::Zero(n_ * n_, d_);
  const Eigen::MatrixXd& p = cfg.points();
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Eigen::RowVectorXd u = p.row(i) - p.row(j);
      const double r = u.norm();
      const Eigen::RowVectorXd qij = u / std::pow(r, alpha + 2.0);
      q_.row(i * n_ + j) = qij;
      q_.row(j * n_ + i) = -qij;
    }
  }
}

double MutualMatrix::scalar(int i, int j) const {
  if (d_ != 1) throw ValidationError("scalar() requires d == 1");
  return q_(i * n_ + j, 0);
}

MutualMatrix mutual_matrix(const Configuration& cfg, double alpha) {
  return MutualMatrix(cfg, alpha);
}

double mass_inner(const Eigen::MatrixXd& v, const Eigen::MatrixXd& w,
                  const MassVector& masses) {
  if (v.rows() != w.rows() || v.cols() != w.cols())
    throw ValidationError("mass_inner: shape mismatch");
  if (v.rows() != masses.n())
    throw ValidationError("mass_inner: mass count does not match rows");
  return masses.values().dot(v.cwiseProduct(w).rowwise().sum());
}

double mass_norm(const Eigen::MatrixXd& v, const MassVector& masses) {
  return std::sqrt(mass_inner(v, v, masses));
}

Configuration project_translations(const Configuration& cfg,
                                   const MassVector& masses) {
  if (masses.n() != cfg.n())
    throw ValidationError("mass count does not match configuration");
  const Eigen::RowVectorXd centroid =
      (masses.values().transpose() * cfg.points()) / masses.total();
  return Configuration(cfg.points().rowwise() - centroid);
}

Configuration center_unweighted(const Configuration& cfg) {
  const Eigen::RowVectorXd centroid = cfg.points().colwise().mean();
  return Configuration(cfg.points().rowwise() - centroid);
}

Configuration normalize_to_sphere(const Configuration& cfg,
                                  const MassVector& masses) {
  Configuration centered = project_translations(cfg, masses);
  const double inertia =
      mass_inner(centered.points(), centered.points(), masses);
  if (!(inertia > 0.0) || !std::isfinite(inertia))
    throw DegenerateInputError("configuration vanishes after centering");
  return Configuration(centered.points() / std::sqrt(inertia));
}

double moment_of_inertia(const Configuration& cfg, const MassVector& masses) {
  Configuration centered = project_translations(cfg, masses);
  return mass_inner(centered.points(), centered.points(), masses);
}

}  // namespace ccfix
