#include "ccfix/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ccfix {

namespace {

double wrap_2pi(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

double wrap_pi(double t) {
  t = std::fmod(t, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  return t;
}

Eigen::VectorXd mass_center(const Eigen::VectorXd& v, const MassVector& m) {
  const double c = m.values().dot(v) / m.total();
  return v.array() - c;
}

}  // namespace

ProjectivePoint::ProjectivePoint(const Eigen::VectorXd& v,
                                 const MassVector& masses)
    : masses_(masses) {
  if (v.size() != masses.n())
    throw ValidationError("vector size does not match mass count");
  Eigen::VectorXd rep = mass_center(v, masses);
  const double norm = mass_norm(rep, masses);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DegenerateInputError("projective representative vanishes");
  rep /= norm;
  for (int k = 0; k < rep.size(); ++k) {
    if (std::abs(rep(k)) > kSignEps) {
      if (rep(k) < 0.0) rep = -rep;
      break;
    }
  }
  rep_ = std::move(rep);
}

double projective_distance(const ProjectivePoint& p,
                           const ProjectivePoint& q) {
  if (p.rep().size() != q.rep().size() ||
      p.masses().values() != q.masses().values())
    throw ValidationError("projective points live over different masses");
  const double dm = mass_norm(p.rep() - q.rep(), p.masses());
  const double dp = mass_norm(p.rep() + q.rep(), p.masses());
  return std::min(dm, dp);
}

ProjectivePoint f_bar(const ProjectivePoint& p, double alpha) {
  const Configuration cfg = Configuration::collinear(p.rep());
  const Eigen::MatrixXd f = f_map(cfg, p.masses(), alpha);
  return ProjectivePoint(f.col(0), p.masses());
}

Eigen::VectorXd wall_limit_direction(int a, int b,
                                     const OrderingComponent& side,
                                     const MassVector& masses) {
  const int n = side.n();
  if (masses.n() != n) throw ValidationError("mass count mismatch");
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw ValidationError("invalid wall pair");
  int pos_a = -1, pos_b = -1;
  for (int k = 0; k < n; ++k) {
    if (side.perm()[k] == a) pos_a = k;
    if (side.perm()[k] == b) pos_b = k;
  }
  if (std::abs(pos_a - pos_b) != 1)
    throw OrderingError("wall pair is not adjacent in the given component");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  if (pos_a < pos_b) {
    // q_a > q_b collapsing: Q_ab -> +inf dominates.
    v(a) = masses[b];
    v(b) = -masses[a];
  } else {
    v(b) = masses[a];
    v(a) = -masses[b];
  }
  return v / mass_norm(v, masses);
}

ProjectivePoint f_bar_wall_limit(int a, int b, const OrderingComponent& side,
                                 const MassVector& masses) {
  return ProjectivePoint(wall_limit_direction(a, b, side, masses), masses);
}

CircleChartN3::CircleChartN3(const MassVector& masses) : masses_(masses) {
  if (masses.n() != 3)
    throw ValidationError("circle chart is the three-body chart");
  // Mass-Gram-Schmidt on the centered images of e1, e2.
  Eigen::VectorXd u1 = mass_center(Eigen::Vector3d(1, 0, 0), masses_);
  b1_ = u1 / mass_norm(u1, masses_);
  Eigen::VectorXd u2 = mass_center(Eigen::Vector3d(0, 1, 0), masses_);
  u2 -= mass_inner(u2, b1_, masses_) * b1_;
  b2_ = u2 / mass_norm(u2, masses_);
}

Eigen::VectorXd CircleChartN3::point(double theta) const {
  return std::cos(theta) * b1_ + std::sin(theta) * b2_;
}

ProjectivePoint CircleChartN3::class_of(double theta) const {
  return ProjectivePoint(point(theta), masses_);
}

double CircleChartN3::angle_mod_2pi(const Eigen::VectorXd& v) const {
  const double a1 = mass_inner(v, b1_, masses_);
  const double a2 = mass_inner(v, b2_, masses_);
  return wrap_2pi(std::atan2(a2, a1));
}

double CircleChartN3::angle_mod_pi(const ProjectivePoint& p) const {
  return wrap_pi(angle_mod_2pi(p.rep()));
}

std::array<CircleChartN3::WallAngle, 3> CircleChartN3::wall_angles() const {
  std::array<WallAngle, 3> walls{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      // point(theta)_i == point(theta)_j:
      //   (b1_i - b1_j) cos t + (b2_i - b2_j) sin t = 0.
      const double a = b1_(i) - b1_(j);
      const double b = b2_(i) - b2_(j);
      walls[k++] = WallAngle{wrap_pi(std::atan2(-a, b)), i, j};
    }
  std::sort(walls.begin(), walls.end(),
            [](const WallAngle& x, const WallAngle& y) {
              return x.theta < y.theta;
            });
  return walls;
}

}  // namespace ccfix
