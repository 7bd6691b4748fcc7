#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "ccfix/ordering.hpp"
#include "ccfix/potential.hpp"

namespace ccfix {

/// Entries below this threshold are skipped when fixing the canonical sign
/// of a projective representative.
inline constexpr double kSignEps = 1e-10;

/// A point of the antipodal quotient of the collinear shape sphere,
/// represented by the mass-centered, mass-unit vector whose first coordinate
/// of magnitude above kSignEps is positive.  The mass vector is kept with
/// the point since the normalization depends on it.
class ProjectivePoint {
 public:
  ProjectivePoint(const Eigen::VectorXd& v, const MassVector& masses);

  const Eigen::VectorXd& rep() const { return rep_; }
  const MassVector& masses() const { return masses_; }

 private:
  Eigen::VectorXd rep_;
  MassVector masses_;
};

/// min(|p - q|_M, |p + q|_M); zero exactly on equal classes.
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// The continuous self-map induced by the normalized negative gradient on
/// the quotient.  Requires a collision-free representative; limits on the
/// collision walls are available through f_bar_wall_limit.
ProjectivePoint f_bar(const ProjectivePoint& p, double alpha);

/// Limiting class of f_bar as the gap between bodies a and b (0-based
/// labels, adjacent in `side`) closes from inside that component: the
/// dominant blown-up mutual difference leaves the direction
/// m_b e_a - m_a e_b (up to sign), renormalized.  The limits from the two
/// adjacent components are antipodal vectors and therefore the same class.
ProjectivePoint f_bar_wall_limit(int a, int b, const OrderingComponent& side,
                                 const MassVector& masses);

/// The signed (unquotiented) limit direction, mass-centered and normalized
/// but not sign-canonicalized; exposes the antipodal jump of the
/// unquotiented map across the wall.
Eigen::VectorXd wall_limit_direction(int a, int b,
                                     const OrderingComponent& side,
                                     const MassVector& masses);

/// Angle chart of the three-body collinear shape circle.  point(theta) walks
/// the full circle (mod 2pi); classes are parametrized mod pi.
class CircleChartN3 {
 public:
  explicit CircleChartN3(const MassVector& masses);

  Eigen::VectorXd point(double theta) const;
  ProjectivePoint class_of(double theta) const;

  double angle_mod_2pi(const Eigen::VectorXd& v) const;
  double angle_mod_pi(const ProjectivePoint& p) const;

  struct WallAngle {
    double theta;  // in [0, pi)
    int i, j;      // colliding pair, 0-based
  };
  /// The three collision-wall angles in [0, pi), sorted.
  std::array<WallAngle, 3> wall_angles() const;

  const MassVector& masses() const { return masses_; }

 private:
  MassVector masses_;
  Eigen::VectorXd b1_, b2_;  // mass-orthonormal basis of the centered plane
};

}  // namespace ccfix
