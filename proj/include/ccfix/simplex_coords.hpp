#pragma once

#include <Eigen/Core>

#include "ccfix/geometry.hpp"

namespace ccfix {

/// Barycentric gap coordinates x_i = q_i - q_{i+1} of a decreasing collinear
/// configuration, normalized to the closed standard simplex: x_i >= 0,
/// sum x_i = 1.  Interior points correspond to collision-free
/// configurations; each face x_i = 0 is the adjacent collision q_i = q_{i+1}.
class GapPoint {
 public:
  explicit GapPoint(Eigen::VectorXd x);
  /// Accepts any nonnegative, nonzero gap vector and rescales to sum 1.
  static GapPoint normalized(const Eigen::VectorXd& gaps);

  /// Number of bodies (one more than the number of gaps).
  int n() const { return static_cast<int>(x_.size()) + 1; }
  const Eigen::VectorXd& x() const { return x_; }
  double min_gap() const { return x_.minCoeff(); }
  bool interior() const { return min_gap() > 0.0; }

 private:
  Eigen::VectorXd x_;
};

/// Gaps of a strictly decreasing coordinate vector, normalized by the span.
GapPoint to_gaps(const Eigen::VectorXd& q);
GapPoint to_gaps(const Configuration& cfg);

/// The unique coordinate vector with the given gaps, sum q_i = 0 and
/// q_1 - q_n = 1.  Boundary gap points yield coinciding coordinates, so the
/// raw vector is returned rather than a collision-checked Configuration.
Eigen::VectorXd from_gaps(const GapPoint& x);

}  // namespace ccfix
