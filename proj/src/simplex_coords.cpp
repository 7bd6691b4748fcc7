#include "ccfix/simplex_coords.hpp"

#include <cmath>

namespace ccfix {

GapPoint::GapPoint(Eigen::VectorXd x) : x_(std::move(x)) {
  if (x_.size() < 2)
    throw ValidationError("gap point needs at least 2 gaps (3 bodies)");
  if (!x_.allFinite()) throw ValidationError("gap point has non-finite entries");
  if ((x_.array() < -1e-12).any())
    throw ValidationError("gap coordinates must be nonnegative");
  x_ = x_.cwiseMax(0.0);
  const double sum = x_.sum();
  if (std::abs(sum - 1.0) > 1e-9)
    throw ValidationError("gap coordinates must sum to 1");
  x_ /= sum;
}

GapPoint GapPoint::normalized(const Eigen::VectorXd& gaps) {
  if (gaps.size() < 2)
    throw ValidationError("gap point needs at least 2 gaps (3 bodies)");
  if (!gaps.allFinite() || (gaps.array() < -1e-12).any())
    throw ValidationError("gaps must be finite and nonnegative");
  const double sum = gaps.sum();
  if (!(sum > 0.0)) throw ValidationError("gaps must not all vanish");
  return GapPoint(gaps / sum);
}

GapPoint to_gaps(const Eigen::VectorXd& q) {
  const int n = static_cast<int>(q.size());
  if (n < 3) throw ValidationError("need at least 3 bodies");
  for (int i = 0; i + 1 < n; ++i)
    if (!(q(i) > q(i + 1)))
      throw OrderingError("coordinates are not strictly decreasing");
  const double span = q(0) - q(n - 1);
  Eigen::VectorXd x(n - 1);
  for (int i = 0; i + 1 < n; ++i) x(i) = (q(i) - q(i + 1)) / span;
  return GapPoint(std::move(x));
}

GapPoint to_gaps(const Configuration& cfg) { return to_gaps(cfg.axis()); }

Eigen::VectorXd from_gaps(const GapPoint& x) {
  const int n = x.n();
  // Partial sums S_k of the gaps; q_k = t - S_k with t fixing sum q = 0.
  Eigen::VectorXd s(n);
  s(0) = 0.0;
  for (int k = 1; k < n; ++k) s(k) = s(k - 1) + x.x()(k - 1);
  const double t = s.mean();
  return (t - s.array()).matrix();
}

}  // namespace ccfix
