#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "ccfix/errors.hpp"

namespace ccfix {

/// One connected component of the collision-free collinear space: the open
/// cone of coordinates with the strict ordering
///   q[perm[0]] > q[perm[1]] > ... > q[perm[n-1]].
/// A component and its reversal are identified under the antipodal map, so
/// there are n!/2 projective classes; the canonical class representative is
/// the permutation with perm.front() < perm.back().
class OrderingComponent {
 public:
  explicit OrderingComponent(std::vector<int> perm);  // 0-based
  static OrderingComponent identity(int n);
  static OrderingComponent from_one_based(const std::vector<int>& perm);

  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  std::vector<int> one_based() const;

  OrderingComponent reversed() const;
  bool is_canonical() const { return perm_.front() < perm_.back(); }

  /// Does q satisfy this component's strict ordering?
  bool contains(const Eigen::VectorXd& q) const;

  /// Equally spaced positions n-1, n-3, ..., 1-n laid out along the
  /// ordering; a deterministic interior starting point.
  Eigen::VectorXd equally_spaced() const;

  std::string to_string() const;  // "1>3>2"
  bool operator==(const OrderingComponent& other) const {
    return perm_ == other.perm_;
  }
  bool operator<(const OrderingComponent& other) const {
    return perm_ < other.perm_;
  }

 private:
  std::vector<int> perm_;
};

/// All n!/2 canonical ordering components, sorted lexicographically.
std::vector<OrderingComponent> projective_components(int n);

}  // namespace ccfix
