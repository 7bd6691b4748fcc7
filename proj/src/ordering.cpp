#include "ccfix/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ccfix {

OrderingComponent::OrderingComponent(std::vector<int> perm)
    : perm_(std::move(perm)) {
  if (perm_.size() < 3)
    throw ValidationError("ordering needs at least 3 bodies");
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    if (sorted[k] != k)
      throw ValidationError("ordering is not a permutation of 0..n-1");
}

OrderingComponent OrderingComponent::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return OrderingComponent(std::move(p));
}

OrderingComponent OrderingComponent::from_one_based(
    const std::vector<int>& perm) {
  std::vector<int> p(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) p[k] = perm[k] - 1;
  return OrderingComponent(std::move(p));
}

std::vector<int> OrderingComponent::one_based() const {
  std::vector<int> p(perm_.size());
  for (size_t k = 0; k < perm_.size(); ++k) p[k] = perm_[k] + 1;
  return p;
}

OrderingComponent OrderingComponent::reversed() const {
  std::vector<int> p(perm_.rbegin(), perm_.rend());
  return OrderingComponent(std::move(p));
}

bool OrderingComponent::contains(const Eigen::VectorXd& q) const {
  if (q.size() != n()) return false;
  for (int k = 0; k + 1 < n(); ++k)
    if (!(q(perm_[k]) > q(perm_[k + 1]))) return false;
  return true;
}

Eigen::VectorXd OrderingComponent::equally_spaced() const {
  Eigen::VectorXd q(n());
  for (int k = 0; k < n(); ++k) q(perm_[k]) = static_cast<double>(n() - 1 - 2 * k);
  return q;
}

std::string OrderingComponent::to_string() const {
  std::ostringstream os;
  for (int k = 0; k < n(); ++k) {
    if (k) os << '>';
    os << perm_[k] + 1;
  }
  return os.str();
}

std::vector<OrderingComponent> projective_components(int n) {
  if (n < 3) throw ValidationError("need at least 3 bodies");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<OrderingComponent> out;
  do {
    if (p.front() < p.back()) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ccfix
