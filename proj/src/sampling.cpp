#include "ccfix/sampling.hpp"

#include <cmath>

namespace ccfix {

Eigen::VectorXd sample_simplex_interior(std::mt19937_64& rng, int dim,
                                        double floor) {
  if (dim < 2) throw ValidationError("simplex sampling needs dimension >= 2");
  if (!(floor >= 0.0) || floor * dim >= 0.5)
    throw ValidationError("interiority floor too large for the dimension");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Eigen::VectorXd e(dim);
    for (int i = 0; i < dim; ++i) e(i) = -std::log1p(-uniform01(rng));
    const double sum = e.sum();
    if (!(sum > 0.0)) continue;
    const Eigen::VectorXd x = e / sum;
    if (x.minCoeff() >= floor) return x;
  }
  throw NumericalError("simplex rejection sampling failed to clear the floor");
}

}  // namespace ccfix
