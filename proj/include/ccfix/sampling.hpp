#pragma once

#include <random>

#include <Eigen/Core>

#include "ccfix/errors.hpp"

namespace ccfix {

/// 53-bit uniform double in [0, 1); fully determined by the engine state.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform (flat Dirichlet) sample on the standard simplex of the given
/// dimension, rejection-sampled until every coordinate clears `floor` so
/// downstream mutual differences stay finite.
Eigen::VectorXd sample_simplex_interior(std::mt19937_64& rng, int dim,
                                        double floor);

}  // namespace ccfix
