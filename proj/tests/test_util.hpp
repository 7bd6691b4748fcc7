#pragma once

// Deterministic generators and finite-difference oracles shared by the unit
// and acceptance suites.  The oracles only evaluate the potential / gradient,
// so they stay independent of the analytic derivative code they check.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "ccfix/geometry.hpp"
#include "ccfix/potential.hpp"
#include "ccfix/projective.hpp"
#include "ccfix/sampling.hpp"
#include "ccfix/simplex_coords.hpp"

namespace ccfix::testutil {

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Random collision-free configuration with separation at least
/// `min_rel_sep` of the diameter, so finite differencing stays safe.
inline Configuration random_configuration(std::mt19937_64& rng, int n, int d,
                                          double min_rel_sep = 0.05) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Eigen::MatrixXd p(n, d);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a) p(i, a) = urand(rng, -1.0, 1.0);
    try {
      Configuration cfg(p);
      if (cfg.min_separation() >= min_rel_sep * cfg.diameter()) return cfg;
    } catch (const CollisionError&) {
    }
  }
  throw std::runtime_error("random_configuration failed");
}

inline MassVector random_masses(std::mt19937_64& rng, int n, double lo = 0.2,
                                double hi = 5.0) {
  Eigen::VectorXd m(n);
  for (int i = 0; i < n; ++i) m(i) = urand(rng, lo, hi);
  return MassVector(std::move(m));
}

inline GapPoint random_interior_gap(std::mt19937_64& rng, int n,
                                    double floor = 1e-3) {
  return GapPoint(sample_simplex_interior(rng, n - 1, floor));
}

inline double circular_difference(double a, double b, double period) {
  double d = std::fmod(a - b, period);
  if (d < -period / 2.0) d += period;
  if (d >= period / 2.0) d -= period;
  return d;
}

/// Fixed points of the quotient circle map for three bodies, counted by sign
/// changes of the angular displacement on a uniform grid of the given step.
inline int count_circle_fixed_points(const MassVector& masses, double alpha,
                                     double step) {
  const CircleChartN3 chart(masses);
  const int samples = static_cast<int>(std::numbers::pi / step);
  std::vector<double> disp;
  disp.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double theta = k * step;
    try {
      const double image =
          chart.angle_mod_pi(f_bar(chart.class_of(theta), alpha));
      disp.push_back(circular_difference(image, theta, std::numbers::pi));
    } catch (const CollisionError&) {
      // exact wall hit; skip the sample
    }
  }
  int crossings = 0;
  for (size_t k = 0; k + 1 < disp.size(); ++k) {
    const double a = disp[k], b = disp[k + 1];
    if (a == 0.0) continue;
    if (a * b < 0.0 && std::abs(a - b) < std::numbers::pi / 2.0) ++crossings;
  }
  if (!disp.empty() && disp.front() * disp.back() < 0.0 &&
      std::abs(disp.front() - disp.back()) < std::numbers::pi / 2.0)
    ++crossings;
  return crossings;
}

/// Central finite differences of the potential.
inline Eigen::MatrixXd fd_gradient(const Configuration& cfg,
                                   const MassVector& masses, double alpha,
                                   double h = 1e-5) {
  Eigen::MatrixXd g(cfg.n(), cfg.d());
  for (int i = 0; i < cfg.n(); ++i)
    for (int a = 0; a < cfg.d(); ++a) {
      Eigen::MatrixXd plus = cfg.points();
      Eigen::MatrixXd minus = cfg.points();
      plus(i, a) += h;
      minus(i, a) -= h;
      g(i, a) = (potential(Configuration(plus), masses, alpha) -
                 potential(Configuration(minus), masses, alpha)) /
                (2.0 * h);
    }
  return g;
}

/// Central finite differences of the analytic gradient.
inline Eigen::MatrixXd fd_hessian(const Configuration& cfg,
                                  const MassVector& masses, double alpha,
                                  double h = 1e-5) {
  const int nd = cfg.n() * cfg.d();
  Eigen::MatrixXd hess(nd, nd);
  for (int i = 0; i < cfg.n(); ++i)
    for (int a = 0; a < cfg.d(); ++a) {
      Eigen::MatrixXd plus = cfg.points();
      Eigen::MatrixXd minus = cfg.points();
      plus(i, a) += h;
      minus(i, a) -= h;
      const Eigen::MatrixXd column =
          (euclidean_gradient(Configuration(plus), masses, alpha) -
           euclidean_gradient(Configuration(minus), masses, alpha)) /
          (2.0 * h);
      // column (i,a) of the Hessian, flattened row-major by body.
      for (int j = 0; j < cfg.n(); ++j)
        for (int b = 0; b < cfg.d(); ++b)
          hess(j * cfg.d() + b, i * cfg.d() + a) = column(j, b);
    }
  return hess;
}

}  // namespace ccfix::testutil
