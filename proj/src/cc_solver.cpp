#include "ccfix/cc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <Eigen/Dense>

namespace ccfix {

namespace {

double residual_d1(const Eigen::VectorXd& q, const MassVector& masses,
                   double alpha) {
  const Configuration cfg = Configuration::collinear(q);
  const Eigen::VectorXd f = f_map(cfg, masses, alpha).col(0);
  return mass_norm(q - f, masses);
}

}  // namespace

Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& q,
                                     const MassVector& masses) {
  const int n = static_cast<int>(q.size());
  Eigen::MatrixXd constraints(2, n);
  constraints.row(0) = masses.values().transpose();
  constraints.row(1) = (masses.values().array() * q.array()).matrix().transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(constraints);
  const Eigen::MatrixXd kernel = lu.kernel();
  if (kernel.cols() != n - 2)
    throw DegenerateInputError("tangent space has unexpected dimension");

  // Mass-metric Gram-Schmidt, with one re-orthogonalization pass.
  Eigen::MatrixXd basis(n, n - 2);
  for (int c = 0; c < n - 2; ++c) {
    Eigen::VectorXd w = kernel.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (int p = 0; p < c; ++p)
        w -= mass_inner(w, basis.col(p), masses) * basis.col(p);
    const double norm = mass_norm(w, masses);
    if (!(norm > 1e-13))
      throw DegenerateInputError("tangent basis collapsed");
    basis.col(c) = w / norm;
  }
  return basis;
}

CentralConfigCertificate solve_component(const OrderingComponent& comp,
                                         const MassVector& masses,
                                         double alpha, double tol,
                                         int max_iter) {
  if (masses.n() != comp.n())
    throw ValidationError("mass count does not match ordering");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");

  const Eigen::MatrixXd mass_diag = masses.values().asDiagonal();
  Eigen::VectorXd q =
      normalize_to_sphere(Configuration::collinear(comp.equally_spaced()),
                          masses)
          .axis();

  double best_res = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_q = q;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Configuration cfg = Configuration::collinear(q);
    const double res = residual_d1(q, masses, alpha);
    if (res < best_res) {
      best_res = res;
      best_q = q;
    }
    // Polish well below the requested tolerance so downstream identities
    // (the defining equation, index data) hold with room to spare.
    if (res < 0.01 * tol) break;

    const double u0 = potential(cfg, masses, alpha);
    const Eigen::VectorXd grad = euclidean_gradient(cfg, masses, alpha).col(0);
    const Eigen::MatrixXd hess = hessian(cfg, masses, alpha);
    // On the unit sphere the multiplier estimate is -alpha U (homogeneity).
    const double lam = -alpha * u0;

    const Eigen::MatrixXd basis = sphere_tangent_basis(q, masses);
    const Eigen::VectorXd gr = basis.transpose() * grad;
    const Eigen::MatrixXd ar =
        basis.transpose() * (hess - lam * mass_diag) * basis;

    // Modified Newton: clamp the spectrum away from zero (absolute values
    // for saddle directions), which reduces to plain Newton once the
    // reduced Hessian is positive definite.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        0.5 * (ar + ar.transpose()));
    const Eigen::VectorXd ev = es.eigenvalues();
    const double floor =
        std::max(1e-10 * ev.cwiseAbs().maxCoeff(), 1e-14);
    Eigen::VectorXd inv(ev.size());
    for (int i = 0; i < ev.size(); ++i)
      inv(i) = 1.0 / std::max(std::abs(ev(i)), floor);
    Eigen::VectorXd step =
        -es.eigenvectors() *
        (inv.asDiagonal() * (es.eigenvectors().transpose() * gr));
    double slope = gr.dot(step);
    if (!(slope < 0.0)) {
      step = -gr;
      slope = gr.dot(step);
    }

    const auto interior_candidate =
        [&](double t) -> std::optional<Eigen::VectorXd> {
      Eigen::VectorXd cand = q + t * (basis * step);
      if (!comp.contains(cand)) return std::nullopt;
      const double span = cand.maxCoeff() - cand.minCoeff();
      double min_gap = std::numeric_limits<double>::infinity();
      for (int i = 0; i + 1 < comp.n(); ++i)
        min_gap = std::min(min_gap,
                           cand(comp.perm()[i]) - cand(comp.perm()[i + 1]));
      if (min_gap <= 10.0 * kCollisionEps * span) return std::nullopt;
      cand /= mass_norm(cand, masses);
      return cand;
    };

    // Armijo backtracking; any candidate leaving the component (or grazing
    // a wall) just halves the step.  Once the model decrease drops below
    // rounding noise in U the sufficient-decrease test is meaningless, so
    // the search is skipped in favor of the residual-driven endgame below.
    bool accepted = false;
    const double noise_floor =
        16.0 * std::numeric_limits<double>::epsilon() * std::abs(u0);
    if (-slope >= noise_floor) {
      double t = 1.0;
      for (int ls = 0; ls < 60; ++ls) {
        const std::optional<Eigen::VectorXd> cand = interior_candidate(t);
        if (!cand) {
          t *= 0.5;
          continue;
        }
        const double uc =
            potential(Configuration::collinear(*cand), masses, alpha);
        if (uc <= u0 + 1e-4 * t * slope) {
          q = *cand;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
    }
    if (!accepted) {
      // Endgame: near the minimum the plain Newton step still converges
      // quadratically; take it as long as the fixed-point residual improves.
      const std::optional<Eigen::VectorXd> cand = interior_candidate(1.0);
      if (cand && residual_d1(*cand, masses, alpha) < res) {
        q = *cand;
        continue;
      }
      break;
    }
  }

  {
    const double res = residual_d1(q, masses, alpha);
    if (res < best_res) {
      best_res = res;
      best_q = q;
    }
  }
  if (best_res < tol) {
    const Configuration cfg = Configuration::collinear(best_q);
    return CentralConfigCertificate{cfg, lambda_of(cfg, masses, alpha),
                                    best_res};
  }
  std::ostringstream os;
  os << "component " << comp.to_string() << " did not reach tolerance " << tol
     << "; best residual " << best_res;
  throw ConvergenceError(os.str(), best_res);
}

EnumerationResult enumerate_collinear(const MassVector& masses, double alpha,
                                      double tol) {
  const int n = masses.n();
  if (n > 7)
    throw ValidationError("collinear enumeration is factorial; n must be <= 7");

  EnumerationResult result;
  for (const OrderingComponent& comp : projective_components(n)) {
    try {
      result.solutions.push_back(
          {comp, solve_component(comp, masses, alpha, tol)});
    } catch (const ConvergenceError& e) {
      result.failures.push_back({comp, e.best_residual(), e.what()});
    }
  }

  // Moulton-type certificates are isolated, so nothing should collapse;
  // dedup defensively all the same.
  std::vector<CollinearSolution> unique;
  for (const CollinearSolution& sol : result.solutions) {
    const ProjectivePoint p(sol.certificate.cfg.axis(), masses);
    bool seen = false;
    for (const CollinearSolution& kept : unique) {
      const ProjectivePoint pk(kept.certificate.cfg.axis(), masses);
      if (projective_distance(p, pk) < 10.0 * tol) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(sol);
  }
  result.solutions = std::move(unique);
  return result;
}

IndexReport morse_index(const CentralConfigCertificate& cert,
                        const MassVector& masses, double alpha) {
  if (cert.cfg.d() != 1)
    throw ValidationError("index computation is defined for collinear certificates");
  if (!(cert.residual < 1e-6))
    throw ValidationError("certificate residual too large for index computation");

  const Eigen::VectorXd q = cert.cfg.axis();
  const Eigen::MatrixXd hess = hessian(cert.cfg, masses, alpha);
  const Eigen::MatrixXd mass_diag = masses.values().asDiagonal();
  const Eigen::MatrixXd basis = sphere_tangent_basis(q, masses);
  const Eigen::MatrixXd a =
      basis.transpose() * (hess - cert.lambda * mass_diag) * basis;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
  const Eigen::VectorXd ev = es.eigenvalues();
  const double ev_max = ev.cwiseAbs().maxCoeff();
  if (!(ev_max > 0.0))
    throw DegenerateInputError("second variation vanishes");
  std::vector<double> eigenvalues(ev.data(), ev.data() + ev.size());
  for (double e : eigenvalues) {
    if (std::abs(e) < kDegenEps * ev_max) {
      std::ostringstream os;
      os << "degenerate critical point, index undefined; eigenvalues:";
      for (double x : eigenvalues) os << ' ' << x;
      throw DegenerateInputError(os.str());
    }
  }
  const int mu = static_cast<int>((ev.array() < 0.0).count());
  return IndexReport{cert, mu, mu % 2 == 0 ? 1 : -1, std::move(eigenvalues)};
}

Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& onto,
                                    const Eigen::MatrixXd& from,
                                    const MassVector& masses) {
  // Maximize tr(R' C) with C = from' M onto over special-orthogonal R.
  const Eigen::MatrixXd c =
      from.transpose() * masses.values().asDiagonal() * onto;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const int d = static_cast<int>(c.rows());
  Eigen::VectorXd diag = Eigen::VectorXd::Ones(d);
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0)
    diag(d - 1) = -1.0;
  return svd.matrixU() * diag.asDiagonal() * svd.matrixV().transpose();
}

namespace {

double aligned_residual(const Eigen::MatrixXd& q, const Eigen::MatrixXd& fq,
                        const MassVector& masses) {
  if (q.cols() == 1) return mass_norm(q - fq, masses);
  const Eigen::MatrixXd rot = procrustes_rotation(q, fq, masses);
  return mass_norm(q - fq * rot, masses);
}

}  // namespace

CentralConfigCertificate solve_fixed_point_iterative(const Configuration& start,
                                                     const MassVector& masses,
                                                     double alpha, double tol,
                                                     int max_iter) {
  if (masses.n() != start.n())
    throw ValidationError("mass count does not match configuration");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");

  Configuration current = normalize_to_sphere(start, masses);
  double res = aligned_residual(current.points(),
                                f_map(current, masses, alpha), masses);
  if (res < tol)
    return CentralConfigCertificate{current, lambda_of(current, masses, alpha),
                                    res};

  double s = 0.5;
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::MatrixXd fq = f_map(current, masses, alpha);
    if (current.d() > 1)
      fq = fq * procrustes_rotation(current.points(), fq, masses);

    bool moved = false;
    while (s > 1e-8) {
      const Eigen::MatrixXd blend = (1.0 - s) * current.points() + s * fq;
      Configuration cand = [&] {
        try {
          return normalize_to_sphere(Configuration(blend), masses);
        } catch (const CollisionError&) {
          throw CollisionError(
              "fixed-point iteration approached a collision wall");
        }
      }();
      const double cand_res =
          aligned_residual(cand.points(), f_map(cand, masses, alpha), masses);
      if (cand_res < res) {
        current = std::move(cand);
        res = cand_res;
        s = std::min(1.0, 1.3 * s);
        moved = true;
        break;
      }
      s *= 0.5;
    }
    if (res < tol)
      return CentralConfigCertificate{current,
                                      lambda_of(current, masses, alpha), res};
    if (!moved) break;
  }
  std::ostringstream os;
  os << "fixed-point iteration stalled at residual " << res;
  throw ConvergenceError(os.str(), res);
}

}  // namespace ccfix
