#include "ccfix/inverse.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "ccfix/geometry.hpp"

namespace ccfix {

YMatrix::YMatrix(Eigen::MatrixXd y, Eigen::VectorXd colsum, double alpha)
    : y_(std::move(y)), colsum_(std::move(colsum)), alpha_(alpha) {
  if (y_.rows() + 1 != y_.cols() || colsum_.size() != y_.cols())
    throw ValidationError("Y matrix has inconsistent dimensions");
}

YMatrix y_matrix(const GapPoint& x, double alpha) {
  if (!x.interior() || x.min_gap() < kCollisionEps)
    throw CollisionError("gap point lies on (or too close to) a collision wall");
  const int n = x.n();
  const Eigen::VectorXd q = from_gaps(x);
  const MutualMatrix qm = mutual_matrix(Configuration::collinear(q), alpha);

  Eigen::MatrixXd y(n - 1, n);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j)
      y(i, j) = qm.scalar(i, j) - qm.scalar(i + 1, j);

  Eigen::VectorXd colsum(n);
  for (int j = 0; j < n; ++j)
    colsum(j) = qm.scalar(0, j) + qm.scalar(j, n - 1);

  // The column sums telescope to Q_{1j} - Q_{nj}; verify the identity and
  // positivity rather than assume them.  The summation error scales with the
  // largest entry of the column (near a wall huge terms cancel), so that is
  // the reference magnitude.
  for (int j = 0; j < n; ++j) {
    const double direct = y.col(j).sum();
    const double scale =
        std::max(y.col(j).cwiseAbs().maxCoeff(), std::abs(colsum(j)));
    if (std::abs(direct - colsum(j)) > 1e-10 * scale) {
      std::ostringstream os;
      os << "column-sum identity violated at column " << j + 1 << ": " << direct
         << " vs " << colsum(j);
      throw NumericalError(os.str());
    }
    if (!(colsum(j) > 0.0))
      throw NumericalError("nonpositive column sum in Y matrix");
  }
  return YMatrix(std::move(y), std::move(colsum), alpha);
}

PsiImage psi_vertices(const GapPoint& x, double alpha) {
  const YMatrix ym = y_matrix(x, alpha);
  PsiImage image;
  image.alpha = alpha;
  image.vertices.reserve(ym.n());
  // Normalize by the directly computed column sum (verified against the
  // telescoped form above): the vertex then lies in the sum-one slice to
  // the last ulp even when huge entries cancel.
  for (int j = 0; j < ym.n(); ++j)
    image.vertices.push_back(ym.y().col(j) / ym.y().col(j).sum());
  return image;
}

HullResult psi_contains(const GapPoint& x, double alpha, double tol) {
  const PsiImage image = psi_vertices(x, alpha);
  try {
    return hull_membership(x.x(), image.vertices, tol);
  } catch (const NumericalError& e) {
    std::ostringstream os;
    os << "membership LP failed for gap point with min gap " << x.min_gap()
       << ", alpha " << alpha << ": " << e.what();
    throw NumericalError(os.str());
  }
}

MassSolution solve_masses(const GapPoint& x, double alpha, double pos_tol) {
  const YMatrix ym = y_matrix(x, alpha);
  const int n = ym.n();

  // Variables: m_1..m_n, c, s.  Maximize s subject to
  //   Y m - c x = 0,  sum m = n,  m_j - s >= 0.
  // Masses and c are free; positivity is decided by the optimal s.
  const int vc = n, vs = n + 1;
  LinearProgram lp = LinearProgram::make((n - 1) + 1 + n, n + 2);
  lp.lower.setConstant(-kLpInf);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) lp.A(i, j) = ym.y()(i, j);
    lp.A(i, vc) = -x.x()(i);
    lp.b(i) = 0.0;
    lp.sense[i] = RowSense::Eq;
  }
  for (int j = 0; j < n; ++j) lp.A(n - 1, j) = 1.0;
  lp.b(n - 1) = static_cast<double>(n);
  lp.sense[n - 1] = RowSense::Eq;
  for (int j = 0; j < n; ++j) {
    const int row = n + j;
    lp.A(row, j) = 1.0;
    lp.A(row, vs) = -1.0;
    lp.b(row) = 0.0;
    lp.sense[row] = RowSense::Ge;
  }
  lp.c(vs) = 1.0;
  lp.objective_sense = LPSense::Maximize;

  const LPResult res = solve_lp(lp);
  MassSolution sol;
  if (res.status == LPStatus::NumericalFailure)
    throw NumericalError("mass-recovery LP failed numerically");
  if (res.status == LPStatus::Unbounded)
    throw NumericalError("mass-recovery LP unbounded; lost normalization");
  if (res.status == LPStatus::Infeasible) {
    sol.feasible = false;
    sol.system_solvable = false;
    sol.residual = res.objective;  // phase-1 certificate
    return sol;
  }

  sol.m = res.x.head(n);
  sol.c = res.x(vc);
  sol.lp_optimum = res.x(vs);
  sol.min_mass = sol.m.minCoeff();

  // Residual of Y m = c x, scaled per row.
  double viol = 0.0;
  const Eigen::VectorXd ym_m = ym.y() * sol.m;
  for (int i = 0; i + 1 < n; ++i) {
    const double scale = std::max(1.0, ym.y().row(i).cwiseAbs().maxCoeff() *
                                           sol.m.cwiseAbs().maxCoeff());
    viol = std::max(viol, std::abs(ym_m(i) - sol.c * x.x()(i)) / scale);
  }
  sol.residual = viol;

  const double threshold = pos_tol * std::max(sol.m.maxCoeff(), 0.0);
  sol.feasible = sol.residual <= kFeasTol && sol.lp_optimum > threshold - kFeasTol;
  if (sol.feasible && !(sol.c > 0.0))
    throw NumericalError("positive masses with nonpositive scale; Y data inconsistent");
  return sol;
}

bool MassFamilyN3::contains(const Eigen::Vector3d& m, double tol) const {
  const Eigen::Vector3d r = m - base;
  const Eigen::Vector3d proj = r.dot(direction) * direction;
  return (r - proj).norm() <= tol * std::max(1.0, m.norm());
}

MassFamilyN3 n3_parametric_oracle(const GapPoint& x, double alpha) {
  if (x.n() != 3) throw ValidationError("parametric oracle is the n=3 oracle");
  const YMatrix ym = y_matrix(x, alpha);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ym.y());
  if (svd.singularValues()(1) <
      1e-10 * std::max(svd.singularValues()(0), 1e-300))
    throw DegenerateInputError("rank-deficient Y matrix; columns not in general position");

  // Y m = c x with c forced to colsum'm by the column-sum identity, so the
  // system reduces by elimination to the single functional r'm = 0 with
  // r = (row 1 of Y) - x_1 * colsum.
  const Eigen::Vector3d r =
      ym.y().row(0).transpose() - x.x()(0) * ym.colsum();
  if (r.norm() < 1e-12 * ym.colsum().norm())
    throw DegenerateInputError("inverse problem degenerate: every mass vector solves it");

  const Eigen::Vector3d ones(1.0, 1.0, 1.0);
  Eigen::Vector3d dir = r.cross(ones);
  if (dir.norm() < 1e-12 * r.norm())
    throw DegenerateInputError("inverse problem degenerate: solution line at infinity");
  dir /= dir.norm();

  // Minimum-norm point of {r'm = 0, sum m = 3}.
  Eigen::Matrix<double, 2, 3> a;
  a.row(0) = r.transpose();
  a.row(1) = ones.transpose();
  const Eigen::Vector2d rhs(0.0, 3.0);
  const Eigen::Vector3d base =
      a.completeOrthogonalDecomposition().solve(rhs);

  MassFamilyN3 fam;
  fam.base = base;
  fam.direction = dir;

  double lo = -kLpInf, hi = kLpInf;
  bool empty = false;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(dir(i)) < 1e-14) {
      if (!(base(i) > 0.0)) empty = true;
      continue;
    }
    const double t = -base(i) / dir(i);
    if (dir(i) > 0.0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
  }
  fam.has_positive_segment = !empty && lo < hi;
  fam.t_low = lo;
  fam.t_high = hi;
  return fam;
}

GapPoint gap_of_arc_parameter(double t) {
  const double end = std::sqrt(0.5);
  if (!(t > -end && t < end))
    throw OrderingError("arc parameter lies on or beyond a collision wall");
  const double c = std::sqrt(0.5);
  const Eigen::Vector2d p(t, std::sqrt(1.0 - t * t));
  // Clockwise quarter-pi rotation, then radial projection onto the sum-1 slice.
  const Eigen::Vector2d pr(p.x() * c + p.y() * c, -p.x() * c + p.y() * c);
  return GapPoint::normalized(pr);
}

FMapsN3 f_maps_n3(double t, double alpha) {
  const GapPoint x = gap_of_arc_parameter(t);
  const PsiImage image = psi_vertices(x, alpha);
  const double c = std::sqrt(0.5);
  const auto arc_coord = [&](const Eigen::VectorXd& v) {
    const Eigen::Vector2d u = v.normalized();
    // Counter-clockwise quarter-pi rotation back onto the upper arc.
    return u.x() * c - u.y() * c;
  };
  return FMapsN3{arc_coord(image.vertices[0]), arc_coord(image.vertices[1]),
                 arc_coord(image.vertices[2])};
}

}  // namespace ccfix
