#include "ccfix/lp.hpp"

#include <algorithm>
#include <cmath>

namespace ccfix {

namespace {

// Pivot entries smaller than this are treated as zero (rows are equilibrated
// to unit scale, so this is a relative threshold).
constexpr double kPivotTol = 1e-9;

// Driving a zero-level artificial out of the basis across a smaller pivot
// than this would amplify rounding noise; the row is redundant instead.
constexpr double kDriveOutTol = 1e-7;

struct WorkRow {
  Eigen::VectorXd a;  // over the transformed y-columns
  double rhs = 0.0;
  RowSense sense = RowSense::Eq;
};

struct Tableau {
  Eigen::MatrixXd t;       // rows x cols, kept as B^{-1} A by pivoting
  Eigen::VectorXd rhs;     // rows, kept nonnegative
  std::vector<int> basis;  // basic column per row

  void pivot(int row, int col) {
    const double piv = t(row, col);
    t.row(row) /= piv;
    rhs(row) /= piv;
    for (int r = 0; r < t.rows(); ++r) {
      if (r == row) continue;
      const double f = t(r, col);
      if (f == 0.0) continue;
      t.row(r) -= f * t.row(row);
      rhs(r) -= f * rhs(row);
    }
    basis[row] = col;
  }
};

// Reduced costs z_j = c_j - c_B' T_j, recomputed from scratch; the tableaus
// here are tiny, and recomputation avoids drift over degenerate pivots.
Eigen::VectorXd reduced_costs(const Tableau& tab, const Eigen::VectorXd& cost) {
  Eigen::VectorXd z = cost;
  for (int i = 0; i < tab.t.rows(); ++i) {
    const double cb = cost(tab.basis[i]);
    if (cb != 0.0) z -= cb * tab.t.row(i).transpose();
  }
  return z;
}

double objective_value(const Tableau& tab, const Eigen::VectorXd& cost) {
  double v = 0.0;
  for (int i = 0; i < tab.t.rows(); ++i) v += cost(tab.basis[i]) * tab.rhs(i);
  return v;
}

enum class PhaseOutcome { Optimal, Unbounded, IterationCap };

// Minimize cost'y over the current tableau with Bland's rule: entering
// column is the smallest index with negative reduced cost, leaving row is
// the minimum ratio with ties broken by smallest basic column index.
PhaseOutcome run_simplex(Tableau& tab, const Eigen::VectorXd& cost,
                         int& iterations, int iteration_cap) {
  for (;;) {
    const Eigen::VectorXd z = reduced_costs(tab, cost);
    int enter = -1;
    for (int j = 0; j < z.size(); ++j)
      if (z(j) < -kLpTol) {
        enter = j;
        break;
      }
    if (enter < 0) return PhaseOutcome::Optimal;

    int leave = -1;
    double best = kLpInf;
    for (int i = 0; i < tab.t.rows(); ++i) {
      const double tij = tab.t(i, enter);
      if (tij <= kPivotTol) continue;
      const double ratio = tab.rhs(i) / tij;
      const bool better = ratio < best - 1e-12 * (1.0 + std::abs(best));
      const bool tie = std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best));
      if (leave < 0 || better || (tie && tab.basis[i] < tab.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return PhaseOutcome::Unbounded;

    tab.pivot(leave, enter);
    if (++iterations > iteration_cap) return PhaseOutcome::IterationCap;
  }
}

}  // namespace

LinearProgram LinearProgram::make(int rows, int cols) {
  LinearProgram lp;
  lp.A = Eigen::MatrixXd::Zero(rows, cols);
  lp.b = Eigen::VectorXd::Zero(rows);
  lp.sense.assign(rows, RowSense::Eq);
  lp.c = Eigen::VectorXd::Zero(cols);
  lp.lower = Eigen::VectorXd::Zero(cols);
  lp.upper = Eigen::VectorXd::Constant(cols, kLpInf);
  return lp;
}

LPResult solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.A.rows());
  const int k = static_cast<int>(lp.A.cols());
  if (lp.b.size() != m || static_cast<int>(lp.sense.size()) != m ||
      lp.c.size() != k || lp.lower.size() != k || lp.upper.size() != k)
    throw ValidationError("linear program has inconsistent dimensions");
  if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite())
    throw ValidationError("linear program has non-finite data");

  LPResult result;
  const int iteration_cap = 10000 * (m + k);

  // ---- variable transformation to y >= 0 -------------------------------
  // x_j = shift_j + sign * y  (one or two y columns per variable).
  struct YCol {
    int var;
    double sign;
  };
  std::vector<YCol> ycols;
  Eigen::VectorXd shift = Eigen::VectorXd::Zero(k);
  struct UbRow {
    int ycol;
    double cap;
  };
  std::vector<UbRow> ubrows;
  for (int j = 0; j < k; ++j) {
    const double lo = lp.lower(j);
    const double up = lp.upper(j);
    if (lo > up) {
      result.status = LPStatus::Infeasible;
      result.objective = lo - up;
      return result;
    }
    if (std::isfinite(lo) && std::isfinite(up) && lo == up) {
      shift(j) = lo;  // fixed variable, no column
      continue;
    }
    if (std::isfinite(lo)) {
      shift(j) = lo;
      ycols.push_back({j, 1.0});
      if (std::isfinite(up))
        ubrows.push_back({static_cast<int>(ycols.size()) - 1, up - lo});
    } else if (std::isfinite(up)) {
      shift(j) = up;
      ycols.push_back({j, -1.0});
    } else {
      ycols.push_back({j, 1.0});
      ycols.push_back({j, -1.0});
    }
  }
  const int ny = static_cast<int>(ycols.size());

  // ---- assemble, equilibrate and screen rows ---------------------------
  std::vector<WorkRow> rows;
  rows.reserve(m + ubrows.size());
  for (int i = 0; i < m; ++i) {
    WorkRow row;
    row.a = Eigen::VectorXd::Zero(ny);
    for (int t = 0; t < ny; ++t)
      row.a(t) = ycols[t].sign * lp.A(i, ycols[t].var);
    row.rhs = lp.b(i) - lp.A.row(i).dot(shift);
    row.sense = lp.sense[i];
    rows.push_back(std::move(row));
  }
  for (const UbRow& ub : ubrows) {
    WorkRow row;
    row.a = Eigen::VectorXd::Zero(ny);
    row.a(ub.ycol) = 1.0;
    row.rhs = ub.cap;
    row.sense = RowSense::Le;
    rows.push_back(std::move(row));
  }

  // Column equilibration: with wildly different column magnitudes the
  // reduced-cost tolerance loses meaning and phase 1 can stop early.
  Eigen::VectorXd colscale = Eigen::VectorXd::Ones(std::max(ny, 1));
  for (int t = 0; t < ny; ++t) {
    double s = 0.0;
    for (const WorkRow& row : rows) s = std::max(s, std::abs(row.a(t)));
    if (s > 1e-300) colscale(t) = s;
  }
  for (WorkRow& row : rows) row.a.array() /= colscale.head(ny).array();

  std::vector<WorkRow> kept;
  for (WorkRow& row : rows) {
    const double scale = row.a.cwiseAbs().maxCoeff();
    if (scale < 1e-300) {
      // 0 (sense) rhs: either vacuous or plainly infeasible.
      const bool bad = (row.sense == RowSense::Eq && std::abs(row.rhs) > kLpTol) ||
                       (row.sense == RowSense::Le && row.rhs < -kLpTol) ||
                       (row.sense == RowSense::Ge && row.rhs > kLpTol);
      if (bad) {
        result.status = LPStatus::Infeasible;
        result.objective = std::abs(row.rhs);
        return result;
      }
      continue;
    }
    row.a /= scale;
    row.rhs /= scale;
    kept.push_back(std::move(row));
  }
  const int nrows = static_cast<int>(kept.size());

  // ---- slacks, sign normalization, initial basis -----------------------
  int nslack = 0;
  for (const WorkRow& row : kept)
    if (row.sense != RowSense::Eq) ++nslack;

  Tableau tab;
  tab.t = Eigen::MatrixXd::Zero(nrows, ny + nslack);
  tab.rhs = Eigen::VectorXd::Zero(nrows);
  tab.basis.assign(nrows, -1);
  {
    int s = 0;
    for (int i = 0; i < nrows; ++i) {
      tab.t.block(i, 0, 1, ny) = kept[i].a.transpose();
      tab.rhs(i) = kept[i].rhs;
      if (kept[i].sense != RowSense::Eq) {
        tab.t(i, ny + s) = kept[i].sense == RowSense::Le ? 1.0 : -1.0;
        ++s;
      }
      if (tab.rhs(i) < 0.0) {
        tab.t.row(i) = -tab.t.row(i);
        tab.rhs(i) = -tab.rhs(i);
      }
    }
  }
  // Rows whose slack survived with coefficient +1 start basic; the rest get
  // artificial columns.
  std::vector<int> art_rows;
  for (int i = 0; i < nrows; ++i) {
    for (int j = ny; j < ny + nslack; ++j)
      if (tab.t(i, j) == 1.0) {
        bool alone = true;
        for (int r = 0; r < nrows; ++r)
          if (r != i && tab.t(r, j) != 0.0) alone = false;
        if (alone) {
          tab.basis[i] = j;
          break;
        }
      }
    if (tab.basis[i] < 0) art_rows.push_back(i);
  }
  const int nart = static_cast<int>(art_rows.size());
  const int first_art = ny + nslack;
  if (nart > 0) {
    tab.t.conservativeResize(Eigen::NoChange, first_art + nart);
    tab.t.rightCols(nart).setZero();
    for (int a = 0; a < nart; ++a) {
      tab.t(art_rows[a], first_art + a) = 1.0;
      tab.basis[art_rows[a]] = first_art + a;
    }
  }

  // ---- phase 1 ----------------------------------------------------------
  if (nart > 0) {
    Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(tab.t.cols());
    cost1.tail(nart).setOnes();
    const PhaseOutcome out =
        run_simplex(tab, cost1, result.iterations, iteration_cap);
    if (out == PhaseOutcome::IterationCap) {
      result.status = LPStatus::NumericalFailure;
      return result;
    }
    const double infeas = objective_value(tab, cost1);
    if (out == PhaseOutcome::Unbounded || infeas > kLpTol) {
      result.status = LPStatus::Infeasible;
      result.objective = infeas;
      return result;
    }
    // Drive basic artificials (sitting at level ~0) out of the basis,
    // pivoting on the largest available entry; rows whose entries have all
    // been eliminated to noise are redundant and dropped.
    std::vector<int> drop;
    for (int i = 0; i < nrows; ++i) {
      if (tab.basis[i] < first_art) continue;
      int piv_col = -1;
      double piv_mag = 0.0;
      for (int j = 0; j < first_art; ++j)
        if (std::abs(tab.t(i, j)) > piv_mag) {
          piv_mag = std::abs(tab.t(i, j));
          piv_col = j;
        }
      if (piv_col >= 0 && piv_mag > kDriveOutTol)
        tab.pivot(i, piv_col);
      else
        drop.push_back(i);
    }
    if (!drop.empty()) {
      const int keep_n = nrows - static_cast<int>(drop.size());
      Eigen::MatrixXd t2(keep_n, first_art);
      Eigen::VectorXd r2(keep_n);
      std::vector<int> b2;
      int w = 0;
      for (int i = 0; i < nrows; ++i) {
        if (std::find(drop.begin(), drop.end(), i) != drop.end()) continue;
        t2.row(w) = tab.t.row(i).head(first_art);
        r2(w) = tab.rhs(i);
        b2.push_back(tab.basis[i]);
        ++w;
      }
      tab.t = std::move(t2);
      tab.rhs = std::move(r2);
      tab.basis = std::move(b2);
    } else {
      tab.t.conservativeResize(Eigen::NoChange, first_art);
    }
  }

  // ---- phase 2 ----------------------------------------------------------
  const double sense_factor =
      lp.objective_sense == LPSense::Maximize ? -1.0 : 1.0;
  Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(tab.t.cols());
  for (int t = 0; t < ny; ++t)
    cost2(t) = sense_factor * ycols[t].sign * lp.c(ycols[t].var) / colscale(t);
  const PhaseOutcome out =
      run_simplex(tab, cost2, result.iterations, iteration_cap);
  if (out == PhaseOutcome::IterationCap) {
    result.status = LPStatus::NumericalFailure;
    return result;
  }
  if (out == PhaseOutcome::Unbounded) {
    result.status = LPStatus::Unbounded;
    return result;
  }

  // ---- extraction and verification --------------------------------------
  Eigen::VectorXd y = Eigen::VectorXd::Zero(ny);
  for (size_t i = 0; i < tab.basis.size(); ++i)
    if (tab.basis[i] < ny) y(tab.basis[i]) = tab.rhs(i);
  Eigen::VectorXd x = shift;
  for (int t = 0; t < ny; ++t) x(ycols[t].var) += ycols[t].sign * y(t);

  double viol = 0.0;
  for (int i = 0; i < m; ++i) {
    const double scale =
        std::max({1.0, lp.A.row(i).cwiseAbs().maxCoeff(), std::abs(lp.b(i))});
    const double r = lp.A.row(i).dot(x) - lp.b(i);
    double v = 0.0;
    switch (lp.sense[i]) {
      case RowSense::Eq: v = std::abs(r); break;
      case RowSense::Le: v = std::max(0.0, r); break;
      case RowSense::Ge: v = std::max(0.0, -r); break;
    }
    viol = std::max(viol, v / scale);
  }
  for (int j = 0; j < k; ++j) {
    if (std::isfinite(lp.lower(j)))
      viol = std::max(viol, (lp.lower(j) - x(j)) /
                                std::max(1.0, std::abs(lp.lower(j))));
    if (std::isfinite(lp.upper(j)))
      viol = std::max(viol, (x(j) - lp.upper(j)) /
                                std::max(1.0, std::abs(lp.upper(j))));
  }
  viol = std::max(viol, 0.0);

  result.x = std::move(x);
  result.objective = lp.c.dot(result.x);
  result.max_violation = viol;
  result.status =
      viol <= 10.0 * kLpTol ? LPStatus::Optimal : LPStatus::NumericalFailure;
  return result;
}

HullResult hull_membership(const Eigen::VectorXd& point,
                           const std::vector<Eigen::VectorXd>& vertices,
                           double tol) {
  if (vertices.empty()) throw ValidationError("hull needs at least one vertex");
  const int dim = static_cast<int>(point.size());
  const int nv = static_cast<int>(vertices.size());
  for (const Eigen::VectorXd& v : vertices)
    if (v.size() != dim)
      throw ValidationError("hull vertices have mismatched dimension");

  LinearProgram lp = LinearProgram::make(dim + 1, nv);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < nv; ++j) lp.A(i, j) = vertices[j](i);
    lp.b(i) = point(i);
  }
  lp.A.row(dim).setOnes();
  lp.b(dim) = 1.0;

  const LPResult res = solve_lp(lp);
  if (res.status == LPStatus::NumericalFailure)
    throw NumericalError("hull membership LP failed numerically");
  if (res.status != LPStatus::Optimal)
    return HullResult{false, Eigen::VectorXd::Zero(nv), res.objective};
  return HullResult{res.max_violation <= tol, res.x, res.max_violation};
}

}  // namespace ccfix
