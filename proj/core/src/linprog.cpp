#include "mukit/linprog.hpp"

#include <algorithm>
#include <cmath>

namespace mukit::lp {
namespace {

constexpr double kPivotTol = 1e-11;

// Tableau simplex on  min c.x  s.t.  A x = b, x >= 0, b >= 0, starting from
// the all-artificial basis. Columns [n, n+m) are the artificials.
class Tableau {
 public:
  Tableau(const Matrix& A, const Vector& b, double tol)
      : m_(A.rows()), n_(A.cols()), tol_(tol) {
    T_.resize(m_ + 1, n_ + m_ + 1);
    T_.setZero();
    T_.block(0, 0, m_, n_) = A;
    T_.block(0, n_, m_, m_) = Matrix::Identity(m_, m_);
    T_.block(0, n_ + m_, m_, 1) = b;
    for (Index i = 0; i < m_; ++i) {
      if (T_(i, n_ + m_) < 0) T_.row(i) = -T_.row(i);
    }
    basis_.resize(m_);
    for (Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  // Phase 1: minimize the sum of artificials.
  bool make_feasible(int max_iters, int& iters) {
    Vector cost = Vector::Zero(n_ + m_);
    cost.segment(n_, m_).setOnes();
    install_costs(cost);
    run(max_iters, iters, /*allow_artificial_entering=*/false);
    if (objective() > 100.0 * tol_ * (1.0 + rhs_norm_)) return false;
    purge_artificials();
    return true;
  }

  // Phase 2: minimize c.x with artificials barred from entering.
  Status optimize(const Vector& c, int max_iters, int& iters) {
    Vector cost = Vector::Zero(n_ + m_);
    cost.head(n_) = c;
    install_costs(cost);
    return run(max_iters, iters, /*allow_artificial_entering=*/false);
  }

  double objective() const { return -T_(m_, n_ + m_); }

  Vector primal() const {
    Vector x = Vector::Zero(n_);
    for (Index i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = T_(i, n_ + m_);
    return x;
  }

 private:
  void install_costs(const Vector& cost) {
    T_.row(m_).setZero();
    T_.row(m_).head(n_ + m_) = cost.transpose();
    rhs_norm_ = T_.col(n_ + m_).head(m_).cwiseAbs().maxCoeff();
    // price out the current basis
    for (Index i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb != 0.0) T_.row(m_) -= cb * T_.row(i);
    }
  }

  Status run(int max_iters, int& iters, bool allow_artificial_entering) {
    int stall = 0;
    double last_obj = objective();
    for (; iters < max_iters; ++iters) {
      const bool bland = stall > 2 * static_cast<int>(m_ + n_);
      const Index limit = allow_artificial_entering ? n_ + m_ : n_;
      Index enter = -1;
      double best = -tol_;
      for (Index j = 0; j < limit; ++j) {
        const double rc = T_(m_, j);
        if (rc < -tol_) {
          if (bland) { enter = j; break; }
          if (rc < best) { best = rc; enter = j; }
        }
      }
      if (enter < 0) return Status::Optimal;

      Index leave = -1;
      double best_ratio = 0.0, best_pivot = 0.0;
      for (Index i = 0; i < m_; ++i) {
        const double a = T_(i, enter);
        if (a > kPivotTol) {
          const double ratio = T_(i, n_ + m_) / a;
          if (leave < 0 || ratio < best_ratio - tol_ ||
              (ratio < best_ratio + tol_ &&
               (bland ? basis_[i] < basis_[leave] : a > best_pivot))) {
            leave = i;
            best_ratio = ratio;
            best_pivot = a;
          }
        }
      }
      if (leave < 0) return Status::Unbounded;

      pivot(leave, enter);
      const double obj = objective();
      stall = (obj < last_obj - tol_) ? 0 : stall + 1;
      last_obj = obj;
    }
    return Status::IterationLimit;
  }

  // Pivot zero-valued basic artificials onto real columns so phase 2 cannot
  // push them positive. Rows with no usable real entry are redundant; their
  // artificial stays basic at zero and never moves.
  void purge_artificials() {
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      Index col = -1;
      double best = kPivotTol;
      for (Index j = 0; j < n_; ++j) {
        if (std::abs(T_(i, j)) > best) {
          best = std::abs(T_(i, j));
          col = j;
        }
      }
      if (col >= 0) pivot(i, col);
    }
  }

  void pivot(Index row, Index col) {
    T_.row(row) /= T_(row, col);
    for (Index i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = T_(i, col);
      if (f != 0.0) T_.row(i) -= f * T_.row(row);
    }
    basis_[row] = col;
  }

  Index m_, n_;
  double tol_;
  double rhs_norm_ = 1.0;
  Matrix T_;
  std::vector<Index> basis_;
};

}  // namespace

Solution solve(const Problem& problem, const Options& opts) {
  const Index n = problem.num_vars();
  const Index n_eq = problem.eq_rhs.size();
  const Index n_ub = problem.ub_rhs.size();
  if (n_eq > 0 && problem.eq_lhs.cols() != n)
    throw std::invalid_argument("lp::solve: eq_lhs column count mismatch");
  if (n_ub > 0 && problem.ub_lhs.cols() != n)
    throw std::invalid_argument("lp::solve: ub_lhs column count mismatch");
  if (!problem.free_vars.empty() && static_cast<Index>(problem.free_vars.size()) != n)
    throw std::invalid_argument("lp::solve: free_vars size mismatch");

  const auto is_free = [&](Index j) {
    return !problem.free_vars.empty() && problem.free_vars[j];
  };

  // Column layout: one column per nonnegative var, two (plus/minus) per free
  // var, then one slack per inequality row.
  std::vector<Index> col_of(n), neg_col_of(n, -1);
  Index cols = 0;
  for (Index j = 0; j < n; ++j) {
    col_of[j] = cols++;
    if (is_free(j)) neg_col_of[j] = cols++;
  }
  const Index slack0 = cols;
  cols += n_ub;

  const Index m = n_eq + n_ub;
  Matrix A = Matrix::Zero(m, cols);
  Vector b(m);
  for (Index i = 0; i < n_eq; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = problem.eq_lhs(i, j);
      A(i, col_of[j]) = v;
      if (neg_col_of[j] >= 0) A(i, neg_col_of[j]) = -v;
    }
    b[i] = problem.eq_rhs[i];
  }
  for (Index i = 0; i < n_ub; ++i) {
    const Index r = n_eq + i;
    for (Index j = 0; j < n; ++j) {
      const double v = problem.ub_lhs(i, j);
      A(r, col_of[j]) = v;
      if (neg_col_of[j] >= 0) A(r, neg_col_of[j]) = -v;
    }
    A(r, slack0 + i) = 1.0;
    b[r] = problem.ub_rhs[i];
  }

  Vector c = Vector::Zero(cols);
  for (Index j = 0; j < n; ++j) {
    c[col_of[j]] = problem.c[j];
    if (neg_col_of[j] >= 0) c[neg_col_of[j]] = -problem.c[j];
  }

  Solution sol;
  sol.x = Vector::Zero(n);
  if (m == 0) {
    // only the sign constraints remain
    for (Index j = 0; j < n; ++j) {
      if ((problem.c[j] < -opts.tol && !is_free(j)) ||
          (is_free(j) && std::abs(problem.c[j]) > opts.tol)) {
        sol.status = Status::Unbounded;
        return sol;
      }
    }
    sol.status = Status::Optimal;
    sol.objective = 0.0;
    return sol;
  }

  const int max_iters =
      opts.max_iterations > 0 ? opts.max_iterations
                              : static_cast<int>(200 * (m + cols) + 2000);

  Tableau tab(A, b, opts.tol);
  int iters = 0;
  if (!tab.make_feasible(max_iters, iters)) {
    sol.status = iters >= max_iters ? Status::IterationLimit : Status::Infeasible;
    sol.iterations = iters;
    return sol;
  }
  sol.status = tab.optimize(c, max_iters, iters);
  sol.iterations = iters;

  const Vector full = tab.primal();
  for (Index j = 0; j < n; ++j) {
    sol.x[j] = full[col_of[j]];
    if (neg_col_of[j] >= 0) sol.x[j] -= full[neg_col_of[j]];
  }
  sol.objective = problem.c.dot(sol.x);
  return sol;
}

}  // namespace mukit::lp
