#pragma once

#include <vector>

#include "mukit/common.hpp"

namespace mukit::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::IterationLimit;
  Vector x;            // in the caller's variable order
  double objective = 0.0;
  int iterations = 0;

  bool optimal() const { return status == Status::Optimal; }
};

/// min c.x  subject to  eq_lhs x = eq_rhs,  ub_lhs x <= ub_rhs,
/// x_j >= 0 unless free_vars[j].
///
/// Dense two-phase primal simplex. Feasibility tolerance 1e-9; Dantzig
/// pricing with a Bland fallback after stalls, so runs are deterministic.
struct Problem {
  Vector c;
  Matrix eq_lhs;
  Vector eq_rhs;
  Matrix ub_lhs;
  Vector ub_rhs;
  std::vector<bool> free_vars;  // empty means all variables nonnegative

  Index num_vars() const { return c.size(); }
};

struct Options {
  double tol = 1e-9;
  int max_iterations = 0;  // 0 = automatic from problem size
};

Solution solve(const Problem& problem, const Options& opts = {});

}  // namespace mukit::lp
