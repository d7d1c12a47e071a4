#pragma once

#include <vector>

#include "recsup/dense_matrix.hpp"
#include "recsup/numeric_config.hpp"

namespace recsup {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Vector primal;
  long iterations = 0;
};

const char* to_string(LpStatus s);

// min c^T x  subject to  A x = b, x >= 0. Two-phase primal simplex on the
// dense tableau with Bland's rule for both the entering and the leaving
// variable, so runs are deterministic and cycling-free. The iteration cap is
// lp_iter_factor * (rows + cols); hitting it yields IterationLimit with the
// current basic point.
LpSolution solve_standard_form(const DenseMatrix& a, const Vector& b, const Vector& cost,
                               const NumericConfig& cfg = {});

// min_y || c + M y ||_inf. Always feasible; the reported objective is the
// residual norm re-evaluated at the returned y. M may have zero columns, in
// which case the answer is ||c||_inf directly.
LpSolution solve_chebyshev(const DenseMatrix& m_mat, const Vector& c,
                           const NumericConfig& cfg = {});

// min ||x||_1  subject to  A x = b, via the split x = u - v, u,v >= 0.
// primal holds x; objective is ||x||_1. Infeasible when b is outside the
// range of A.
LpSolution solve_bp(const DenseMatrix& a, const Vector& b, const NumericConfig& cfg = {});

}  // namespace recsup
