#pragma once

namespace recsup {

// Shared tolerances. Every numerical decision in the library reads from one
// of these fields; callers override per call where the CLI exposes a flag.
struct NumericConfig {
  // Factorization / rank
  double qr_recon_tol = 1e-10;   // max-norm reconstruction check, relative
  double rank_rel_tol = 1e-12;   // |r_ii| > rank_rel_tol * max|r_jj| counts toward rank
  double kernel_tol = 1e-10;     // ||A_I^T y||_inf for kernel basis columns
  double solve_residual_tol = 1e-9;  // ||A_I^T w - s||_inf for solves

  // Linear programming
  double lp_feas_tol = 1e-9;
  double lp_opt_tol = 1e-9;
  double lp_pivot_tol = 1e-11;
  long lp_iter_factor = 50;      // iteration cap = factor * (rows + cols)

  // Recoverability decision: strict "< 1 - decision_tol" on the certificate value
  double decision_tol = 1e-12;

  // Support growth
  double hit_tol = 1e-9;         // relative grouping of simultaneous constraint hits
  int grow_retry_factor = 20;    // direction-trial budget = factor * target size
};

}  // namespace recsup
