#pragma once

#include <optional>
#include <vector>

#include "recsup/dense_matrix.hpp"
#include "recsup/numeric_config.hpp"

namespace recsup {

// QR factorization with a full square Q: A[:, col_perm] = Q * R, where Q is
// rows x rows orthogonal and R is rows x k upper trapezoidal. Keeping the
// full Q means the trailing columns are an orthonormal basis of the
// orthogonal complement of the factored column span, which is exactly the
// kernel of A_I^T needed by the support-growing walk.
struct QrFactorization {
  DenseMatrix q;               // rows x rows, orthogonal
  DenseMatrix r;               // rows x k, zero below the diagonal
  std::vector<int> col_perm;   // source column of each factored column (0-based)
  int source_rows = 0;
  int source_cols = 0;
};

// Householder QR with column pivoting; |r(i,i)| is nonincreasing and the
// diagonal of R is nonnegative. Deterministic. Throws std::invalid_argument
// on empty matrices.
QrFactorization qr_factor(const DenseMatrix& a);

// Appends one column to an existing factorization without re-pivoting, via
// Givens rotations on the trailing rows. Cost is O(rows * (rows - k)), so
// assembling a factorization column by column stays quadratic per step.
QrFactorization qr_append_column(const QrFactorization& f, const Vector& v);

// Number of diagonal entries of R above rank_rel_tol * max_i |r(i,i)|.
int numerical_rank(const QrFactorization& f, const NumericConfig& cfg = {});

// Orthonormal basis of ker(A_I^T) as matrix columns, sign-normalized so the
// largest-magnitude entry of each column is positive. Empty index set yields
// the identity basis; a spanning A_I yields a matrix with zero columns.
DenseMatrix kernel_basis(const DenseMatrix& a, const std::vector<int>& i_set,
                         const NumericConfig& cfg = {});

// Minimum-Euclidean-norm solution of A_I^T w = rhs. Returns nullopt when A_I
// is rank-deficient and rhs is not in the row space of A_I.
std::optional<Vector> min_norm_solution(const DenseMatrix& a, const std::vector<int>& i_set,
                                        const Vector& rhs, const NumericConfig& cfg = {});

namespace qrdetail {

// Shared internals so certify/grow can reuse one factorization for several
// right-hand sides.
DenseMatrix kernel_from_factorization(const QrFactorization& f, int rank);
std::optional<Vector> min_norm_from_factorization(const QrFactorization& f, int rank,
                                                  const Vector& rhs, double residual_tol);

}  // namespace qrdetail

}  // namespace recsup
