#include "recsup/qr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recsup {

namespace {

// Flips Q column / R row j so that r(j,j) >= 0.
void normalize_diagonal_sign(QrFactorization& f, int j) {
  if (f.r(j, j) >= 0.0) return;
  for (int t = j; t < f.r.cols(); ++t) f.r(j, t) = -f.r(j, t);
  for (int i = 0; i < f.q.rows(); ++i) f.q(i, j) = -f.q(i, j);
}

}  // namespace

QrFactorization qr_factor(const DenseMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  if (m <= 0 || n <= 0) throw std::invalid_argument("qr_factor: empty matrix");

  // Work on a permuted copy; reduce with Householder reflectors applied to
  // both the work matrix and an explicit Q.
  DenseMatrix work = a;
  DenseMatrix q = identity_matrix(m);
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = j;

  std::vector<double> colnorm2(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += work(i, j) * work(i, j);
    colnorm2[j] = s;
  }

  const int steps = std::min(m, n);
  Vector v(m);
  for (int jstep = 0; jstep < steps; ++jstep) {
    // Pivot: remaining column with the largest residual norm, recomputed
    // exactly to keep the choice deterministic and downdating-error free.
    int piv = jstep;
    double best = -1.0;
    for (int j = jstep; j < n; ++j) {
      double s = 0.0;
      for (int i = jstep; i < m; ++i) s += work(i, j) * work(i, j);
      colnorm2[j] = s;
      if (s > best) {
        best = s;
        piv = j;
      }
    }
    if (piv != jstep) {
      for (int i = 0; i < m; ++i) std::swap(work(i, jstep), work(i, piv));
      std::swap(colnorm2[jstep], colnorm2[piv]);
      std::swap(perm[jstep], perm[piv]);
    }

    const double alpha = std::sqrt(std::max(0.0, colnorm2[jstep]));
    if (alpha == 0.0) break;  // all remaining columns are zero

    // Householder vector for work(jstep:, jstep).
    double x0 = work(jstep, jstep);
    const double beta = (x0 >= 0.0) ? -alpha : alpha;
    v[jstep] = x0 - beta;
    for (int i = jstep + 1; i < m; ++i) v[i] = work(i, jstep);
    double vnorm2 = 0.0;
    for (int i = jstep; i < m; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 > 0.0) {
      const double inv = 2.0 / vnorm2;
      for (int j = jstep; j < n; ++j) {
        double s = 0.0;
        for (int i = jstep; i < m; ++i) s += v[i] * work(i, j);
        s *= inv;
        for (int i = jstep; i < m; ++i) work(i, j) -= s * v[i];
      }
      // Q <- Q * H (H symmetric), i.e. update columns jstep.. of Q rows.
      for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int t = jstep; t < m; ++t) s += q(i, t) * v[t];
        s *= inv;
        for (int t = jstep; t < m; ++t) q(i, t) -= s * v[t];
      }
    }
    work(jstep, jstep) = beta;
    for (int i = jstep + 1; i < m; ++i) work(i, jstep) = 0.0;
  }

  // Scrub subdiagonal roundoff so R is exactly trapezoidal.
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < m; ++i) work(i, j) = 0.0;

  QrFactorization f{std::move(q), std::move(work), std::move(perm), m, n};
  for (int j = 0; j < std::min(m, n); ++j) normalize_diagonal_sign(f, j);
  return f;
}

QrFactorization qr_append_column(const QrFactorization& f, const Vector& v) {
  const int m = f.source_rows;
  if (static_cast<int>(v.size()) != m)
    throw std::invalid_argument("qr_append_column: column length mismatch");
  const int k = f.r.cols();

  QrFactorization out;
  out.q = f.q;
  out.col_perm = f.col_perm;
  out.col_perm.push_back(f.source_cols);
  out.source_rows = m;
  out.source_cols = f.source_cols + 1;

  // d = Q^T v, then rotate rows k+1..m-1 into row k. Existing R columns are
  // zero on those rows, so only Q and d change.
  Vector d = out.q.apply_transpose(v);
  for (int i = m - 1; i > k && i > 0; --i) {
    const double a = d[i - 1];
    const double b = d[i];
    if (b == 0.0) continue;
    const double r = std::hypot(a, b);
    const double c = a / r;
    const double s = b / r;
    d[i - 1] = r;
    d[i] = 0.0;
    for (int row = 0; row < m; ++row) {
      const double q0 = out.q(row, i - 1);
      const double q1 = out.q(row, i);
      out.q(row, i - 1) = c * q0 + s * q1;
      out.q(row, i) = -s * q0 + c * q1;
    }
  }

  out.r = DenseMatrix(m, k + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) out.r(i, j) = f.r(i, j);
  for (int i = 0; i <= std::min(k, m - 1); ++i) out.r(i, k) = d[i];
  if (k < m) normalize_diagonal_sign(out, k);
  return out;
}

int numerical_rank(const QrFactorization& f, const NumericConfig& cfg) {
  const int d = std::min(f.r.rows(), f.r.cols());
  double ref = 0.0;
  for (int i = 0; i < d; ++i) ref = std::max(ref, std::fabs(f.r(i, i)));
  if (ref == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < d; ++i)
    if (std::fabs(f.r(i, i)) > cfg.rank_rel_tol * ref) ++rank;
  return rank;
}

namespace qrdetail {

DenseMatrix kernel_from_factorization(const QrFactorization& f, int rank) {
  const int m = f.source_rows;
  DenseMatrix basis(m, m - rank);
  for (int j = rank; j < m; ++j) {
    int jb = j - rank;
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < m; ++i) {
      const double mag = std::fabs(f.q(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    const double flip = (f.q(arg, j) < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < m; ++i) basis(i, jb) = flip * f.q(i, j);
  }
  return basis;
}

std::optional<Vector> min_norm_from_factorization(const QrFactorization& f, int rank,
                                                  const Vector& rhs, double residual_tol) {
  const int m = f.source_rows;
  const int k = f.r.cols();
  // A_I P = Q R, so A_I^T w = rhs becomes R^T z = P^T rhs with z = Q^T w;
  // forward-substitute the leading rank x rank block and take w in the range
  // of the leading Q columns, which is the minimum-norm representative.
  Vector prhs(k);
  for (int j = 0; j < k; ++j) prhs[j] = rhs[f.col_perm[j]];
  Vector z(rank, 0.0);
  for (int j = 0; j < rank; ++j) {
    double acc = prhs[j];
    for (int t = 0; t < j; ++t) acc -= f.r(t, j) * z[t];
    z[j] = acc / f.r(j, j);
  }
  // Consistency of the remaining equations decides feasibility.
  for (int j = rank; j < k; ++j) {
    double acc = prhs[j];
    for (int t = 0; t < rank; ++t) acc -= f.r(t, j) * z[t];
    if (std::fabs(acc) > residual_tol) return std::nullopt;
  }
  Vector w(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int t = 0; t < rank; ++t) acc += f.q(i, t) * z[t];
    w[i] = acc;
  }
  return w;
}

}  // namespace qrdetail

DenseMatrix kernel_basis(const DenseMatrix& a, const std::vector<int>& i_set,
                         const NumericConfig& cfg) {
  const int m = a.rows();
  if (i_set.empty()) {
    return identity_matrix(m);
  }
  QrFactorization f = qr_factor(a.columns(i_set));
  const int rank = numerical_rank(f, cfg);
  return qrdetail::kernel_from_factorization(f, rank);
}

std::optional<Vector> min_norm_solution(const DenseMatrix& a, const std::vector<int>& i_set,
                                        const Vector& rhs, const NumericConfig& cfg) {
  if (rhs.size() != i_set.size())
    throw std::invalid_argument("min_norm_solution: rhs length must match index set");
  if (i_set.empty()) return Vector(a.rows(), 0.0);
  QrFactorization f = qr_factor(a.columns(i_set));
  const int rank = numerical_rank(f, cfg);
  return qrdetail::min_norm_from_factorization(f, rank, rhs, cfg.solve_residual_tol);
}

}  // namespace recsup
