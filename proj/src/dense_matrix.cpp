#include "recsup/dense_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recsup {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("DenseMatrix: entry count does not match dimensions");
  for (double v : data_)
    if (!std::isfinite(v)) throw std::invalid_argument("DenseMatrix: non-finite entry");
}

Vector DenseMatrix::column(int j) const {
  Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

DenseMatrix DenseMatrix::columns(const std::vector<int>& idx) const {
  DenseMatrix out(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Vector DenseMatrix::apply(const Vector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  Vector y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Vector DenseMatrix::apply_transpose(const Vector& x) const {
  if (static_cast<int>(x.size()) != rows_) throw std::invalid_argument("apply_transpose: size mismatch");
  Vector y(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double xi = x[i];
    for (int j = 0; j < cols_; ++j) y[j] += (*this)(i, j) * xi;
  }
  return y;
}

DenseMatrix identity_matrix(int n) {
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 1.0;
  return a;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: size mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

double norm1(const Vector& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

double norm_inf(const Vector& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::fabs(v));
  return s;
}

Vector scaled(const Vector& a, double t) {
  Vector out(a);
  for (double& v : out) v *= t;
  return out;
}

Vector add_scaled(const Vector& a, double t, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * b[i];
  return out;
}

DenseMatrix read_matrix(std::istream& in) {
  int m = 0, n = 0;
  if (!(in >> m >> n)) throw std::runtime_error("matrix: missing or malformed header");
  if (m <= 0 || n <= 0) throw std::runtime_error("matrix: dimensions must be positive");
  std::vector<double> entries(static_cast<std::size_t>(m) * n);
  for (auto& v : entries) {
    if (!(in >> v)) throw std::runtime_error("matrix: too few entries");
    if (!std::isfinite(v)) throw std::runtime_error("matrix: non-finite entry");
  }
  return DenseMatrix(m, n, std::move(entries));
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& a) {
  out << a.rows() << " " << a.cols() << "\n";
  char buf[64];
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const DenseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_matrix(out, a);
}

std::uint64_t matrix_fingerprint(const DenseMatrix& a) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t w) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  feed(static_cast<std::uint64_t>(a.rows()));
  feed(static_cast<std::uint64_t>(a.cols()));
  for (double v : a.data()) {
    std::uint64_t w;
    std::memcpy(&w, &v, sizeof(w));
    feed(w);
  }
  return h;
}

}  // namespace recsup
