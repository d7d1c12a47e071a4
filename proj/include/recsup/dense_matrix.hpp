#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace recsup {

using Vector = std::vector<double>;

// Dense real matrix, row-major. All entries are finite; constructors taking
// data validate this.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);                         // zero-filled
  DenseMatrix(int rows, int cols, std::vector<double> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Vector column(int j) const;
  DenseMatrix columns(const std::vector<int>& idx) const;  // A_I
  DenseMatrix transposed() const;

  Vector apply(const Vector& x) const;             // A x
  Vector apply_transpose(const Vector& x) const;   // A^T x

  bool operator==(const DenseMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix identity_matrix(int n);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// Small vector helpers used throughout.
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
double norm1(const Vector& a);
double norm_inf(const Vector& a);
Vector scaled(const Vector& a, double t);
Vector add_scaled(const Vector& a, double t, const Vector& b);  // a + t*b

// Text format: first line "m n", then m rows of n space-separated decimals.
// Values are written with 17 significant digits so binary64 round-trips.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const DenseMatrix& a);
void write_matrix_file(const std::string& path, const DenseMatrix& a);

std::uint64_t matrix_fingerprint(const DenseMatrix& a);

}  // namespace recsup
