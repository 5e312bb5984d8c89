#pragma once

// Small dense real linear algebra: row-major matrices, symmetric matrices and
// a cyclic Jacobi eigensolver.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace excl {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  /// |v><w|
  static Matrix outer(std::span<const double> v, std::span<const double> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;
  double trace() const;
  double frobenius_norm() const;
  /// Largest absolute entry.
  double max_abs() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  std::vector<double> apply(std::span<const double> v) const;

  /// Kronecker product.
  friend Matrix kron(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

/// Symmetric matrix; every write updates both triangles, so symmetry is exact.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(n, n) {}
  /// Takes the upper triangle of `m` as authoritative.
  static SymMatrix from_upper(const Matrix& m);

  std::size_t order() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  const Matrix& dense() const noexcept { return m_; }

  double trace() const { return m_.trace(); }
  double sum() const;
  double frobenius_norm() const { return m_.frobenius_norm(); }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  Matrix vectors;              ///< column k pairs with values[k]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// `threshold * max(1, ||M||_F)`. Throws std::runtime_error if `max_sweeps`
/// is exhausted.
EigenDecomposition jacobi_eigen(const SymMatrix& m, double threshold = 1e-12,
                                std::size_t max_sweeps = 100);

/// As above, but rotates from the orthogonal `start` (for instance the
/// eigenvectors of a nearby matrix) instead of the identity.
EigenDecomposition jacobi_eigen(const SymMatrix& m, const Matrix& start, double threshold = 1e-12,
                                std::size_t max_sweeps = 100);

/// Q diag(values) Q^T
SymMatrix reconstruct(const EigenDecomposition& e);

/// Nearest positive semidefinite matrix in Frobenius norm (negative
/// eigenvalues clamped to zero).
SymMatrix psd_project(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);
double max_eigenvalue(const SymMatrix& m);

}  // namespace excl
