#include "exclusivity/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace excl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::outer(std::span<const double> v, std::span<const double> w) {
  Matrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * w[j];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> Matrix::apply(std::span<const double> v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      for (std::size_t p = 0; p < b.rows_; ++p)
        for (std::size_t q = 0; q < b.cols_; ++q)
          k(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
  return k;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

SymMatrix SymMatrix::from_upper(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) s.set(i, j, m(i, j));
  return s;
}

double SymMatrix::sum() const {
  double s = 0.0;
  for (double x : m_.data()) s += x;
  return s;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Diagonalizes `a`, accumulating the rotations into `v`.
EigenDecomposition jacobi_run(Matrix a, Matrix v, double target, std::size_t max_sweeps) {
  const std::size_t n = a.rows();
  std::size_t sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == max_sweeps) throw std::runtime_error("Jacobi iteration did not converge");
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (!std::isfinite(theta * theta)) t = 0.5 / std::abs(theta);
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(p, r) = a(r, p);
          a(r, q) = s * arp + c * arq;
          a(q, r) = a(r, q);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenDecomposition e;
  e.sweeps = sweeps;
  e.values.resize(n);
  e.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    e.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) e.vectors(r, k) = v(r, order[k]);
  }
  return e;
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& m, double threshold, std::size_t max_sweeps) {
  return jacobi_run(m.dense(), Matrix::identity(m.order()),
                    threshold * std::max(1.0, m.frobenius_norm()), max_sweeps);
}

EigenDecomposition jacobi_eigen(const SymMatrix& m, const Matrix& start, double threshold,
                                std::size_t max_sweeps) {
  const std::size_t n = m.order();
  if (start.rows() != n || start.cols() != n)
    throw std::invalid_argument("start basis has the wrong shape");
  // start^T M start, symmetrized so the rotations see an exactly symmetric matrix.
  const Matrix b = start.transposed() * m.dense() * start;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (b(i, j) + b(j, i));
  return jacobi_run(std::move(a), start, threshold * std::max(1.0, m.frobenius_norm()),
                    max_sweeps);
}

SymMatrix reconstruct(const EigenDecomposition& e) {
  const std::size_t n = e.values.size();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
      out.set(i, j, s);
    }
  return out;
}

SymMatrix psd_project(const SymMatrix& m) {
  EigenDecomposition e = jacobi_eigen(m);
  for (double& lambda : e.values) lambda = std::max(lambda, 0.0);
  return reconstruct(e);
}

double min_eigenvalue(const SymMatrix& m) {
  if (m.order() == 0) return 0.0;
  return jacobi_eigen(m).values.front();
}

double max_eigenvalue(const SymMatrix& m) {
  if (m.order() == 0) return 0.0;
  return jacobi_eigen(m).values.back();
}

}  // namespace excl
