#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace procphi::quantum {

using Complex = std::complex<double>;

/// Dense row-major complex matrix; storage is interleaved (re, im).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;
  bool is_hermitian(double tol) const;
  /// Largest absolute entry.
  double max_abs() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, const CMatrix& a);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Standard Kronecker product with `a` as the slow (big-endian) index.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max |a_ij - b_ij|, or infinity when the shapes differ.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace procphi::quantum
