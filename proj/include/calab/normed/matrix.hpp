#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "calab/types.hpp"

namespace calab::normed {

// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<cplx> data);

  static Matrix identity(std::size_t dim);
  static Matrix from_rows(const std::vector<std::vector<cplx>>& rows);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  Matrix adjoint() const;
  double frobenius() const;
  double max_abs_entry() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

inline constexpr std::size_t kKronMaxDim = 4096;

// Kronecker product of the factors in list order. Throws GuardExceeded when the
// product dimension exceeds kKronMaxDim.
Matrix kron(std::span<const Matrix> factors);
Matrix kron(const Matrix& a, const Matrix& b);

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
}  // namespace pauli

}  // namespace calab::normed
