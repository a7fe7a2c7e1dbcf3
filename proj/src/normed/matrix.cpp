#include "calab/normed/matrix.hpp"

#include <cmath>
#include <string>

#include "calab/error.hpp"

namespace calab::normed {

Matrix::Matrix(std::size_t dim, std::vector<cplx> data) : dim_(dim), data_(std::move(data)) {
  if (data_.size() != dim_ * dim_) throw InvalidArgument("matrix data does not match its dimension");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InvalidArgument("matrix rows must form a square array");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double Matrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim() * b.dim();
  if (n > kKronMaxDim) throw GuardExceeded("kron: product dimension " + std::to_string(n) + " exceeds 4096");
  Matrix out(n);
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx{}) continue;
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc) out(ar * b.dim() + br, ac * b.dim() + bc) = s * b(br, bc);
    }
  return out;
}

Matrix kron(std::span<const Matrix> factors) {
  if (factors.empty()) return Matrix::identity(1);
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.dim() == 0) throw InvalidArgument("kron: empty factor");
    total *= f.dim();
    if (total > kKronMaxDim) throw GuardExceeded("kron: product dimension exceeds 4096");
  }
  Matrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

namespace pauli {
Matrix I() { return Matrix::identity(2); }
Matrix X() { return Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
Matrix Y() { return Matrix::from_rows({{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}); }
Matrix Z() { return Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
}  // namespace pauli

}  // namespace calab::normed
