#include "calab/spin/car.hpp"

#include <bit>
#include <cmath>

#include "calab/error.hpp"
#include "calab/normed/spectral.hpp"

namespace calab::spin {

using normed::Matrix;

Matrix SignedPermutation::dense() const {
  Matrix m(dim());
  for (std::size_t r = 0; r < dim(); ++r) m(r, column[r]) = static_cast<double>(sign[r]);
  return m;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("signed permutation dimension mismatch");
  SignedPermutation p;
  p.column.resize(a.dim());
  p.sign.resize(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto mid = a.column[r];
    p.column[r] = b.column[mid];
    p.sign[r] = static_cast<std::int8_t>(a.sign[r] * b.sign[mid]);
  }
  return p;
}

SignedPermutation tensor(const SignedPermutation& a, const SignedPermutation& b) {
  const std::size_t db = b.dim();
  SignedPermutation p;
  p.column.resize(a.dim() * db);
  p.sign.resize(a.dim() * db);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      p.column[i * db + j] = static_cast<std::uint32_t>(a.column[i] * db + b.column[j]);
      p.sign[i * db + j] = static_cast<std::int8_t>(a.sign[i] * b.sign[j]);
    }
  }
  return p;
}

bool sum_is_zero(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (a.column[r] != b.column[r] || a.sign[r] + b.sign[r] != 0) return false;
  return true;
}

bool is_identity(const SignedPermutation& a) {
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (a.column[r] != r || a.sign[r] != 1) return false;
  return true;
}

bool check_car_relations(const CliffordFamily& family) {
  const auto& g = family.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!is_identity(g[i] * g[i])) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!sum_is_zero(g[i] * g[j], g[j] * g[i])) return false;
  }
  return true;
}

CliffordFamily car_generators(std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one generator");
  if (n > kMaxCarSites) throw GuardExceeded("CAR generators above " + std::to_string(kMaxCarSites) + " sites");
  const std::size_t dim = std::size_t{1} << n;
  CliffordFamily f;
  f.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    // Site k (0-based) is bit n-1-k; the Z string covers the more significant bits.
    const std::size_t bit = n - 1 - k;
    const std::size_t zmask = (dim - 1) & ~((std::size_t{1} << (bit + 1)) - 1);
    SignedPermutation u;
    u.column.resize(dim);
    u.sign.resize(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      u.column[r] = static_cast<std::uint32_t>(r ^ (std::size_t{1} << bit));
      u.sign[r] = std::popcount(r & zmask) % 2 ? -1 : 1;
    }
    f.generators.push_back(std::move(u));
  }
  if (!check_car_relations(f)) throw Error("Jordan-Wigner generators failed the CAR relations");
  return f;
}

namespace {

void check_coefficients(const CliffordFamily& family, const std::vector<double>& c) {
  if (c.size() != family.n) throw InvalidArgument("need one coefficient per generator");
  for (double v : c)
    if (!std::isfinite(v)) throw InvalidArgument("non-finite coefficient");
}

Matrix combine(const std::vector<SignedPermutation>& ops, const std::vector<double>& c) {
  Matrix s(ops.front().dim());
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (std::size_t r = 0; r < ops[k].dim(); ++r) s(r, ops[k].column[r]) += c[k] * static_cast<double>(ops[k].sign[r]);
  return s;
}

}  // namespace

IdentityCheck car_l2_identity(const CliffordFamily& family, const std::vector<double>& c) {
  check_coefficients(family, c);
  const Matrix s = combine(family.generators, c);
  double sq = 0.0;
  for (double v : c) sq += v * v;
  IdentityCheck r;
  r.residual = (s * s - cplx(sq) * Matrix::identity(s.dim())).frobenius();
  r.value = normed::spectral_norm(s).value;
  r.expected = std::sqrt(sq);
  r.pass = r.residual <= 1e-12 && std::fabs(r.value - r.expected) <= 1e-9;
  return r;
}

IdentityCheck car_tensor_l1_identity(const CliffordFamily& family, const std::vector<double>& c) {
  check_coefficients(family, c);
  if (family.n > kMaxTensorSites)
    throw GuardExceeded("tensor-square identity above " + std::to_string(kMaxTensorSites) + " sites");
  std::vector<SignedPermutation> squares;
  for (const auto& u : family.generators) squares.push_back(tensor(u, u));
  const Matrix s = combine(squares, c);
  IdentityCheck r;
  r.value = normed::spectral_norm(s).value;
  for (double v : c) r.expected += std::fabs(v);
  r.residual = std::fabs(r.value - r.expected);
  r.pass = r.residual <= 1e-9;
  return r;
}

}  // namespace calab::spin
