#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "calab/normed/matrix.hpp"

namespace calab::spin {

inline constexpr std::size_t kMaxCarSites = 10;
inline constexpr std::size_t kMaxTensorSites = 5;

// A matrix with exactly one nonzero entry, +1 or -1, per row:
// M(r, column[r]) = sign[r].
struct SignedPermutation {
  std::vector<std::uint32_t> column;
  std::vector<std::int8_t> sign;

  std::size_t dim() const { return column.size(); }
  normed::Matrix dense() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation tensor(const SignedPermutation& a, const SignedPermutation& b);
// a + b == 0 as integer matrices.
bool sum_is_zero(const SignedPermutation& a, const SignedPermutation& b);
bool is_identity(const SignedPermutation& a);

// Jordan-Wigner generators u_k = Z x ... x Z x X x I x ... x I (k-1 factors of Z),
// k = 1..n, on 2^n dimensions. Site 1 is the most significant bit.
struct CliffordFamily {
  std::size_t n = 0;
  std::vector<SignedPermutation> generators;

  normed::Matrix dense(std::size_t k) const { return generators.at(k).dense(); }
};

// Throws GuardExceeded above kMaxCarSites. The squares and pairwise
// anticommutators are checked exactly before returning.
CliffordFamily car_generators(std::size_t n);

// Exact integer check of u_k^2 = I and u_i u_j + u_j u_i = 0 (i != j).
bool check_car_relations(const CliffordFamily& family);

struct IdentityCheck {
  bool pass = false;
  double residual = 0.0;  // defining residual of the identity
  double value = 0.0;     // spectral norm of the operator
  double expected = 0.0;
};

// S = sum c_k u_k: ||S^2 - (sum c_k^2) I||_F <= 1e-12 and
// ||S|| = sqrt(sum c_k^2) within 1e-9.
IdentityCheck car_l2_identity(const CliffordFamily& family, const std::vector<double>& c);

// ||sum c_k (u_k x u_k)|| = sum |c_k| within 1e-9. Throws GuardExceeded above
// kMaxTensorSites.
IdentityCheck car_tensor_l1_identity(const CliffordFamily& family, const std::vector<double>& c);

}  // namespace calab::spin
