#include "calab/spin/pauli.hpp"

#include <cmath>

#include "calab/error.hpp"
#include "calab/normed/spectral.hpp"

namespace calab::spin {

using normed::Matrix;

namespace {

void check_coefficients(const PauliCoefficients& coeffs) {
  if (coeffs.empty()) throw InvalidArgument("need at least one site");
  for (const auto& [c, d] : coeffs)
    if (!std::isfinite(c) || !std::isfinite(d)) throw InvalidArgument("non-finite Pauli coefficient");
}

Matrix site_operator(std::size_t n, std::size_t k, const Matrix& p) {
  std::vector<Matrix> factors(n, normed::pauli::I());
  factors[k] = p;
  return normed::kron(factors);
}

}  // namespace

Matrix pauli_span_operator(const PauliCoefficients& coeffs) {
  check_coefficients(coeffs);
  const std::size_t n = coeffs.size();
  if (n > kMaxCrosscheckSites) throw GuardExceeded("Pauli operator above " + std::to_string(kMaxCrosscheckSites) + " sites");
  Matrix sum(std::size_t{1} << n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [c, d] = coeffs[k];
    if (c != 0.0) sum += cplx(c) * site_operator(n, k, normed::pauli::Z());
    if (d != 0.0) sum += cplx(d) * site_operator(n, k, normed::pauli::X());
  }
  return sum;
}

PauliSpanNorm pauli_span_norm(const PauliCoefficients& coeffs, bool crosscheck) {
  check_coefficients(coeffs);
  PauliSpanNorm r;
  for (const auto& [c, d] : coeffs) r.formula += std::hypot(c, d);
  if (crosscheck) r.matrix_norm = normed::spectral_norm(pauli_span_operator(coeffs)).value;
  return r;
}

}  // namespace calab::spin
