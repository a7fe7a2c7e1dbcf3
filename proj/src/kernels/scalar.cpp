#include <cmath>

#include "table_decls.hpp"

namespace calab::kernels::detail {
namespace {

void cmatvec(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      re += row[j].real() * x[j].real() - row[j].imag() * x[j].imag();
      im += row[j].real() * x[j].imag() + row[j].imag() * x[j].real();
    }
    y[i] = cplx(re, im);
  }
}

double modulus(const cplx& z) { return std::sqrt(z.real() * z.real() + z.imag() * z.imag()); }

double abs_sum(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += modulus(x[i]);
  return s;
}

double abs_max(const cplx* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sq = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    if (sq > m) m = sq;
  }
  return std::sqrt(m);
}

double abs_sq_sum(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

unsigned hamming(const std::uint8_t* a, const std::uint8_t* b) {
  unsigned d = 0;
  for (std::size_t i = 0; i < kWordStride; ++i) d += a[i] != b[i];
  return d;
}

std::size_t first_closer_than(const std::uint8_t* words, std::size_t count, const std::uint8_t* probe,
                              unsigned min_distance) {
  for (std::size_t w = 0; w < count; ++w) {
    if (hamming(words + w * kWordStride, probe) < min_distance) return w;
  }
  return count;
}

}  // namespace

const KernelTable kScalarTable{cmatvec, abs_sum, abs_max, abs_sq_sum, hamming, first_closer_than};

}  // namespace calab::kernels::detail
