#include <immintrin.h>

#include <bit>
#include <cmath>

#include "table_decls.hpp"

namespace calab::kernels::detail {
namespace {

// Two complex doubles per register, interleaved [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d x) {
  const __m256d x_re = _mm256_movedup_pd(x);
  const __m256d x_im = _mm256_permute_pd(x, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a, x_re), _mm256_mul_pd(a_sw, x_im));
}

void cmatvec(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = reinterpret_cast<const double*>(a + i * cols);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(row + 2 * j), _mm256_loadu_pd(xd + 2 * j)));
      acc1 = _mm256_add_pd(acc1, cmul(_mm256_loadu_pd(row + 2 * j + 4), _mm256_loadu_pd(xd + 2 * j + 4)));
    }
    for (; j + 2 <= cols; j += 2) {
      acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(row + 2 * j), _mm256_loadu_pd(xd + 2 * j)));
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; j < cols; ++j) {
      const cplx& r = a[i * cols + j];
      re += r.real() * x[j].real() - r.imag() * x[j].imag();
      im += r.real() * x[j].imag() + r.imag() * x[j].real();
    }
    y[i] = cplx(re, im);
  }
}

// |z|^2 of two complex numbers, duplicated into [s0, s0, s1, s1].
inline __m256d sq_pairs(__m256d v) {
  const __m256d sq = _mm256_mul_pd(v, v);
  return _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
}

inline double hsum(__m256d v) {
  alignas(32) double l[4];
  _mm256_store_pd(l, v);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

double abs_sum(const cplx* x, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq_pairs(_mm256_loadu_pd(d + 2 * i))));
  // each modulus appears twice in acc
  double s = 0.5 * hsum(acc);
  for (; i < n; ++i) s += std::sqrt(x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  return s;
}

double abs_max(const cplx* x, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(x);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = _mm256_max_pd(m, sq_pairs(_mm256_loadu_pd(d + 2 * i)));
  alignas(32) double l[4];
  _mm256_store_pd(l, m);
  double best = std::max(std::max(l[0], l[1]), std::max(l[2], l[3]));
  for (; i < n; ++i) best = std::max(best, x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  return std::sqrt(best);
}

double abs_sq_sum(const cplx* x, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

inline unsigned hamming_reg(__m256i a, __m256i b) {
  const unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
  return static_cast<unsigned>(std::popcount(~eq));
}

unsigned hamming(const std::uint8_t* a, const std::uint8_t* b) {
  return hamming_reg(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
}

std::size_t first_closer_than(const std::uint8_t* words, std::size_t count, const std::uint8_t* probe,
                              unsigned min_distance) {
  const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(probe));
  for (std::size_t w = 0; w < count; ++w) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w * kWordStride));
    if (hamming_reg(v, p) < min_distance) return w;
  }
  return count;
}

}  // namespace

const KernelTable kAvx2Table{cmatvec, abs_sum, abs_max, abs_sq_sum, hamming, first_closer_than};

}  // namespace calab::kernels::detail
