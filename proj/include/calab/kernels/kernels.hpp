#pragma once

// Inner-loop kernels with a scalar reference implementation and an AVX2
// variant. The variant is chosen once at runtime from CPU support; setting
// CALAB_FORCE_SCALAR=1 in the environment pins the scalar table.

#include <cstddef>
#include <cstdint>

#include "calab/types.hpp"

namespace calab::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

// Packed word layout for Hamming kernels: each word occupies kWordStride bytes,
// one symbol per byte, zero padded.
inline constexpr std::size_t kWordStride = 32;

struct KernelTable {
  // y = A x for a row-major rows x cols complex matrix.
  void (*cmatvec)(const cplx* a, std::size_t rows, std::size_t cols, const cplx* x, cplx* y);
  // sum |x_i|, max |x_i|, sum |x_i|^2
  double (*abs_sum)(const cplx* x, std::size_t n);
  double (*abs_max)(const cplx* x, std::size_t n);
  double (*abs_sq_sum)(const cplx* x, std::size_t n);
  // Number of positions where two packed words differ.
  unsigned (*hamming)(const std::uint8_t* a, const std::uint8_t* b);
  // Index of the first packed word whose Hamming distance to probe is below
  // min_distance, or count if there is none.
  std::size_t (*first_closer_than)(const std::uint8_t* words, std::size_t count,
                                   const std::uint8_t* probe, unsigned min_distance);
};

bool isa_available(Isa isa);
const KernelTable& table(Isa isa);

// Table selected for this process.
const KernelTable& active();
Isa active_isa();

}  // namespace calab::kernels
