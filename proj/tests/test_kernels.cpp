#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "calab/kernels/kernels.hpp"

using namespace calab;
using kernels::Isa;

namespace {

std::vector<cplx> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

std::vector<std::uint8_t> random_words(std::mt19937_64& rng, std::size_t count, std::size_t len, unsigned m) {
  std::vector<std::uint8_t> w(count * kernels::kWordStride, 0);
  std::uniform_int_distribution<unsigned> sym(0, m - 1);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = 0; k < len; ++k) w[i * kernels::kWordStride + k] = static_cast<std::uint8_t>(sym(rng));
  return w;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(kernels::isa_available(Isa::Scalar));
  CHECK(kernels::table(Isa::Scalar).abs_sum != nullptr);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::isa_available(Isa::Avx2)) {
    MESSAGE("AVX2 unavailable on this host; only the scalar table is exercised");
    return;
  }
  const auto& s = kernels::table(Isa::Scalar);
  const auto& v = kernels::table(Isa::Avx2);
  std::mt19937_64 rng(11);

  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 100u, 1023u}) {
    const auto x = random_vec(rng, n);
    const double ref_sum = s.abs_sum(x.data(), n);
    CHECK(v.abs_sum(x.data(), n) == doctest::Approx(ref_sum).epsilon(1e-13));
    CHECK(v.abs_max(x.data(), n) == s.abs_max(x.data(), n));
    CHECK(v.abs_sq_sum(x.data(), n) == doctest::Approx(s.abs_sq_sum(x.data(), n)).epsilon(1e-13));
  }

  for (std::size_t rows : {1u, 2u, 3u, 4u, 9u})
    for (std::size_t cols : {1u, 2u, 3u, 5u, 8u, 16u}) {
      const auto a = random_vec(rng, rows * cols);
      const auto x = random_vec(rng, cols);
      std::vector<cplx> ys(rows), yv(rows);
      s.cmatvec(a.data(), rows, cols, x.data(), ys.data());
      v.cmatvec(a.data(), rows, cols, x.data(), yv.data());
      for (std::size_t r = 0; r < rows; ++r) CHECK(std::abs(ys[r] - yv[r]) <= 1e-12 * (1.0 + std::abs(ys[r])));
    }

  for (unsigned m : {2u, 3u, 8u}) {
    const std::size_t count = 500;
    const auto words = random_words(rng, count, 24, m);
    for (std::size_t i = 0; i < 40; ++i) {
      const std::uint8_t* probe = words.data() + i * kernels::kWordStride;
      for (std::size_t j = 0; j < count; ++j)
        CHECK(v.hamming(probe, words.data() + j * kernels::kWordStride) ==
              s.hamming(probe, words.data() + j * kernels::kWordStride));
      for (unsigned floor : {1u, 3u, 8u, 25u})
        CHECK(v.first_closer_than(words.data(), count, probe, floor) ==
              s.first_closer_than(words.data(), count, probe, floor));
    }
  }
}

TEST_CASE("hamming counts differing symbols") {
  const auto& s = kernels::table(Isa::Scalar);
  std::uint8_t a[kernels::kWordStride] = {0, 1, 2, 3};
  std::uint8_t b[kernels::kWordStride] = {0, 2, 2, 0};
  CHECK(s.hamming(a, b) == 2);
  CHECK(s.hamming(a, a) == 0);
  CHECK(s.first_closer_than(b, 1, a, 2) == 1);
  CHECK(s.first_closer_than(b, 1, a, 3) == 0);
}
