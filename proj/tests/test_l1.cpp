#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "calab/error.hpp"
#include "calab/l1/basis_constants.hpp"
#include "calab/l1/witness.hpp"
#include "calab/normed/matrix.hpp"

using namespace calab;
using namespace calab::normed;
using namespace calab::l1;

namespace {

VectorFamily basis(FiniteNormedSpace s, std::size_t n) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(s.dimension(), 0.0);
    e[i] = 1.0;
    v.push_back(e);
  }
  return VectorFamily(s, v);
}

VectorFamily pauli_pair(Field f) {
  const auto z = pauli::Z(), x = pauli::X();
  return VectorFamily(FiniteNormedSpace::matrix(2, f), {Vec(z.data().begin(), z.data().end()),
                                                        Vec(x.data().begin(), x.data().end())});
}

// f(T^k p) = +-1 by the k-th symbol of p, over all 2^n points p.
VectorFamily two_shift_orbit(std::size_t n) {
  const std::size_t pts = std::size_t{1} << n;
  std::vector<Vec> v(n, Vec(pts));
  std::vector<long long> labels;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < pts; ++p) v[k][p] = ((p >> (n - 1 - k)) & 1u) ? 1.0 : -1.0;
    labels.push_back(static_cast<long long>(k));
  }
  return VectorFamily(FiniteNormedSpace::sup(pts), v, labels);
}

// Rows of a rotation: orthonormal but not coordinate-aligned.
VectorFamily rotated_orthonormal(std::size_t n, double angle) {
  std::vector<Vec> v(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  const double c = std::cos(angle), s = std::sin(angle);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (auto& row : v) {
      const cplx a = row[i], b = row[i + 1];
      row[i] = c * a - s * b;
      row[i + 1] = s * a + c * b;
    }
  return VectorFamily(FiniteNormedSpace::lp(2, n), v);
}

// Minimum of norm(sum c_i x_i) over the l1 sphere on a simplex grid of step
// 1/N per sign pattern (first sign +1), real families only.
double brute_lower(const VectorFamily& f, int N) {
  const std::size_t n = f.size();
  double best = 1e300;
  std::vector<int> k(n, 0);
  for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        k[i] = left;
        Vec y(f.space().dimension(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          const double s = (j > 0 && ((signs >> (j - 1)) & 1u)) ? -1.0 : 1.0;
          for (std::size_t d = 0; d < y.size(); ++d) y[d] += s * k[j] / double(N) * f[j][d];
        }
        best = std::min(best, f.space().norm(y));
        return;
      }
      for (int a = 0; a <= left; ++a) {
        k[i] = a;
        rec(i + 1, left - a);
      }
    };
    rec(0, N);
  }
  return best;
}

}  // namespace

TEST_CASE("upper basis constant") {
  CHECK(upper_basis_constant(basis(FiniteNormedSpace::lp(1, 3), 3)) == 1.0);
  CHECK(upper_basis_constant(VectorFamily(FiniteNormedSpace::lp(2, 2), {Vec{3.0, 4.0}})) == doctest::Approx(5.0));
  CHECK(upper_basis_constant(pauli_pair(Field::Complex)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(upper_basis_constant(VectorFamily(FiniteNormedSpace::lp(2, 2), {})), InvalidArgument);
}

TEST_CASE("lower basis constant examples") {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const auto iv = lower_basis_constant(basis(FiniteNormedSpace::lp(1, n), n), 0.1);
    CHECK(iv.contains(1.0));
    CHECK(iv.hi == 1.0);
    CHECK(iv.width() < 1e-6);
    const auto inf = lower_basis_constant(basis(FiniteNormedSpace::lp(kInf, n), n), 1e-3);
    CHECK(inf.contains(1.0 / n, 1e-15));
  }
  SUBCASE("x and -x") {
    const double mesh = 0.05;
    const auto s = FiniteNormedSpace::lp(2, 3);
    const Vec x{0.6, 0.0, 0.8};
    const auto iv = lower_basis_constant(VectorFamily(s, {x, Vec{-0.6, 0.0, -0.8}}), mesh);
    CHECK(iv.contains(0.0));
    CHECK(iv.hi <= 1.0 * mesh);
  }
  SUBCASE("Pauli pair, both fields") {
    for (Field f : {Field::Real, Field::Complex}) {
      const auto iv = lower_basis_constant(pauli_pair(f), 1e-3);
      CHECK(iv.contains(1.0 / std::sqrt(2.0)));
      CHECK(iv.width() <= 1e-3);
    }
  }
  SUBCASE("non-aligned families agree with a brute-force grid") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int t = 0; t < 6; ++t) {
      const auto s = FiniteNormedSpace::lp(t % 3 == 0 ? 1.0 : (t % 3 == 1 ? 2.0 : kInf), 3);
      std::vector<Vec> v(3, Vec(3));
      for (auto& row : v)
        for (auto& z : row) z = g(rng);
      const VectorFamily f(s, v);
      const auto iv = lower_basis_constant(f, 1e-2);
      const double b = brute_lower(f, 400);
      CHECK(iv.lo <= b + 1e-12);
      CHECK(iv.hi <= b + 1.5 * upper_basis_constant(f) / 400);
    }
  }
}

TEST_CASE("equivalence constant") {
  CHECK(equivalence_constant(basis(FiniteNormedSpace::lp(1, 4), 4), 1e-3).contains(1.0));
  const auto orbit = equivalence_constant(two_shift_orbit(8), 1e-3);
  CHECK(orbit.contains(1.0));
  CHECK(orbit.hi <= 1.0 + 1e-9);
  for (std::size_t n : {2u, 3u}) {
    const auto f = rotated_orthonormal(n, 0.37);
    const auto iv = equivalence_constant(f, n == 2 ? 1e-3 : 1e-2);
    CHECK(iv.contains(std::sqrt(double(n)), 1e-12));
    CHECK(iv.lo >= 1.0);
    // The grid oracle sees the same minimum 1/sqrt(n) of the Euclidean norm.
    CHECK(brute_lower(f, 600) == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(2e-3));
  }
  const Vec x{1.0, 2.0};
  CHECK_THROWS_AS(equivalence_constant(VectorFamily(FiniteNormedSpace::lp(2, 2), {x, x}), 0.01), NotAnIsomorphism);
}

TEST_CASE("basis constant invariants") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const auto s = FiniteNormedSpace::lp(t % 3 == 0 ? 1.0 : 2.0, 3, f);
    const std::size_t n = 2 + t % 2;
    std::vector<Vec> v(n, Vec(3));
    for (auto& row : v)
      for (auto& z : row) z = f == Field::Real ? cplx(g(rng)) : cplx(g(rng), g(rng));
    const VectorFamily fam(s, v);
    const auto bc = basis_constants(fam, 0.05);
    CHECK(bc.lower.lo <= bc.lower.hi);
    CHECK(0.0 <= bc.lower.hi);
    CHECK(bc.lower.hi <= bc.upper + 1e-12);
    if (bc.lower.hi > 0) CHECK(bc.equivalence.lo >= 1.0 - 1e-12);

    // Halving the mesh never widens the interval.
    const auto fine = lower_basis_constant(fam, 0.025);
    CHECK(fine.lo >= bc.lower.lo - 1e-12);
    CHECK(fine.hi <= bc.lower.hi + 1e-12);

    // Scale equivariance.
    const double scale = 2.5;
    const auto scaled = basis_constants(fam.scaled(scale), 0.05);
    CHECK(scaled.upper == doctest::Approx(scale * bc.upper).epsilon(1e-12));
    CHECK(scaled.lower.lo == doctest::Approx(scale * bc.lower.lo).epsilon(1e-12));
    CHECK(scaled.lower.hi == doctest::Approx(scale * bc.lower.hi).epsilon(1e-12));

    // A repeated vector forces 0; removing the repeat never lowers lo.
    std::vector<Vec> dup = v;
    dup.push_back(v[0]);
    const auto d = lower_basis_constant(VectorFamily(s, dup), 0.05);
    CHECK(d.lo == 0.0);
    CHECK(d.hi == 0.0);
    CHECK(bc.lower.lo >= d.lo);
  }
}

TEST_CASE("threshold certification agrees with the enclosure") {
  const auto f = rotated_orthonormal(3, 0.5);
  const double truth = 1.0 / std::sqrt(3.0);
  CHECK(certify_lower_at_least(f, truth - 0.02, 0.01).decision == Decision::Certified);
  CHECK(certify_lower_at_least(f, truth + 0.02, 0.01).decision == Decision::Refuted);
}

TEST_CASE("witness search") {
  SUBCASE("two-shift coordinate orbit is isometric") {
    const auto r = find_l1_witness(two_shift_orbit(8), 1.01, make_density(1, 2));
    REQUIRE(r.found);
    CHECK(r.indices == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(r.density == Density{1, 1});
    CHECK(r.exhaustive);
  }
  SUBCASE("constant orbit") {
    const Vec x{0.3, -1.0};
    const VectorFamily orbit(FiniteNormedSpace::lp(1, 2), std::vector<Vec>(8, x));
    for (double K : {1.0, 2.0, 100.0}) CHECK_FALSE(find_l1_witness(orbit, K, make_density(1, 4)).found);
  }
  SUBCASE("orthonormal orbit at K = 1.2") {
    std::vector<Vec> v(8, Vec(8, 0.0));
    for (std::size_t i = 0; i < 8; ++i) v[i][i] = 1.0;
    const VectorFamily orbit(FiniteNormedSpace::lp(2, 8), v);
    const auto r = find_l1_witness(orbit, 1.2, make_density(1, 2));
    CHECK_FALSE(r.found);
    // The densest certified set at K = 1.2 is a single vector (pairs give sqrt 2).
    const auto small = find_l1_witness(orbit, 1.2, make_density(1, 8));
    CHECK(small.found);
    CHECK(small.indices.size() == 1);
    const auto pairs = find_l1_witness(orbit, 1.5, make_density(1, 8));
    CHECK(pairs.indices.size() == 2);
  }
  SUBCASE("report invariants and JSON") {
    const auto r = find_l1_witness(two_shift_orbit(6), 1.01, make_density(1, 3));
    CHECK(r.density.value() > 0.0);
    CHECK(r.density.value() <= 1.0);
    for (long long i : r.indices) CHECK((i >= 0 && i < 6));
    const auto j = to_json(r, 1.01);
    CHECK(j["density"]["num"] == 1);
    CHECK(j["density"]["den"] == 1);
    CHECK(j["I"].size() == 6);
    CHECK(j["lower"].is_array());
    CHECK(j["K"].size() == 2);
  }
  SUBCASE("label validation") {
    const Vec x{1.0};
    CHECK_THROWS_AS(find_l1_witness(VectorFamily(FiniteNormedSpace::lp(1, 1), {x, x}, {0, 0}), 1.5, make_density(1, 2)),
                    InvalidArgument);
    CHECK_THROWS_AS(find_l1_witness(VectorFamily(FiniteNormedSpace::lp(1, 1), {x}), 0.5, make_density(1, 2)),
                    InvalidArgument);
  }
}
