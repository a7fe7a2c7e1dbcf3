#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calab/types.hpp"

namespace calab::normed {

enum class SpaceKind { Lp, SupOverPoints, MatrixSpectral };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A finite-dimensional normed space with an evaluable norm.
//   Lp(p, n):          l_p on n coordinates, 1 <= p <= inf
//   SupOverPoints(k):  sup norm of a function on k points
//   MatrixSpectral(d): operator norm on d x d matrices, coordinates row-major
class FiniteNormedSpace {
 public:
  static FiniteNormedSpace lp(double p, std::size_t dim, Field field = Field::Real);
  static FiniteNormedSpace sup(std::size_t points, Field field = Field::Real);
  static FiniteNormedSpace matrix(std::size_t d, Field field = Field::Complex);

  SpaceKind kind() const { return kind_; }
  Field field() const { return field_; }
  double p() const { return p_; }
  // Number of scalar coordinates (d*d for matrices).
  std::size_t dimension() const;
  // Number of real coordinates.
  std::size_t real_dimension() const { return dimension() * (field_ == Field::Complex ? 2 : 1); }
  std::size_t matrix_order() const { return size_; }

  double norm(std::span<const cplx> x) const;
  // Norm of the dual space under the bilinear pairing <s, x> = sum s_i x_i.
  double dual_norm(std::span<const cplx> s) const;

  // Throws InvalidArgument on dimension mismatch, non-finite entries, or a
  // nonzero imaginary part in a real space.
  void check(std::span<const cplx> x) const;

  std::string describe() const;

  friend bool operator==(const FiniteNormedSpace&, const FiniteNormedSpace&) = default;

 private:
  FiniteNormedSpace(SpaceKind kind, double p, std::size_t size, Field field)
      : kind_(kind), p_(p), size_(size), field_(field) {}

  SpaceKind kind_;
  double p_;
  std::size_t size_;
  Field field_;
};

// Free-function form of FiniteNormedSpace::norm.
double norm(const FiniteNormedSpace& space, std::span<const cplx> x);

// Pairing of a dual element with a vector: sum s_i x_i.
cplx pair(std::span<const cplx> s, std::span<const cplx> x);

// A dual element phi with dual norm at most 1 and phi(y) = norm(y) up to
// rounding. Zero for y = 0.
Vec norming_functional(const FiniteNormedSpace& space, std::span<const cplx> y);

// Ordered probe set in one space. Labels are optional integer annotations,
// such as the iterate index of an orbit vector.
class VectorFamily {
 public:
  VectorFamily(FiniteNormedSpace space, std::vector<Vec> vectors, std::vector<long long> labels = {});

  const FiniteNormedSpace& space() const { return space_; }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const std::vector<long long>& labels() const { return labels_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const Vec& operator[](std::size_t i) const { return vectors_[i]; }

  VectorFamily subfamily(std::span<const std::size_t> indices) const;
  VectorFamily scaled(double t) const;

 private:
  FiniteNormedSpace space_;
  std::vector<Vec> vectors_;
  std::vector<long long> labels_;
};

// A dual-ball element: coefficients in the dual representation plus a bound
// on its dual norm.
struct Functional {
  Vec coefficients;
  double dual_norm_bound = 1.0;

  cplx operator()(std::span<const cplx> x) const { return pair(coefficients, x); }
};

}  // namespace calab::normed
