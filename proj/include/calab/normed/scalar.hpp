#pragma once

#include <cmath>

#include "calab/types.hpp"

namespace calab::normed {

// A field element. Real scalars never carry an imaginary part.
struct Scalar {
  Field field = Field::Real;
  double re = 0.0;
  double im = 0.0;

  static Scalar real(double v) { return {Field::Real, v, 0.0}; }
  static Scalar complex(double r, double i) { return {Field::Complex, r, i}; }

  double abs() const { return field == Field::Real ? std::fabs(re) : std::hypot(re, im); }
  cplx value() const { return {re, field == Field::Real ? 0.0 : im}; }
};

}  // namespace calab::normed
