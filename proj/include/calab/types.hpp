#pragma once

#include <complex>
#include <vector>

namespace calab {

using cplx = std::complex<double>;

// Coordinate array of a vector. Real spaces keep the imaginary parts at zero.
using Vec = std::vector<cplx>;

enum class Field { Real, Complex };

inline const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

}  // namespace calab
