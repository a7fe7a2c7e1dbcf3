#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "calab/normed/space.hpp"

namespace calab::approx {

// A norm-preserving linear map on a finite truncation, iterated by hc_growth.
class IsometrySystem {
 public:
  IsometrySystem(normed::FiniteNormedSpace space, std::string name, std::function<Vec(const Vec&)> step)
      : space_(space), name_(std::move(name)), step_(std::move(step)) {}

  const normed::FiniteNormedSpace& space() const { return space_; }
  const std::string& name() const { return name_; }
  Vec apply(const Vec& x) const { return step_(x); }

 private:
  normed::FiniteNormedSpace space_;
  std::string name_;
  std::function<Vec(const Vec&)> step_;
};

IsometrySystem identity_system(const normed::FiniteNormedSpace& space);

// e_k -> e_{k+t mod W} on an l_p or sup space of W coordinates.
IsometrySystem cyclic_shift(const normed::FiniteNormedSpace& space, long long t = 1);

// (alpha x)(s) = lambda(s) x(sigma(s)) on an l_p or sup space. sigma must be a
// permutation of [0, W) and every |lambda(s)| must be 1.
IsometrySystem permutation_phase(const normed::FiniteNormedSpace& space, std::vector<std::size_t> sigma,
                                 std::vector<cplx> lambda);

}  // namespace calab::approx
