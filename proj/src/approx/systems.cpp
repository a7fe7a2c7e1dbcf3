#include "calab/approx/systems.hpp"

#include <cmath>

#include "calab/error.hpp"

namespace calab::approx {

using normed::FiniteNormedSpace;
using normed::SpaceKind;

namespace {

void require_coordinate_space(const FiniteNormedSpace& space) {
  if (space.kind() == SpaceKind::MatrixSpectral)
    throw InvalidArgument("coordinate permutations need an l_p or sup space");
}

}  // namespace

IsometrySystem identity_system(const FiniteNormedSpace& space) {
  return IsometrySystem(space, "identity", [](const Vec& x) { return x; });
}

IsometrySystem cyclic_shift(const FiniteNormedSpace& space, long long t) {
  require_coordinate_space(space);
  const auto w = static_cast<long long>(space.dimension());
  const long long s = ((t % w) + w) % w;
  return IsometrySystem(space, "cyclic-shift(" + std::to_string(t) + ")", [w, s](const Vec& x) {
    Vec y(x.size());
    for (long long k = 0; k < w; ++k) y[static_cast<std::size_t>((k + s) % w)] = x[static_cast<std::size_t>(k)];
    return y;
  });
}

IsometrySystem permutation_phase(const FiniteNormedSpace& space, std::vector<std::size_t> sigma,
                                 std::vector<cplx> lambda) {
  require_coordinate_space(space);
  const std::size_t w = space.dimension();
  if (sigma.size() != w || lambda.size() != w) throw InvalidArgument("permutation and phases must cover the window");
  std::vector<char> hit(w, 0);
  for (std::size_t s : sigma) {
    if (s >= w || hit[s]) throw InvalidArgument("sigma is not a permutation of the window");
    hit[s] = 1;
  }
  for (const auto& l : lambda) {
    if (std::fabs(std::abs(l) - 1.0) > 1e-12) throw InvalidArgument("phases must be unimodular");
    if (space.field() == Field::Real && l.imag() != 0.0) throw InvalidArgument("complex phase on a real space");
  }
  return IsometrySystem(space, "permutation-phase", [sigma = std::move(sigma), lambda = std::move(lambda)](const Vec& x) {
    Vec y(x.size());
    for (std::size_t s = 0; s < x.size(); ++s) y[s] = lambda[s] * x[sigma[s]];
    return y;
  });
}

}  // namespace calab::approx
