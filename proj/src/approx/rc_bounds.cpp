#include "calab/approx/rc_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "calab/error.hpp"

namespace calab::approx {

const char* to_string(RcKind kind) { return kind == RcKind::UpperViaNet ? "upper-via-net" : "lower-via-l1"; }

RcBound rc_upper(const normed::FiniteNormedSpace& space, const normed::VectorFamily& omega, double delta,
                 const normed::NetOptions& net) {
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (omega.empty()) throw InvalidArgument("empty probe set");
  if (!(omega.space() == space)) throw InvalidArgument("probe set lives in a different space");
  RcBound b;
  b.kind = RcKind::UpperViaNet;
  b.delta = delta;
  b.family_size = omega.size();
  double M = 0.0;
  for (const auto& x : omega.vectors()) M = std::max(M, space.norm(x));
  if (delta > M) {
    b.value = 1.0;
    b.net_size = 1;
    return b;
  }
  if (space.real_dimension() > normed::kNetMaxRealDimension)
    throw GuardExceeded("rc_upper: real dimension exceeds " + std::to_string(normed::kNetMaxRealDimension));
  // Covering radius r strictly below delta / M, split as mesh + h * kappa with
  // h a power of two no larger than r / (9 kappa).
  const double r = delta / M * (1.0 - 1e-9);
  const double kappa = normed::grid_box_dual_norm(space);
  double h = 1.0;
  while (h * kappa > r / 9.0) h *= 0.5;
  normed::NetOptions opts = net;
  normed::DualBallNet result;
  while (true) {
    opts.sample_spacing = h;
    try {
      result = normed::dual_ball_net(space, r - h * kappa, opts);
      break;
    } catch (const GuardExceeded&) {
      // Too many samples: trade sample spacing for mesh while the mesh stays positive.
      if (2.0 * h * kappa >= r / 2.0) throw;
      h *= 2.0;
    }
  }
  b.net_size = result.functionals.size();
  b.value = static_cast<double>(b.net_size);
  b.mesh = result.mesh;
  b.covering_radius = result.covering_radius;
  return b;
}

RcBound rc_lower(const normed::VectorFamily& family, double delta, double a, double mesh,
                 const l1::LowerOptions& options) {
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (!(a > 0.0)) throw InvalidArgument("a must be positive");
  RcBound b;
  b.kind = RcKind::LowerViaL1;
  b.delta = delta;
  b.a = a;
  b.family_size = family.size();
  b.upper_constant = l1::upper_basis_constant(family);
  b.lower_constant = l1::lower_basis_constant(family, mesh, options);
  if (!(delta < b.lower_constant.lo))
    throw HypothesisNotMet("delta must be below the certified lower basis constant " +
                           std::to_string(b.lower_constant.lo));
  const double gap = b.lower_constant.lo - delta;
  b.value = static_cast<double>(family.size()) * a * gap * gap / (b.upper_constant * b.upper_constant);
  return b;
}

}  // namespace calab::approx
