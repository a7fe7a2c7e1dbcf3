#pragma once

#include <cstddef>

#include "calab/l1/basis_constants.hpp"
#include "calab/normed/dual_net.hpp"

namespace calab::approx {

enum class RcKind { UpperViaNet, LowerViaL1 };

const char* to_string(RcKind kind);

// A bound on the contractive-approximation rank. UpperViaNet: value is the
// dual-ball net size d (so rc <= d). LowerViaL1: value is a lower bound on
// log rc in units of the constant a.
struct RcBound {
  RcKind kind = RcKind::UpperViaNet;
  double value = 1.0;
  double delta = 0.0;
  double a = 1.0;
  std::size_t family_size = 0;
  // UpperViaNet
  std::size_t net_size = 1;
  double mesh = 0.0;
  double covering_radius = 0.0;
  // LowerViaL1
  double upper_constant = 0.0;
  l1::Interval lower_constant;
};

// Net size of the dual ball at a covering radius just below delta / max ||x||:
// evaluation at the net followed by a partition of unity approximates every
// x in omega within delta. Returns 1 when delta exceeds every norm in omega.
RcBound rc_upper(const normed::FiniteNormedSpace& space, const normed::VectorFamily& omega, double delta,
                 const normed::NetOptions& net = {});

// n a ||gamma||^-2 (lower.lo - delta)^2 for the n vectors of the family.
// Throws HypothesisNotMet when delta >= lower.lo.
RcBound rc_lower(const normed::VectorFamily& family, double delta, double a = 1.0, double mesh = 1e-3,
                 const l1::LowerOptions& options = {});

}  // namespace calab::approx
