#pragma once

#include <cstddef>
#include <string>

#include "calab/normed/space.hpp"

namespace calab::l1 {

enum class Certificate { Analytic, LipschitzGrid, Exhaustive };

const char* to_string(Certificate c);

// Certified enclosure [lo, hi] of a real quantity. For LipschitzGrid, mesh is
// the l1 covering radius of the coefficient grid actually used and lipschitz
// the constant applied to it. clamped is set when the grid correction pushed
// lo below zero.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  Certificate certificate = Certificate::Analytic;
  double mesh = 0.0;
  double lipschitz = 0.0;
  bool clamped = false;

  bool contains(double v, double slack = 0.0) const { return lo - slack <= v && v <= hi + slack; }
  double width() const { return hi - lo; }
};

struct BasisConstants {
  double upper = 0.0;
  Interval lower;
  Interval equivalence;  // hi is +inf when lower.lo == 0
};

struct LowerOptions {
  // Cap on coefficient grid points summed over faces; the mesh is doubled
  // until the grid fits.
  std::size_t grid_budget = std::size_t{1} << 24;
  // Frank-Wolfe steps per face, from the barycenter.
  std::size_t fw_iterations = 32;
};

// max_i norm(x_i). Throws InvalidArgument for an empty family.
double upper_basis_constant(const normed::VectorFamily& family);

// Enclosure of min { norm(sum c_i x_i) : sum |c_i| = 1 }.
//
// Real field: one convex problem per sign pattern (first sign fixed to +1),
// each solved over the simplex on the grid k/N with N the smallest power of
// two whose l1 covering radius is at most mesh. Every dyadic sub-grid yields
// "grid minimum - L * radius" as a lower bound (L = max norm), and every
// norming functional phi at a probe point yields min_i Re phi(s_i x_i). The
// face bound is the largest of these; hi is the smallest value seen.
// Complex field: the sign patterns become a phase grid of P points per
// coefficient (theta_0 = 0) and the bound for each dyadic phase sub-grid is
// reduced by L * pi / P.
// Exact-duplicate (up to a unimodular factor), zero-vector, single-vector,
// and disjoint-support l_p/sup families are resolved analytically.
Interval lower_basis_constant(const normed::VectorFamily& family, double mesh, const LowerOptions& options = {});

// upper / lower with endpoints divided crosswise. Throws NotAnIsomorphism
// when lower.hi == 0.
Interval equivalence_constant(const normed::VectorFamily& family, double mesh, const LowerOptions& options = {});

BasisConstants basis_constants(const normed::VectorFamily& family, double mesh, const LowerOptions& options = {});

enum class Decision { Certified, Refuted, Undecided };

// Decides whether the lower basis constant is at least threshold without
// computing a full enclosure: Frank-Wolfe probes first, then dyadic grids up to
// the budget. Refuted comes with a coefficient point whose value is below the
// threshold.
struct ThresholdResult {
  Decision decision = Decision::Undecided;
  double best_value = 0.0;  // smallest combination norm seen
  double best_bound = 0.0;  // certified lower bound reached
};

ThresholdResult certify_lower_at_least(const normed::VectorFamily& family, double threshold, double mesh,
                                       const LowerOptions& options = {});

}  // namespace calab::l1
