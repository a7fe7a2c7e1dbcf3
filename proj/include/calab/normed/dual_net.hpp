#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "calab/normed/space.hpp"

namespace calab::normed {

inline constexpr std::size_t kNetMaxRealDimension = 4;

// A finite net of the dual unit ball together with its covering certificate.
//
// The dual ball is sampled on the grid h*Z^D (D real coordinates). Grid points
// inside the ball are kept, and grid points just outside (dual norm at most
// 1 + h*kappa/2) are radially projected onto the sphere. Every point of the ball
// is then within h*kappa of a sample, where kappa is the largest dual norm of a
// {-1,+1} real coordinate pattern. The greedy cover places every sample within
// `mesh` of a chosen functional, so the whole ball is within
// covering_radius = mesh + h*kappa.
struct DualBallNet {
  std::vector<Functional> functionals;
  double mesh = 0.0;
  double sample_spacing = 0.0;
  double covering_radius = 0.0;
  std::size_t sample_count = 0;
};

struct NetOptions {
  // Grid spacing. When unset the largest power of two with h*kappa <= mesh/8
  // is used, coarsened as needed to stay within max_samples.
  std::optional<double> sample_spacing;
  std::size_t max_samples = 12000;
};

// Greedy net: repeatedly take the lexicographically first uncovered sample and
// cover it with the sample (within mesh of it) that covers the most uncovered
// samples, lowest index on ties.
// Throws GuardExceeded when the dual ball has more than kNetMaxRealDimension
// real dimensions, InvalidArgument when mesh <= 0.
DualBallNet dual_ball_net(const FiniteNormedSpace& space, double mesh, const NetOptions& options = {});

// Largest dual norm over real coordinate patterns in {-1, +1}^D.
double grid_box_dual_norm(const FiniteNormedSpace& space);

}  // namespace calab::normed
