#include "calab/normed/dual_net.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "calab/error.hpp"

namespace calab::normed {
namespace {

using RealPoint = std::vector<double>;

Vec to_coordinates(const FiniteNormedSpace& space, const RealPoint& p) {
  Vec v(space.dimension());
  if (space.field() == Field::Real) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(p[i], 0.0);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(p[2 * i], p[2 * i + 1]);
  }
  return v;
}

double dual_distance(const FiniteNormedSpace& space, const RealPoint& a, const RealPoint& b, Vec& scratch) {
  const std::size_t n = space.dimension();
  const bool complex = space.field() == Field::Complex;
  if (space.kind() != SpaceKind::MatrixSpectral) {
    const double q = space.kind() == SpaceKind::SupOverPoints
                         ? 1.0
                         : (space.p() == 1.0 ? kInf : (std::isinf(space.p()) ? 1.0 : space.p() / (space.p() - 1.0)));
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = complex ? std::hypot(a[2 * i] - b[2 * i], a[2 * i + 1] - b[2 * i + 1]) : std::fabs(a[i] - b[i]);
      if (q == 1.0)
        acc += m;
      else if (std::isinf(q))
        acc = std::max(acc, m);
      else if (q == 2.0)
        acc += m * m;
      else
        acc += std::pow(m, q);
    }
    if (q == 1.0 || std::isinf(q)) return acc;
    if (q == 2.0) return std::sqrt(acc);
    return std::pow(acc, 1.0 / q);
  }
  for (std::size_t i = 0; i < n; ++i)
    scratch[i] = complex ? cplx(a[2 * i] - b[2 * i], a[2 * i + 1] - b[2 * i + 1]) : cplx(a[i] - b[i], 0.0);
  return space.dual_norm(scratch);
}

// Samples of the dual ball on the grid h*Z^D, sorted lexicographically.
std::vector<RealPoint> sample_ball(const FiniteNormedSpace& space, double h, double kappa, std::size_t cap,
                                   bool& over_cap) {
  const std::size_t dim = space.real_dimension();
  const double outer = 1.0 + 0.5 * h * kappa;
  const long long kmax = static_cast<long long>(std::floor(outer / h));
  std::vector<RealPoint> out;
  std::vector<long long> idx(dim, -kmax);
  RealPoint p(dim);
  over_cap = false;
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) p[i] = static_cast<double>(idx[i]) * h;
    const double r = space.dual_norm(to_coordinates(space, p));
    if (r <= 1.0) {
      out.push_back(p);
    } else if (r <= outer) {
      RealPoint q = p;
      for (auto& c : q) c /= r;
      out.push_back(std::move(q));
    }
    if (out.size() > cap) {
      over_cap = true;
      return {};
    }
    std::size_t d = dim;
    while (d > 0) {
      --d;
      if (++idx[d] <= kmax) break;
      idx[d] = -kmax;
      if (d == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
  return out;
}

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

double grid_box_dual_norm(const FiniteNormedSpace& space) {
  const std::size_t dim = space.real_dimension();
  if (dim > 16) throw GuardExceeded("grid_box_dual_norm: too many real coordinates");
  double best = 0.0;
  RealPoint p(dim);
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    for (std::size_t i = 0; i < dim; ++i) p[i] = (mask >> i) & 1u ? -1.0 : 1.0;
    best = std::max(best, space.dual_norm(to_coordinates(space, p)));
  }
  return best;
}

DualBallNet dual_ball_net(const FiniteNormedSpace& space, double mesh, const NetOptions& options) {
  if (!(mesh > 0.0) || !std::isfinite(mesh)) throw InvalidArgument("dual_ball_net: mesh must be positive");
  const std::size_t dim = space.real_dimension();
  if (dim > kNetMaxRealDimension)
    throw GuardExceeded("dual_ball_net: dual ball has " + std::to_string(dim) + " real dimensions (limit 4)");

  const double kappa = grid_box_dual_norm(space);
  double h;
  if (options.sample_spacing) {
    h = *options.sample_spacing;
    if (!(h > 0.0)) throw InvalidArgument("dual_ball_net: sample spacing must be positive");
  } else {
    h = std::exp2(std::floor(std::log2(mesh / (8.0 * kappa))));
    h = std::min(h, 0.5);
  }

  std::vector<RealPoint> samples;
  while (true) {
    bool over = false;
    samples = sample_ball(space, h, kappa, options.max_samples, over);
    if (!over) break;
    if (options.sample_spacing) throw GuardExceeded("dual_ball_net: sample spacing yields too many samples");
    h *= 2.0;
  }

  const std::size_t s = samples.size();
  std::vector<Bitset> adj(s, Bitset(s));
  Vec scratch(space.dimension());
  const double reach = mesh + 1e-12;
  for (std::size_t i = 0; i < s; ++i) {
    adj[i].set(i);
    for (std::size_t j = i + 1; j < s; ++j) {
      if (dual_distance(space, samples[i], samples[j], scratch) <= reach) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }

  Bitset uncovered(s);
  for (std::size_t i = 0; i < s; ++i) uncovered.set(i);
  auto gain = [&](std::size_t c) {
    std::size_t g = 0;
    const auto& a = adj[c].words();
    const auto& u = uncovered.words();
    for (std::size_t w = 0; w < a.size(); ++w) g += static_cast<std::size_t>(std::popcount(a[w] & u[w]));
    return g;
  };

  DualBallNet net;
  net.mesh = mesh;
  net.sample_spacing = h;
  net.covering_radius = mesh + h * kappa;
  net.sample_count = s;
  std::size_t first = 0;
  while (true) {
    while (first < s && !uncovered.test(first)) ++first;
    if (first == s) break;
    std::size_t best = first;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < s; ++c) {
      if (!adj[first].test(c)) continue;
      const std::size_t g = gain(c);
      if (g > best_gain) {
        best_gain = g;
        best = c;
      }
    }
    auto& u = uncovered.words();
    const auto& a = adj[best].words();
    for (std::size_t w = 0; w < u.size(); ++w) u[w] &= ~a[w];
    Functional f;
    f.coefficients = to_coordinates(space, samples[best]);
    f.dual_norm_bound = space.dual_norm(f.coefficients);
    net.functionals.push_back(std::move(f));
  }
  return net;
}

}  // namespace calab::normed
