#include "calab/l1/basis_constants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "calab/error.hpp"
#include "calab/parallel.hpp"

namespace calab::l1 {

using normed::FiniteNormedSpace;
using normed::SpaceKind;
using normed::VectorFamily;

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::Analytic:
      return "analytic";
    case Certificate::LipschitzGrid:
      return "lipschitz-grid";
    case Certificate::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](cplx z) { return z == 0.0; });
}

// b == lambda * a for some |lambda| = 1.
bool unimodular_multiple(const Vec& a, const Vec& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0.0) ++k;
  if (k == a.size()) return is_zero(b);
  if (std::abs(std::abs(b[k]) - std::abs(a[k])) > 0.0) return false;
  const cplx lambda = b[k] / a[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(b[i] - lambda * a[i]) > 1e-15 * (std::abs(a[i]) + std::abs(b[i]))) return false;
  return true;
}

Interval exact(double v) {
  Interval iv;
  iv.lo = iv.hi = v;
  iv.certificate = Certificate::Analytic;
  return iv;
}

// Closed forms: a single vector, a zero vector, two vectors equal up to a
// unimodular factor, and disjoint supports in l_p or sup, where
// min sum |c_i| a_i e_i over the l1 sphere is (sum a_i^-q)^(-1/q).
std::optional<Interval> analytic(const VectorFamily& f) {
  const auto& xs = f.vectors();
  const auto& space = f.space();
  if (xs.size() == 1) return exact(space.norm(xs[0]));
  for (const auto& x : xs)
    if (is_zero(x)) return exact(0.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (unimodular_multiple(xs[i], xs[j])) return exact(0.0);
  if (space.kind() == SpaceKind::MatrixSpectral) return std::nullopt;
  std::vector<int> owner(space.dimension(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < xs[i].size(); ++k) {
      if (xs[i][k] == 0.0) continue;
      if (owner[k] >= 0) return std::nullopt;
      owner[k] = static_cast<int>(i);
    }
  }
  const double p = space.kind() == SpaceKind::Lp ? space.p() : normed::kInf;
  std::vector<double> a;
  for (const auto& x : xs) a.push_back(space.norm(x));
  if (p == 1.0) return exact(*std::min_element(a.begin(), a.end()));
  if (std::isinf(p)) {
    double s = 0.0;
    for (double ai : a) s += 1.0 / ai;
    return exact(1.0 / s);
  }
  const double q = p / (p - 1.0);
  const double amin = *std::min_element(a.begin(), a.end());
  double s = 0.0;
  for (double ai : a) s += std::pow(amin / ai, q);
  return exact(amin * std::pow(s, -1.0 / q));
}

// l1 covering radius of the grid {k/N} on the n-simplex is c_n / N.
double simplex_radius(std::size_t n) {
  const double lo = static_cast<double>(n / 2), hi = static_cast<double>((n + 1) / 2);
  return 2.0 * lo * hi / static_cast<double>(n);
}

double simplex_points(std::size_t n, std::size_t N) {
  // C(N + n - 1, n - 1)
  double r = 1.0;
  for (std::size_t i = 1; i < n; ++i) r = r * static_cast<double>(N + i) / static_cast<double>(i);
  return r;
}

std::size_t pow2_at_least(double x) {
  std::size_t v = 1;
  while (static_cast<double>(v) < x) v <<= 1;
  return v;
}

// Odometer over compositions of N into k.size() parts, lexicographic in the
// leading parts.
bool next_composition(std::vector<std::size_t>& k, std::size_t N, std::size_t& lead_sum) {
  if (k.size() < 2) return false;
  for (std::size_t j = k.size() - 1; j-- > 0;) {
    if (lead_sum < N) {
      ++k[j];
      ++lead_sum;
      k.back() = N - lead_sum;
      return true;
    }
    lead_sum -= k[j];
    k[j] = 0;
  }
  return false;
}

struct Probe {
  double value = 0.0;
  double bound = 0.0;
};

struct LevelResult {
  std::size_t N = 1;
  double min = std::numeric_limits<double>::infinity();
  std::vector<double> argmin;
};

// min over the simplex of norm(sum w_i v_i), a convex problem.
class Face {
 public:
  Face(const FiniteNormedSpace& space, std::vector<Vec> v, double L)
      : space_(space), v_(std::move(v)), L_(L), y_(space.dimension()) {}

  std::size_t size() const { return v_.size(); }

  double value(const std::vector<double>& w) {
    combine(w);
    return space_.norm(y_);
  }

  // Value at w and the weak-duality bound min_i Re phi(v_i) from the norming
  // functional phi of the combination at w.
  Probe probe(const std::vector<double>& w, std::size_t* argmin_vertex = nullptr) {
    combine(w);
    Probe pr;
    pr.value = space_.norm(y_);
    const Vec phi = normed::norming_functional(space_, y_);
    pr.bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const double b = normed::pair(phi, v_[i]).real();
      if (b < pr.bound) {
        pr.bound = b;
        if (argmin_vertex) *argmin_vertex = i;
      }
    }
    return pr;
  }

  std::vector<double> barycenter() const { return std::vector<double>(v_.size(), 1.0 / static_cast<double>(v_.size())); }

  // Frank-Wolfe with step 2/(t+2). The callback sees every probe and returns
  // true to stop.
  template <class Stop>
  void frank_wolfe(std::size_t iterations, Stop&& stop) {
    std::vector<double> w = barycenter();
    for (std::size_t t = 0; t <= iterations; ++t) {
      std::size_t vertex = 0;
      const Probe pr = probe(w, &vertex);
      if (stop(pr)) return;
      const double gamma = 2.0 / (static_cast<double>(t) + 2.0);
      for (auto& wi : w) wi *= 1.0 - gamma;
      w[vertex] += gamma;
    }
  }

  // Minimum on the grid k/N and on each dyadic sub-grid k/(N/2^u).
  std::vector<LevelResult> grid(std::size_t N) {
    const std::size_t n = v_.size();
    const int depth = std::countr_zero(N);
    std::vector<double> min_at(depth + 1, std::numeric_limits<double>::infinity());
    std::vector<std::vector<std::size_t>> arg_at(depth + 1);
    std::vector<std::size_t> k(n, 0);
    k.back() = N;
    std::size_t lead = 0;
    std::vector<double> w(n);
    do {
      int t = depth;
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = static_cast<double>(k[i]) / static_cast<double>(N);
        if (k[i] != 0) t = std::min(t, std::countr_zero(k[i]));
      }
      combine(w);
      const double g = space_.norm(y_);
      if (g < min_at[t]) {
        min_at[t] = g;
        arg_at[t] = k;
      }
    } while (next_composition(k, N, lead));

    std::vector<LevelResult> levels(depth + 1);
    double best = std::numeric_limits<double>::infinity();
    const std::vector<std::size_t>* best_k = nullptr;
    for (int u = depth; u >= 0; --u) {
      // Enumeration is lexicographic and strict improvements only, so the
      // earliest minimizer wins within a depth; across depths prefer the
      // lexicographically smaller point on ties.
      if (min_at[u] < best || (min_at[u] == best && best_k && arg_at[u] < *best_k)) {
        best = min_at[u];
        best_k = &arg_at[u];
      }
      auto& lv = levels[u];
      lv.N = N >> u;
      lv.min = best;
      lv.argmin.resize(n);
      for (std::size_t i = 0; i < n; ++i) lv.argmin[i] = static_cast<double>((*best_k)[i]) / static_cast<double>(N);
    }
    return levels;
  }

  double lipschitz() const { return L_; }

 private:
  void combine(const std::vector<double>& w) {
    std::fill(y_.begin(), y_.end(), cplx{});
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (w[i] == 0.0) continue;
      const auto& vi = v_[i];
      for (std::size_t d = 0; d < y_.size(); ++d) y_[d] += w[i] * vi[d];
    }
  }

  const FiniteNormedSpace& space_;
  std::vector<Vec> v_;
  double L_;
  Vec y_;
};

struct FaceBounds {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

FaceBounds solve_face(Face& face, std::size_t N, std::size_t fw_iterations) {
  FaceBounds fb;
  const double cn = simplex_radius(face.size());
  face.frank_wolfe(fw_iterations, [&](const Probe& pr) {
    fb.lo = std::max(fb.lo, pr.bound);
    fb.hi = std::min(fb.hi, pr.value);
    return fb.lo >= fb.hi;
  });
  for (const auto& lv : face.grid(N)) {
    fb.lo = std::max(fb.lo, lv.min - face.lipschitz() * cn / static_cast<double>(lv.N));
    fb.hi = std::min(fb.hi, lv.min);
    const Probe pr = face.probe(lv.argmin);
    fb.lo = std::max(fb.lo, pr.bound);
  }
  return fb;
}

struct GridPlan {
  std::size_t N = 1;  // simplex grid
  std::size_t P = 1;  // phase grid (complex field)
  double faces = 1.0;
  double radius = 0.0;  // covering radius in coefficient l1 distance
};

GridPlan plan_grid(std::size_t n, Field field, double mesh, std::size_t budget) {
  const double cn = simplex_radius(n);
  for (double m = mesh;; m *= 2.0) {
    GridPlan g;
    g.N = cn == 0.0 ? 1 : pow2_at_least(cn / m);
    if (field == Field::Real) {
      g.faces = std::ldexp(1.0, static_cast<int>(n) - 1);
      g.radius = cn / static_cast<double>(g.N);
    } else {
      g.P = pow2_at_least(kPi / m);
      g.faces = std::pow(static_cast<double>(g.P), static_cast<double>(n - 1));
      g.radius = cn / static_cast<double>(g.N) + kPi / static_cast<double>(g.P);
    }
    const double total = g.faces * simplex_points(n, g.N);
    if (total <= static_cast<double>(budget)) return g;
    if (g.N == 1 && g.P == 1) throw GuardExceeded("coefficient grid exceeds the point budget even at the coarsest mesh");
  }
}

std::vector<Vec> signed_vectors(const std::vector<Vec>& xs, std::size_t pattern) {
  std::vector<Vec> v = xs;
  for (std::size_t i = 1; i < v.size(); ++i)
    if ((pattern >> (i - 1)) & 1u)
      for (auto& z : v[i]) z = -z;
  return v;
}

std::vector<Vec> phased_vectors(const std::vector<Vec>& xs, std::size_t index, std::size_t P,
                                std::vector<std::size_t>& phase_idx) {
  std::vector<Vec> v = xs;
  phase_idx.assign(xs.size() - 1, 0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    phase_idx[i - 1] = index % P;
    index /= P;
    const double theta = 2.0 * kPi * static_cast<double>(phase_idx[i - 1]) / static_cast<double>(P);
    const cplx e = std::polar(1.0, theta);
    for (auto& z : v[i]) z *= e;
  }
  return v;
}

void require_family(const VectorFamily& f) {
  if (f.empty()) throw InvalidArgument("empty family");
}

}  // namespace

double upper_basis_constant(const VectorFamily& family) {
  require_family(family);
  double u = 0.0;
  for (const auto& x : family.vectors()) u = std::max(u, family.space().norm(x));
  return u;
}

Interval lower_basis_constant(const VectorFamily& family, double mesh, const LowerOptions& options) {
  require_family(family);
  if (!(mesh > 0.0)) throw InvalidArgument("mesh must be positive");
  if (auto iv = analytic(family)) return *iv;

  const auto& space = family.space();
  const auto& xs = family.vectors();
  const std::size_t n = xs.size();
  const double L = upper_basis_constant(family);
  const GridPlan plan = plan_grid(n, space.field(), mesh, options.grid_budget);
  const auto faces = static_cast<std::size_t>(plan.faces);

  std::vector<FaceBounds> bounds(faces);
  std::vector<int> phase_depth(faces, 0);
  parallel_for(faces, [&](std::size_t f) {
    std::vector<Vec> v;
    if (space.field() == Field::Real) {
      v = signed_vectors(xs, f);
    } else {
      std::vector<std::size_t> idx;
      v = phased_vectors(xs, f, plan.P, idx);
      int t = std::countr_zero(plan.P);
      for (std::size_t j : idx)
        if (j != 0) t = std::min(t, std::countr_zero(j));
      phase_depth[f] = t;
    }
    Face face(space, std::move(v), L);
    bounds[f] = solve_face(face, plan.N, options.fw_iterations);
  });

  Interval iv;
  iv.certificate = Certificate::LipschitzGrid;
  iv.mesh = plan.radius;
  iv.lipschitz = L;
  iv.hi = std::numeric_limits<double>::infinity();
  for (const auto& b : bounds) iv.hi = std::min(iv.hi, b.hi);
  if (space.field() == Field::Real) {
    iv.lo = std::numeric_limits<double>::infinity();
    for (const auto& b : bounds) iv.lo = std::min(iv.lo, b.lo);
  } else {
    // Phase sub-grid of P/2^u points per coefficient: every phase vector is
    // within pi/(P/2^u) of one of its members in each coordinate.
    const int depth = std::countr_zero(plan.P);
    std::vector<double> min_at(depth + 1, std::numeric_limits<double>::infinity());
    for (std::size_t f = 0; f < faces; ++f) min_at[phase_depth[f]] = std::min(min_at[phase_depth[f]], bounds[f].lo);
    iv.lo = -std::numeric_limits<double>::infinity();
    double running = std::numeric_limits<double>::infinity();
    for (int u = depth; u >= 0; --u) {
      running = std::min(running, min_at[u]);
      const double Pu = static_cast<double>(plan.P >> u);
      iv.lo = std::max(iv.lo, running - L * kPi / Pu);
    }
  }
  if (iv.lo < 0.0) {
    iv.lo = 0.0;
    iv.clamped = true;
  }
  iv.lo = std::min(iv.lo, iv.hi);
  return iv;
}

Interval equivalence_constant(const VectorFamily& family, double mesh, const LowerOptions& options) {
  return basis_constants(family, mesh, options).equivalence;
}

BasisConstants basis_constants(const VectorFamily& family, double mesh, const LowerOptions& options) {
  BasisConstants bc;
  bc.upper = upper_basis_constant(family);
  bc.lower = lower_basis_constant(family, mesh, options);
  if (bc.lower.hi == 0.0) throw NotAnIsomorphism("lower basis constant is zero: the family is degenerate");
  bc.equivalence = bc.lower;
  bc.equivalence.lo = bc.upper / bc.lower.hi;
  bc.equivalence.hi = bc.lower.lo > 0.0 ? bc.upper / bc.lower.lo : std::numeric_limits<double>::infinity();
  return bc;
}

ThresholdResult certify_lower_at_least(const VectorFamily& family, double threshold, double mesh,
                                       const LowerOptions& options) {
  require_family(family);
  ThresholdResult r;
  if (auto iv = analytic(family)) {
    r.best_value = iv->hi;
    r.best_bound = iv->lo;
    r.decision = iv->lo >= threshold ? Decision::Certified : Decision::Refuted;
    return r;
  }
  const auto& space = family.space();
  if (space.field() == Field::Complex) {
    const Interval iv = lower_basis_constant(family, mesh, options);
    r.best_value = iv.hi;
    r.best_bound = iv.lo;
    r.decision = iv.lo >= threshold ? Decision::Certified : iv.hi < threshold ? Decision::Refuted : Decision::Undecided;
    return r;
  }

  const auto& xs = family.vectors();
  const std::size_t n = xs.size();
  const double L = upper_basis_constant(family);
  const GridPlan plan = plan_grid(n, Field::Real, mesh, options.grid_budget);
  const auto faces = static_cast<std::size_t>(plan.faces);
  const double cn = simplex_radius(n);
  r.best_value = std::numeric_limits<double>::infinity();
  r.best_bound = std::numeric_limits<double>::infinity();
  bool undecided = false;
  for (std::size_t f = 0; f < faces; ++f) {
    Face face(space, signed_vectors(xs, f), L);
    double lo = -std::numeric_limits<double>::infinity();
    bool refuted = false;
    face.frank_wolfe(options.fw_iterations, [&](const Probe& pr) {
      lo = std::max(lo, pr.bound);
      r.best_value = std::min(r.best_value, pr.value);
      refuted = pr.value < threshold;
      return refuted || lo >= threshold;
    });
    for (std::size_t N = 1; !refuted && lo < threshold && N <= plan.N; N <<= 1) {
      const auto levels = face.grid(N);
      const auto& fine = levels.front();
      r.best_value = std::min(r.best_value, fine.min);
      if (fine.min < threshold) {
        refuted = true;
        break;
      }
      lo = std::max(lo, fine.min - L * cn / static_cast<double>(N));
      lo = std::max(lo, face.probe(fine.argmin).bound);
    }
    r.best_bound = std::min(r.best_bound, lo);
    if (refuted) {
      r.decision = Decision::Refuted;
      return r;
    }
    if (lo < threshold) undecided = true;
  }
  r.decision = undecided ? Decision::Undecided : Decision::Certified;
  return r;
}

}  // namespace calab::l1
