#include "calab/isometry/corroborate.hpp"

#include <cmath>
#include <numbers>

#include "calab/error.hpp"

namespace calab::isometry {

const char* to_string(SequenceSpace s) { return s == SequenceSpace::L1 ? "l1" : "linf"; }

namespace {

using normed::FiniteNormedSpace;
using normed::VectorFamily;

struct Window {
  Truncation trunc;
  std::vector<cplx> lambda;
  std::size_t size() const { return lambda.size(); }
  bool agrees(long long s) const { return trunc.agrees[static_cast<std::size_t>(s - trunc.lo)] != 0; }
};

Window make_window(const PermutationSpec& spec, const PhaseSpec& phases, long long lo, long long hi) {
  Window w{truncate(spec, lo, hi), {}};
  for (long long s = lo; s < hi; ++s) w.lambda.push_back(phases.at(s, spec));
  return w;
}

approx::IsometrySystem truncated_system(const Window& w, const FiniteNormedSpace& space) {
  std::vector<std::size_t> sigma;
  for (long long t : w.trunc.image) sigma.push_back(static_cast<std::size_t>(t - w.trunc.lo));
  return approx::permutation_phase(space, std::move(sigma), w.lambda);
}

FiniteNormedSpace space_for(SequenceSpace s, std::size_t dim, Field field) {
  return s == SequenceSpace::L1 ? FiniteNormedSpace::lp(1.0, dim, field) : FiniteNormedSpace::sup(dim, field);
}

std::vector<cplx> circle_points(std::size_t m, Field field) {
  if (field == Field::Real) {
    if (m != 2) throw InvalidArgument("over the reals the phase probes are {e, -e}: m must be 2");
    return {1.0, -1.0};
  }
  std::vector<cplx> out;
  for (std::size_t j = 0; j < m; ++j)
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
  return out;
}

// alpha^j e_k sits at sigma^{-j}(k), so the probe point needs a backward
// chain of n distinct window points on which the truncation is exact.
long long longest_backward_chain(const PermutationSpec& spec, const Window& w, std::size_t& length) {
  const long long lo = w.trunc.lo, hi = w.trunc.hi;
  long long best = lo;
  length = 0;
  for (long long k = lo; k < hi; ++k) {
    std::size_t len = 1;
    long long cur = k;
    while (len < approx::kMaxHorizon) {
      const long long prev = spec.inverse(cur);
      if (prev < lo || prev >= hi || !w.agrees(prev) || prev == k) break;
      cur = prev;
      ++len;
    }
    if (len > length) {
      length = len;
      best = k;
    }
  }
  return best;
}

VectorFamily ell1_probes(const PermutationSpec& spec, const Window& w, const FiniteNormedSpace& space,
                         const CorroborationOptions& opt, std::vector<long long>& support) {
  std::size_t length = 0;
  const long long k = longest_backward_chain(spec, w, length);
  if (length < opt.n_max)
    throw InsufficientWindow("no backward orbit chain of length " + std::to_string(opt.n_max) + " in the window");
  support = {k};
  std::vector<Vec> xs;
  for (cplx omega : circle_points(opt.m, opt.field)) {
    Vec x(w.size(), 0.0);
    x[static_cast<std::size_t>(k - w.trunc.lo)] = omega;
    xs.push_back(std::move(x));
  }
  return VectorFamily(space, std::move(xs));
}

// One orbit segment of length n per word f in m^n, pairwise disjoint, with
// x_j(sigma^k s_f) = conj(lambda(s_f) ... lambda(sigma^{k-1} s_f)) when f(k) = j.
VectorFamily linfty_probes(const PermutationSpec& spec, const Window& w, const FiniteNormedSpace& space,
                           const CorroborationOptions& opt, std::vector<long long>& support) {
  const std::size_t n = opt.n_max, m = opt.m;
  double words = std::pow(static_cast<double>(m), static_cast<double>(n));
  if (words * static_cast<double>(n) > static_cast<double>(w.size()))
    throw InsufficientWindow("window holds fewer than m^n segments of length n");
  const auto count = static_cast<std::size_t>(words);
  const long long lo = w.trunc.lo, hi = w.trunc.hi;
  std::vector<char> used(w.size(), 0);
  std::vector<std::vector<long long>> segments;
  for (long long s = lo; s < hi && segments.size() < count; ++s) {
    std::vector<long long> seg{s};
    bool ok = !used[static_cast<std::size_t>(s - lo)];
    while (ok && seg.size() < n) {
      const long long prev = seg.back();
      const long long next = spec.apply(prev);
      ok = w.agrees(prev) && next >= lo && next < hi && !used[static_cast<std::size_t>(next - lo)] &&
           std::find(seg.begin(), seg.end(), next) == seg.end();
      if (ok) seg.push_back(next);
    }
    if (!ok) continue;
    for (long long p : seg) used[static_cast<std::size_t>(p - lo)] = 1;
    segments.push_back(std::move(seg));
  }
  if (segments.size() < count)
    throw InsufficientWindow("found " + std::to_string(segments.size()) + " disjoint orbit segments of length " +
                             std::to_string(n) + ", need " + std::to_string(count));

  std::vector<Vec> xs(m, Vec(w.size(), 0.0));
  for (std::size_t f = 0; f < count; ++f) {
    const auto& seg = segments[f];
    cplx prod = 1.0;
    std::size_t code = f;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t j = code % m;  // f(k)
      code /= m;
      const auto idx = static_cast<std::size_t>(seg[k] - lo);
      xs[j][idx] = std::conj(prod);
      prod *= w.lambda[idx];
      support.push_back(seg[k]);
    }
  }
  std::sort(support.begin(), support.end());
  return VectorFamily(space, std::move(xs));
}

}  // namespace

CorroborationReport empirical_corroboration(const PermutationSpec& spec, const PhaseSpec& phases, long long lo,
                                            long long hi, double delta, double a,
                                            const CorroborationOptions& opt) {
  if (hi <= lo) throw InvalidArgument("empty window");
  if (hi - lo > kMaxWindow) throw InvalidArgument("window longer than 10^6");
  if (opt.field == Field::Real && !phases.is_real()) throw InvalidArgument("complex phases on a real space");

  CorroborationReport rep;
  rep.space = opt.space;
  rep.classification = opt.space == SequenceSpace::L1 ? classify_ell1(spec) : classify_linfty(spec);

  const Window w = make_window(spec, phases, lo, hi);
  const FiniteNormedSpace space = space_for(opt.space, w.size(), opt.field);
  const approx::IsometrySystem system = truncated_system(w, space);

  if (rep.classification.verdict == Verdict::Infinite) {
    if (opt.n_max == 0 || opt.n_max > approx::kMaxHorizon) throw InvalidArgument("n_max outside [1, 24]");
    const VectorFamily omega = opt.space == SequenceSpace::L1 ? ell1_probes(spec, w, space, opt, rep.support)
                                                              : linfty_probes(spec, w, space, opt, rep.support);
    approx::GrowthOptions g;
    g.a = a;
    g.rule = approx::LowerRule::CombPacking;
    rep.growth = approx::hc_growth(system, omega, delta, opt.n_max, approx::GrowthMode::Lower, g);
    rep.corroborated = !rep.growth->rows.empty() && rep.growth->rows.back().normalized > 0.0;
    return rep;
  }

  const long long probe = opt.probe.value_or(lo);
  if (probe < lo || probe >= hi) throw InsufficientWindow("probe point outside the window");
  if (opt.orbit_length == 0) throw InvalidArgument("orbit_length must be positive");
  rep.support = {probe};
  Vec x(w.size(), 0.0);
  x[static_cast<std::size_t>(probe - lo)] = 1.0;
  std::vector<Vec> orbit;
  std::vector<long long> labels;
  for (std::size_t t = 0; t < opt.orbit_length; ++t) {
    orbit.push_back(x);
    labels.push_back(static_cast<long long>(t));
    x = system.apply(x);
  }
  rep.witness = l1::find_l1_witness(VectorFamily(space, std::move(orbit), std::move(labels)), opt.K, opt.density,
                                    opt.witness);
  rep.corroborated = !rep.witness->found;
  return rep;
}

}  // namespace calab::isometry
