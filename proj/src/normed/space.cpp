#include "calab/normed/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "calab/error.hpp"
#include "calab/kernels/kernels.hpp"
#include "calab/normed/matrix.hpp"
#include "calab/normed/spectral.hpp"

namespace calab::normed {
namespace {

double lp_norm(std::span<const cplx> x, double p) {
  const auto& k = kernels::active();
  if (p == 1.0) return k.abs_sum(x.data(), x.size());
  if (p == 2.0) return std::sqrt(k.abs_sq_sum(x.data(), x.size()));
  if (std::isinf(p)) return k.abs_max(x.data(), x.size());
  const double m = k.abs_max(x.data(), x.size());
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& z : x) s += std::pow(std::abs(z) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

// Singular values by one-sided Jacobi on the columns.
std::vector<double> singular_values(Matrix a) {
  const std::size_t n = a.dim();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma{};
        for (std::size_t r = 0; r < n; ++r) {
          alpha += std::norm(a(r, p));
          beta += std::norm(a(r, q));
          gamma += std::conj(a(r, p)) * a(r, q);
        }
        const double g = std::abs(gamma);
        if (g <= 1e-15 * std::sqrt(alpha * beta) || g == 0.0) continue;
        off = std::max(off, g / std::sqrt(alpha * beta));
        const cplx phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < n; ++r) {
          const cplx ap = a(r, p);
          const cplx w = a(r, q) * std::conj(phase);
          a(r, p) = c * ap - s * w;
          a(r, q) = (s * ap + c * w) * phase;
        }
      }
    }
    if (off < 1e-15) break;
  }
  std::vector<double> sv(n);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(a(r, c));
    sv[c] = std::sqrt(s);
  }
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

Matrix as_matrix(std::span<const cplx> x, std::size_t d) { return Matrix(d, std::vector<cplx>(x.begin(), x.end())); }

double trace_norm(std::span<const cplx> s, std::size_t d) {
  if (d == 1) return std::abs(s[0]);
  if (d == 2) {
    double f = 0.0;
    for (const auto& z : s) f += std::norm(z);
    const double det = std::abs(s[0] * s[3] - s[1] * s[2]);
    return std::sqrt(std::max(0.0, f + 2.0 * det));
  }
  double t = 0.0;
  for (double v : singular_values(as_matrix(s, d))) t += v;
  return t;
}

}  // namespace

FiniteNormedSpace FiniteNormedSpace::lp(double p, std::size_t dim, Field field) {
  if (!(p >= 1.0)) throw InvalidArgument("lp space requires p >= 1");
  if (dim == 0) throw InvalidArgument("lp space requires a positive dimension");
  return {SpaceKind::Lp, p, dim, field};
}

FiniteNormedSpace FiniteNormedSpace::sup(std::size_t points, Field field) {
  if (points == 0) throw InvalidArgument("sup space requires at least one point");
  return {SpaceKind::SupOverPoints, kInf, points, field};
}

FiniteNormedSpace FiniteNormedSpace::matrix(std::size_t d, Field field) {
  if (d == 0) throw InvalidArgument("matrix space requires a positive order");
  return {SpaceKind::MatrixSpectral, kInf, d, field};
}

std::size_t FiniteNormedSpace::dimension() const {
  return kind_ == SpaceKind::MatrixSpectral ? size_ * size_ : size_;
}

void FiniteNormedSpace::check(std::span<const cplx> x) const {
  if (x.size() != dimension()) {
    std::ostringstream os;
    os << "dimension mismatch: vector has " << x.size() << " coordinates, " << describe() << " has "
       << dimension();
    throw InvalidArgument(os.str());
  }
  for (const auto& z : x) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidArgument("non-finite vector entry");
    if (field_ == Field::Real && z.imag() != 0.0)
      throw InvalidArgument("complex entry in a real space");
  }
}

double FiniteNormedSpace::norm(std::span<const cplx> x) const {
  check(x);
  switch (kind_) {
    case SpaceKind::Lp:
      return lp_norm(x, p_);
    case SpaceKind::SupOverPoints:
      return kernels::active().abs_max(x.data(), x.size());
    case SpaceKind::MatrixSpectral:
      if (size_ == 1) return std::abs(x[0]);
      if (size_ == 2) {
        // Largest eigenvalue of A A^H = [[p, r], [conj r, q]] in closed form.
        const double p = std::norm(x[0]) + std::norm(x[1]);
        const double q = std::norm(x[2]) + std::norm(x[3]);
        const cplx r = x[0] * std::conj(x[2]) + x[1] * std::conj(x[3]);
        return std::sqrt(0.5 * (p + q + std::hypot(p - q, 2.0 * std::abs(r))));
      }
      return spectral_norm(as_matrix(x, size_)).value;
  }
  return 0.0;
}

double FiniteNormedSpace::dual_norm(std::span<const cplx> s) const {
  if (s.size() != dimension()) throw InvalidArgument("dual element dimension mismatch");
  switch (kind_) {
    case SpaceKind::Lp:
      return lp_norm(s, conjugate_exponent(p_));
    case SpaceKind::SupOverPoints:
      return kernels::active().abs_sum(s.data(), s.size());
    case SpaceKind::MatrixSpectral:
      return trace_norm(s, size_);
  }
  return 0.0;
}

std::string FiniteNormedSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::Lp:
      os << "l_" << (std::isinf(p_) ? std::string("inf") : (std::ostringstream() << p_).str()) << "^" << size_;
      break;
    case SpaceKind::SupOverPoints:
      os << "sup over " << size_ << " points";
      break;
    case SpaceKind::MatrixSpectral:
      os << "M_" << size_ << " spectral";
      break;
  }
  os << " (" << to_string(field_) << ")";
  return os.str();
}

double norm(const FiniteNormedSpace& space, std::span<const cplx> x) { return space.norm(x); }

cplx pair(std::span<const cplx> s, std::span<const cplx> x) {
  if (s.size() != x.size()) throw InvalidArgument("pairing dimension mismatch");
  cplx acc{};
  for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * x[i];
  return acc;
}

Vec norming_functional(const FiniteNormedSpace& space, std::span<const cplx> y) {
  const double ny = space.norm(y);
  Vec phi(y.size());
  if (ny == 0.0) return phi;
  auto unit_conj = [](cplx z) { return std::conj(z) / std::abs(z); };
  switch (space.kind()) {
    case SpaceKind::Lp: {
      const double p = space.p();
      if (p == 1.0) {
        for (std::size_t k = 0; k < y.size(); ++k)
          if (y[k] != 0.0) phi[k] = unit_conj(y[k]);
      } else if (std::isinf(p)) {
        std::vector<std::size_t> ties;
        for (std::size_t k = 0; k < y.size(); ++k)
          if (std::abs(y[k]) >= ny * (1.0 - 1e-14)) ties.push_back(k);
        for (std::size_t k : ties) phi[k] = unit_conj(y[k]) / static_cast<double>(ties.size());
      } else {
        for (std::size_t k = 0; k < y.size(); ++k)
          if (y[k] != 0.0) phi[k] = unit_conj(y[k]) * std::pow(std::abs(y[k]) / ny, p - 1.0);
      }
      break;
    }
    case SpaceKind::SupOverPoints: {
      std::vector<std::size_t> ties;
      for (std::size_t k = 0; k < y.size(); ++k)
        if (std::abs(y[k]) >= ny * (1.0 - 1e-14)) ties.push_back(k);
      for (std::size_t k : ties) phi[k] = unit_conj(y[k]) / static_cast<double>(ties.size());
      break;
    }
    case SpaceKind::MatrixSpectral: {
      const std::size_t d = space.matrix_order();
      if (d == 1) {
        phi[0] = unit_conj(y[0]);
        break;
      }
      const auto est = spectral_norm(as_matrix(y, d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) phi[i * d + j] = std::conj(est.left[i]) * est.right[j];
      break;
    }
  }
  const double dn = space.dual_norm(phi);
  if (dn > 1.0)
    for (auto& z : phi) z /= dn;
  return phi;
}

VectorFamily::VectorFamily(FiniteNormedSpace space, std::vector<Vec> vectors, std::vector<long long> labels)
    : space_(space), vectors_(std::move(vectors)), labels_(std::move(labels)) {
  for (const auto& v : vectors_) space_.check(v);
  if (!labels_.empty() && labels_.size() != vectors_.size())
    throw InvalidArgument("label count does not match vector count");
}

VectorFamily VectorFamily::subfamily(std::span<const std::size_t> indices) const {
  std::vector<Vec> vs;
  std::vector<long long> ls;
  for (std::size_t i : indices) {
    if (i >= vectors_.size()) throw InvalidArgument("subfamily index out of range");
    vs.push_back(vectors_[i]);
    if (!labels_.empty()) ls.push_back(labels_[i]);
  }
  return VectorFamily(space_, std::move(vs), std::move(ls));
}

VectorFamily VectorFamily::scaled(double t) const {
  std::vector<Vec> vs = vectors_;
  for (auto& v : vs)
    for (auto& z : v) z *= t;
  return VectorFamily(space_, std::move(vs), labels_);
}

}  // namespace calab::normed
