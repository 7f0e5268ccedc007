#include "gsqg/norms.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg {

double sobolev_norm(const SpectralField& f, double s, Sobolev kind) {
  const bool homogeneous = kind == Sobolev::homogeneous;
  if (homogeneous && s < 0.0 && !f.is_mean_zero()) {
    throw PreconditionError("homogeneous Sobolev norm with s < 0 requires a mean-zero field");
  }
  double sum = 0.0;
  f.for_each_mode([&](int k1, int k2, const cplx& c) {
    const double a = std::norm(c);
    if (a == 0.0) return;
    const double r2 = k1 * k1 + k2 * k2;
    double w = 1.0;
    if (homogeneous) {
      if (s != 0.0) w = r2 == 0.0 ? 0.0 : std::pow(r2, s);
    } else if (s != 0.0) {
      w = std::pow(1.0 + r2, s);
    }
    sum += w * a;
  });
  return std::sqrt(kTorusArea * sum);
}

double l2_norm(const SpectralField& f) { return sobolev_norm(f, 0.0, Sobolev::homogeneous); }

double inner(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f, g, "inner");
  const auto a = f.coefficients();
  const auto b = g.coefficients();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] * std::conj(b[i])).real();
  return kTorusArea * sum;
}

double fourier_l1(const SpectralField& f, double p) {
  double sum = 0.0;
  f.for_each_mode([&](int k1, int k2, const cplx& c) {
    if (c == cplx{}) return;
    const double r2 = k1 * k1 + k2 * k2;
    if (r2 == 0.0) {
      if (p == 0.0) sum += std::abs(c);
      else if (p < 0.0) throw PreconditionError("fourier_l1 with p < 0 requires a mean-zero field");
      return;
    }
    sum += (p == 0.0 ? 1.0 : std::pow(r2, 0.5 * p)) * std::abs(c);
  });
  return sum;
}

double grid_max_abs(const SpectralField& f) {
  double m = 0.0;
  for (double v : f.to_grid()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace gsqg
