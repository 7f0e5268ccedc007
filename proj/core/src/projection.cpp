#include "gsqg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg {

SpectralField galerkin_project(const SpectralField& f, int n) {
  if (n < 1) throw PreconditionError("galerkin_project: radius must be >= 1, got " + std::to_string(n));
  SpectralField out = f;
  const int n2 = n * n;
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    const int r2 = k1 * k1 + k2 * k2;
    if (r2 == 0 || r2 > n2) c = {};
  });
  return out;
}

SpectralField lp_block(const SpectralField& f, int j) {
  if (j < -1) throw PreconditionError("lp_block: index must be >= -1, got " + std::to_string(j));
  SpectralField out = f;
  if (j == -1) {
    out.for_each_mode([](int k1, int k2, cplx& c) {
      if (k1 != 0 || k2 != 0) c = {};
    });
    return out;
  }
  const double lo = std::ldexp(1.0, 2 * (j - 1));  // 4^(j-1)
  const double hi = std::ldexp(1.0, 2 * (j + 1));
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    const double r2 = k1 * k1 + k2 * k2;
    if (r2 < lo || r2 >= hi) c = {};
  });
  return out;
}

int lp_max_block(const SpectralField& f) {
  const double r = std::hypot(f.n1() / 2, f.n2() / 2);
  return std::max(0, static_cast<int>(std::floor(std::log2(r))) + 1);
}

SpectralField truncate_box(const SpectralField& f, int k) {
  SpectralField out = f;
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    if (std::abs(k1) > k || std::abs(k2) > k) c = {};
  });
  return out;
}

SpectralField truncate_disc(const SpectralField& f, double radius) {
  SpectralField out = f;
  const double r2max = radius * radius;
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    if (k1 * k1 + k2 * k2 > r2max) c = {};
  });
  return out;
}

SpectralField resample(const SpectralField& f, int m1, int m2) {
  SpectralField out(m1, m2);
  const int lim1 = std::min(f.n1(), m1) / 2;
  const int lim2 = std::min(f.n2(), m2) / 2;
  f.for_each_mode([&](int k1, int k2, const cplx& c) {
    if (std::abs(k1) < lim1 && std::abs(k2) < lim2) out.coefficients()[out.index_of({k1, k2})] = c;
  });
  return out;
}

}  // namespace gsqg
