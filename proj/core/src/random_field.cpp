#include "gsqg/random_field.hpp"

#include <cmath>
#include <vector>

#include "gsqg/error.hpp"

namespace gsqg {

SpectralField random_field(const RandomFieldSpec& spec, std::mt19937_64& rng) {
  if (spec.band < 0.0 || spec.band >= spec.n / 2) {
    throw PreconditionError("random_field: band must lie in [0, n/2)");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  const int kmax = static_cast<int>(std::floor(spec.band));
  const double hi = spec.band * spec.band;
  const double lo = spec.shell_min * spec.shell_min;
  std::vector<Mode> modes;
  if (!spec.mean_zero) modes.push_back({{0, 0}, spec.amplitude * normal(rng)});
  for (int k1 = 0; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      if (k1 == 0 && k2 <= 0) continue;
      const double r2 = k1 * k1 + k2 * k2;
      if (r2 > hi || r2 < lo) continue;
      const double re = normal(rng);
      const double im = normal(rng);
      const double w = spec.amplitude * std::pow(r2, -0.5 * spec.slope) / std::sqrt(2.0);
      modes.push_back({{k1, k2}, cplx(w * re, w * im)});
    }
  }
  return synthesize(modes, spec.n, spec.n);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gsqg
