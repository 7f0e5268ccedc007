#pragma once

#include <cstdint>
#include <random>

#include "gsqg/spectral_field.hpp"

namespace gsqg {

struct RandomFieldSpec {
  int n = 64;
  double band = 8.0;       // keep |xi| <= band
  double shell_min = 0.0;  // and |xi| >= shell_min
  int slope = 0;           // amplitude ~ |xi|^-slope (0 flat, 1, 2 smooth)
  double amplitude = 1.0;
  bool mean_zero = true;
};

/// Independent complex Gaussian coefficients shaped by the spectral slope.
/// Modes are drawn in a fixed lattice order, so a seed fully determines the field.
SpectralField random_field(const RandomFieldSpec& spec, std::mt19937_64& rng);

/// Seed of trial `index` in a sweep started from `base` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace gsqg
