#pragma once

#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Keeps 0 < |m| <= n (Euclidean), zeroing everything else including the mean.
SpectralField galerkin_project(const SpectralField& f, int n);

/// Sharp dyadic block: j = -1 keeps |xi| < 1, j >= 0 keeps 2^(j-1) <= |xi| < 2^(j+1).
/// Every nonzero wavevector lies in exactly two blocks, so sum_j Delta_j f = 2 f - mean(f).
SpectralField lp_block(const SpectralField& f, int j);

/// Largest j whose block meets the grid.
int lp_max_block(const SpectralField& f);

/// Keeps |k1| <= k and |k2| <= k.
SpectralField truncate_box(const SpectralField& f, int k);

/// Keeps 0 <= |xi| <= radius (Euclidean); the mean is kept.
SpectralField truncate_disc(const SpectralField& f, double radius);

/// Largest box band K with 3K < n: quadratic products of band-K fields are
/// alias-free on the band when formed on the n-point grid.
[[nodiscard]] constexpr int dealias_cutoff(int n) noexcept { return (n - 1) / 3; }

/// Same coefficients on an m1 x m2 grid; modes that do not fit are dropped.
SpectralField resample(const SpectralField& f, int m1, int m2);

}  // namespace gsqg
