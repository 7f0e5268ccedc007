#pragma once

#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Product f g formed on a 3/2-padded grid and truncated back. Every retained
/// (non-Nyquist) mode equals the exact convolution of the coefficient sequences.
SpectralField dealias_product(const SpectralField& f, const SpectralField& g);

/// Padded grid size used by dealias_product.
[[nodiscard]] constexpr int padded_size(int n) noexcept { return 2 * ((3 * n + 3) / 4); }

}  // namespace gsqg
