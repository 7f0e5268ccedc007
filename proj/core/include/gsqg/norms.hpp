#pragma once

#include "gsqg/spectral_field.hpp"

// All norms use the Parseval normalization ||f||^2 = (2 pi)^2 sum |c(xi)|^2.
namespace gsqg {

enum class Sobolev { homogeneous, inhomogeneous };

/// Homogeneous weight |xi|^(2s), inhomogeneous weight (1 + |xi|^2)^s.
/// Homogeneous with s < 0 requires a mean-zero field.
double sobolev_norm(const SpectralField& f, double s, Sobolev kind);

double l2_norm(const SpectralField& f);

/// Integral of f g over the torus.
double inner(const SpectralField& f, const SpectralField& g);

/// sum_xi |xi|^p |c(xi)|; the origin carries weight 1 when p = 0 and 0 when p > 0.
double fourier_l1(const SpectralField& f, double p);

/// Max |f| over the physical grid.
double grid_max_abs(const SpectralField& f);

}  // namespace gsqg
