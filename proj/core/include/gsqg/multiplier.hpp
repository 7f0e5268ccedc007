#pragma once

#include <string>

#include "gsqg/spectral_field.hpp"

namespace gsqg {

/// Radial Fourier multiplier m(|xi|).
struct MultiplierSpec {
  enum class Kind { identity, lambda_power, frac_laplacian, log_power };

  Kind kind = Kind::identity;
  double exponent = 0.0;

  static MultiplierSpec identity() { return {Kind::identity, 0.0}; }
  /// Lambda^s, symbol |xi|^s.
  static MultiplierSpec lambda_power(double s) { return {Kind::lambda_power, s}; }
  /// (-Laplacian)^alpha, symbol |xi|^(2 alpha); alpha >= 0.
  static MultiplierSpec frac_laplacian(double alpha);
  /// (log(I - Laplacian))^mu, symbol (log(1 + |xi|^2))^mu; mu >= 0.
  static MultiplierSpec log_power(double mu);

  /// Symbol value at |xi| = modulus. Infinite at the origin for negative powers.
  [[nodiscard]] double symbol(double modulus) const;
  [[nodiscard]] double symbol_sq(double modulus_sq) const;
  [[nodiscard]] bool singular_at_origin() const noexcept {
    return kind == Kind::lambda_power && exponent < 0.0;
  }
  [[nodiscard]] std::string name() const;
};

/// coeff_out(xi) = m(|xi|) coeff_in(xi). Throws PreconditionError naming the
/// operator if m is singular at the origin and f has a nonzero mean.
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m);

/// Multiplier with symbol m(|xi|) * i xi_axis (axis 1 or 2). The origin maps
/// to zero; if m(|xi|) |xi| is unbounded there, f must be mean-zero.
SpectralField apply_derivative_multiplier(const SpectralField& f, const MultiplierSpec& m, int axis);

/// Spectral partial derivative along axis 1 or 2.
SpectralField partial(const SpectralField& f, int axis);

/// (-d2 psi, d1 psi).
VectorField perp_gradient(const SpectralField& psi);

/// d1 u1 + d2 u2.
SpectralField divergence(const VectorField& u);

}  // namespace gsqg
