#include "gsqg/multiplier.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg {

MultiplierSpec MultiplierSpec::frac_laplacian(double alpha) {
  if (!(alpha >= 0.0)) throw PreconditionError("frac_laplacian: alpha must be >= 0");
  return {Kind::frac_laplacian, alpha};
}

MultiplierSpec MultiplierSpec::log_power(double mu) {
  if (!(mu >= 0.0)) throw PreconditionError("log_power: mu must be >= 0");
  return {Kind::log_power, mu};
}

double MultiplierSpec::symbol_sq(double r2) const {
  switch (kind) {
    case Kind::identity:
      return 1.0;
    case Kind::lambda_power:
      if (exponent == 0.0) return 1.0;
      if (r2 == 0.0) return exponent > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      return std::pow(r2, 0.5 * exponent);
    case Kind::frac_laplacian:
      if (exponent == 0.0) return 1.0;
      return std::pow(r2, exponent);
    case Kind::log_power:
      if (exponent == 0.0) return 1.0;
      return std::pow(std::log1p(r2), exponent);
  }
  return 1.0;
}

double MultiplierSpec::symbol(double modulus) const { return symbol_sq(modulus * modulus); }

std::string MultiplierSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::identity: os << "identity"; break;
    case Kind::lambda_power: os << "Lambda^" << exponent; break;
    case Kind::frac_laplacian: os << "(-Laplacian)^" << exponent; break;
    case Kind::log_power: os << "(log(I-Laplacian))^" << exponent; break;
  }
  return os.str();
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& m) {
  if (m.kind == MultiplierSpec::Kind::identity ||
      (m.exponent == 0.0 && m.kind != MultiplierSpec::Kind::identity)) {
    return f;
  }
  if (m.singular_at_origin() && !f.is_mean_zero()) {
    throw PreconditionError(m.name() + " requires a mean-zero field");
  }
  SpectralField out = f;
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    if (k1 == 0 && k2 == 0) {
      c = m.singular_at_origin() ? cplx{} : c * m.symbol_sq(0.0);
      return;
    }
    c *= m.symbol_sq(static_cast<double>(k1 * k1 + k2 * k2));
  });
  return out;
}

SpectralField apply_derivative_multiplier(const SpectralField& f, const MultiplierSpec& m, int axis) {
  if (axis != 1 && axis != 2) throw PreconditionError("derivative axis must be 1 or 2");
  const bool singular = m.kind == MultiplierSpec::Kind::lambda_power && m.exponent < -1.0;
  if (singular && !f.is_mean_zero()) {
    throw PreconditionError(m.name() + " d/dx" + std::to_string(axis) + " requires a mean-zero field");
  }
  SpectralField out = f;
  out.for_each_mode([&](int k1, int k2, cplx& c) {
    if (k1 == 0 && k2 == 0) {
      c = {};
      return;
    }
    const double xi = axis == 1 ? k1 : k2;
    c *= cplx(0.0, xi * m.symbol_sq(static_cast<double>(k1 * k1 + k2 * k2)));
  });
  return out;
}

SpectralField partial(const SpectralField& f, int axis) {
  return apply_derivative_multiplier(f, MultiplierSpec::identity(), axis);
}

VectorField perp_gradient(const SpectralField& psi) {
  SpectralField u1 = partial(psi, 2);
  u1 *= -1.0;
  return {std::move(u1), partial(psi, 1)};
}

SpectralField divergence(const VectorField& u) {
  require_same_grid(u.c1, u.c2, "divergence");
  return partial(u.c1, 1) + partial(u.c2, 2);
}

}  // namespace gsqg
