#include "gsqg/spectral_field.hpp"

#include <cmath>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/fft.hpp"

namespace gsqg {
namespace {

// exp(i k (-pi)) for the grid offset.
double offset_phase(int k1, int k2) { return ((k1 + k2) & 1) ? -1.0 : 1.0; }

}  // namespace

SpectralField::SpectralField(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 < 2 || n2 < 2 || n1 % 2 != 0 || n2 % 2 != 0) {
    throw PreconditionError("grid sizes must be even and positive, got " + std::to_string(n1) +
                            " x " + std::to_string(n2));
  }
  coeffs_.assign(static_cast<std::size_t>(n1) * n2, cplx{});
}

std::size_t SpectralField::index_of(Wavevector k) const {
  if (std::abs(k.k1) > n1_ / 2 || std::abs(k.k2) > n2_ / 2) {
    throw PreconditionError("wavevector (" + std::to_string(k.k1) + ", " + std::to_string(k.k2) +
                            ") outside the " + std::to_string(n1_) + " x " + std::to_string(n2_) +
                            " truncation");
  }
  const int i1 = (k.k1 + n1_) % n1_;
  const int i2 = (k.k2 + n2_) % n2_;
  return static_cast<std::size_t>(i1) * n2_ + i2;
}

cplx SpectralField::coeff(Wavevector k) const { return coeffs_[index_of(k)]; }

double SpectralField::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::all_finite() const noexcept {
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

double SpectralField::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (int i1 = 0; i1 < n1_; ++i1) {
    const int j1 = (n1_ - i1) % n1_;
    for (int i2 = 0; i2 < n2_; ++i2) {
      const int j2 = (n2_ - i2) % n2_;
      const cplx a = coeffs_[static_cast<std::size_t>(i1) * n2_ + i2];
      const cplx b = coeffs_[static_cast<std::size_t>(j1) * n2_ + j2];
      worst = std::max(worst, std::abs(a - std::conj(b)));
    }
  }
  return worst;
}

double SpectralField::evaluate(double x1, double x2) const {
  double sum = 0.0;
  for_each_mode([&](int k1, int k2, const cplx& c) {
    if (c == cplx{}) return;
    const double phase = k1 * x1 + k2 * x2;
    sum += c.real() * std::cos(phase) - c.imag() * std::sin(phase);
  });
  return sum;
}

std::vector<double> SpectralField::to_grid() const {
  std::vector<cplx> shifted(coeffs_.size());
  for (int i1 = 0; i1 < n1_; ++i1) {
    const int k1 = wavenumber1(i1);
    for (int i2 = 0; i2 < n2_; ++i2) {
      const std::size_t idx = static_cast<std::size_t>(i1) * n2_ + i2;
      shifted[idx] = coeffs_[idx] * offset_phase(k1, wavenumber2(i2));
    }
  }
  std::vector<double> out(coeffs_.size());
  fft::inverse_real_2d(n1_, n2_, shifted, out);
  return out;
}

SpectralField SpectralField::from_grid(int n1, int n2, std::span<const double> values) {
  SpectralField f(n1, n2);
  if (values.size() != f.size()) throw PreconditionError("from_grid: value count does not match grid");
  fft::forward_real_2d(n1, n2, values, f.coeffs_);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      auto& c = f.coeffs_[static_cast<std::size_t>(i1) * n2 + i2];
      c = f.is_nyquist(i1, i2) ? cplx{} : c * (scale * offset_phase(f.wavenumber1(i1), f.wavenumber2(i2)));
    }
  }
  return f;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other, "operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other, "operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) noexcept {
  for (auto& c : coeffs_) c *= a;
  return *this;
}

SpectralField synthesize(std::span<const Mode> modes, int n1, int n2) {
  SpectralField f(n1, n2);
  auto coeffs = f.coefficients();
  for (const auto& [k, amp] : modes) {
    const std::size_t idx = f.index_of(k);  // throws with the offending index
    if (2 * std::abs(k.k1) == n1 || 2 * std::abs(k.k2) == n2) continue;
    if (k.k1 == 0 && k.k2 == 0) {
      coeffs[idx] += amp.real();
      continue;
    }
    coeffs[idx] += amp;
    coeffs[f.index_of({-k.k1, -k.k2})] += std::conj(amp);
  }
  return f;
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op) {
  if (!a.same_grid(b)) {
    throw PreconditionError(std::string(op) + ": grid mismatch (" + std::to_string(a.n1()) + "x" +
                            std::to_string(a.n2()) + " vs " + std::to_string(b.n1()) + "x" +
                            std::to_string(b.n2()) + ")");
  }
}

}  // namespace gsqg
