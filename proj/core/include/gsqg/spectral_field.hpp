#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace gsqg {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
/// Area of the torus [-pi, pi)^2; the Parseval factor used by every norm.
inline constexpr double kTorusArea = 4.0 * kPi * kPi;

/// Integer wavevector (xi_1, xi_2) on the torus [-pi, pi)^2.
struct Wavevector {
  int k1 = 0;
  int k2 = 0;

  friend bool operator==(const Wavevector&, const Wavevector&) = default;
  [[nodiscard]] int modulus_sq() const noexcept { return k1 * k1 + k2 * k2; }
};

/// One term of a trigonometric sum: amplitude * exp(i k.x).
struct Mode {
  Wavevector k;
  cplx amplitude;
};

/// A real scalar field on [-pi, pi)^2 held as truncated Fourier coefficients,
///
///   f(x) = sum_k c(k) exp(i k.x),   |k_i| <= n_i / 2,
///
/// with c(-k) = conj(c(k)). Nyquist rows and columns (|k_i| = n_i / 2) are
/// always zero. Coefficients are stored in FFT index order, row-major in
/// (k1, k2). The physical grid is x_j = -pi + 2 pi j / n along each axis.
class SpectralField {
 public:
  SpectralField(int n1, int n2);

  [[nodiscard]] int n1() const noexcept { return n1_; }
  [[nodiscard]] int n2() const noexcept { return n2_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] bool same_grid(const SpectralField& other) const noexcept {
    return n1_ == other.n1_ && n2_ == other.n2_;
  }

  /// Coefficient of wavevector k; throws PreconditionError outside |k_i| <= n_i/2.
  [[nodiscard]] cplx coeff(Wavevector k) const;

  /// Raw coefficient storage in FFT order. Writers must keep Hermitian symmetry.
  [[nodiscard]] std::span<const cplx> coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] std::span<cplx> coefficients() noexcept { return coeffs_; }

  [[nodiscard]] std::size_t index_of(Wavevector k) const;
  [[nodiscard]] int wavenumber1(int i1) const noexcept { return i1 <= n1_ / 2 ? i1 : i1 - n1_; }
  [[nodiscard]] int wavenumber2(int i2) const noexcept { return i2 <= n2_ / 2 ? i2 : i2 - n2_; }
  [[nodiscard]] bool is_nyquist(int i1, int i2) const noexcept {
    return 2 * i1 == n1_ || 2 * i2 == n2_;
  }

  [[nodiscard]] bool is_mean_zero() const noexcept { return coeffs_[0] == cplx{}; }
  [[nodiscard]] cplx mean_coeff() const noexcept { return coeffs_[0]; }
  void remove_mean() noexcept { coeffs_[0] = {}; }

  [[nodiscard]] double max_abs_coeff() const noexcept;
  [[nodiscard]] bool all_finite() const noexcept;

  /// Largest |c(k) - conj(c(-k))| over the grid; zero for a valid field.
  [[nodiscard]] double hermitian_defect() const noexcept;

  /// Point value by direct summation of the trigonometric series.
  [[nodiscard]] double evaluate(double x1, double x2) const;

  /// Physical-space values on the grid, row-major n1 x n2.
  [[nodiscard]] std::vector<double> to_grid() const;
  static SpectralField from_grid(int n1, int n2, std::span<const double> values);

  /// Calls fn(k1, k2, coefficient&) for every stored coefficient.
  template <class Fn>
  void for_each_mode(Fn&& fn) {
    for (int i1 = 0; i1 < n1_; ++i1) {
      const int k1 = wavenumber1(i1);
      for (int i2 = 0; i2 < n2_; ++i2) fn(k1, wavenumber2(i2), coeffs_[static_cast<std::size_t>(i1) * n2_ + i2]);
    }
  }
  template <class Fn>
  void for_each_mode(Fn&& fn) const {
    for (int i1 = 0; i1 < n1_; ++i1) {
      const int k1 = wavenumber1(i1);
      for (int i2 = 0; i2 < n2_; ++i2) fn(k1, wavenumber2(i2), coeffs_[static_cast<std::size_t>(i1) * n2_ + i2]);
    }
  }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double a) noexcept;

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double a, SpectralField f) { return f *= a; }
  friend SpectralField operator*(SpectralField f, double a) { return f *= a; }
  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  int n1_;
  int n2_;
  std::vector<cplx> coeffs_;
};

/// A pair of fields, e.g. a velocity (u1, u2).
struct VectorField {
  SpectralField c1;
  SpectralField c2;
};

/// Builds a real field from modes given on one half-lattice; the Hermitian
/// partner of each mode is filled in and repeated wavevectors accumulate.
/// A zero wavevector contributes the real part of its amplitude. Nyquist
/// wavevectors (|k_i| = n_i/2) are accepted and dropped. Throws
/// PreconditionError naming the offending mode if |k_i| > n_i/2.
SpectralField synthesize(std::span<const Mode> modes, int n1, int n2);

/// Throws PreconditionError unless both fields live on the same grid.
void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op);

}  // namespace gsqg
