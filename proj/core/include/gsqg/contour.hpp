#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gsqg/error.hpp"

namespace gsqg {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm_sq(Point2 a) { return dot(a, a); }

/// Closed curve sampled at gamma_i = -pi + 2 pi i / M.
struct Contour {
  std::vector<Point2> points;
  double beta = 1.5;
  double strength = 1.0;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(points.size()); }
  [[nodiscard]] double gamma(int i) const noexcept;
  /// Throws PreconditionError unless M >= 8 is even, beta in (1,2) and all points finite.
  void validate() const;

  static Contour circle(int m, double radius = 1.0, Point2 center = {}, double beta = 1.5, double strength = 1.0);
  /// Ellipse with semi-axes a, b, resampled to uniform |dx/dgamma|.
  static Contour ellipse(int m, double a, double b, double beta = 1.5, double strength = 1.0);
  /// r(t) = 1 + eps cos(mode t), resampled to uniform |dx/dgamma|.
  static Contour perturbed_circle(int m, double eps, int mode, double beta = 1.5, double strength = 1.0);
  /// Samples z(gamma(t)) where t -> gamma is the normalized arc length of the
  /// closed curve z on [-pi, pi); dz is its derivative.
  static Contour from_parametrization(int m, const std::function<Point2(double)>& z,
                                      const std::function<Point2(double)>& dz, double beta = 1.5,
                                      double strength = 1.0);
};

/// order-th spectral derivative in gamma; the Nyquist mode is dropped.
std::vector<Point2> spectral_derivative(std::span<const Point2> x, int order);

class SelfIntersectionError : public Error {
 public:
  SelfIntersectionError(int i, int j);
  [[nodiscard]] int first() const noexcept { return i_; }
  [[nodiscard]] int second() const noexcept { return j_; }

 private:
  int i_, j_;
};

struct ArcChordReport {
  double f_max = 0.0;
  int argmax_i = 0;
  int argmax_j = 0;  // equal to argmax_i when the maximum is a diagonal value
  double min_chord = 0.0;
  std::vector<double> diagonal;  // 1 / |dx/dgamma|
};

class ContourBlowUp : public Error {
 public:
  ContourBlowUp(const std::string& what, ArcChordReport last) : Error(what), last_(std::move(last)) {}
  [[nodiscard]] const ArcChordReport& last_good() const noexcept { return last_; }

 private:
  ArcChordReport last_;
};

/// Quadrature weights W_m (m = 0..M-1, eta_m = 2 pi m / M) with
/// sum_m W_m p(eta_m) = int p(eta) |2 sin(eta/2)|^-beta d eta for
/// trigonometric polynomials p of degree < M/2 with p(0) = 0.
std::vector<double> singular_weights(int m, double beta);

/// c_k = int (1 - cos k eta) |2 sin(eta/2)|^-beta d eta, k = 0..kmax.
std::vector<double> kernel_moments(int kmax, double beta);

/// Node values of int (x'(g) - x'(g - eta)) / |x(g) - x(g - eta)|^beta d eta.
/// Throws SelfIntersectionError if two nodes are closer than 1e-12.
std::vector<Point2> cde_velocity(const Contour& c);

/// Tangential velocity keeping |dx/dgamma|^2 independent of gamma; lambda(-pi) = 0.
std::vector<double> lambda_field(const Contour& c);
std::vector<double> lambda_field(const Contour& c, std::span<const Point2> velocity);

/// strength * velocity + lambda dx/dgamma.
std::vector<Point2> contour_rhs(const Contour& c);

/// Largest step for which classical RK4 is linearly stable on this contour.
double stable_step(const Contour& c);

/// Advances by dt with as many equal RK4 substeps as stability requires.
/// Throws ContourBlowUp carrying the arc-chord report of the input on failure.
Contour step(const Contour& c, double dt);

ArcChordReport arc_chord(const Contour& c);

struct ContourDiagnostics {
  double t = 0.0;
  double h4_norm = 0.0;
  double f_max = 0.0;
  double area = 0.0;
  double a_mean = 0.0;  // mean |dx/dgamma|^2
  double spread = 0.0;  // (max - min) / mean of |dx/dgamma|^2
};

ContourDiagnostics contour_diagnostics(const Contour& c, double t = 0.0);

/// max |x'.x'''' + 3 x''.x'''|; requires spread <= 1e-6.
double curve_identity_check(const Contour& c);

struct SymmetrizedIntegral {
  double direct = 0.0;       // int x . velocity
  double symmetrized = 0.0;  // 1/2 int int (dx . dx') / |dx|^beta
};

SymmetrizedIntegral symmetrized_integral(const Contour& c);

struct ContourRunResult {
  Contour final;
  std::vector<ContourDiagnostics> diagnostics;
};

/// Steps to t_end with step dt, recording diagnostics every `stride` steps.
ContourRunResult run_contour(const Contour& c0, double dt, double t_end, int stride = 1,
                             const std::function<void(double, const Contour&)>& on_snapshot = {},
                             int snapshot_stride = 0);

}  // namespace gsqg
