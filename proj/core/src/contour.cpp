#include "gsqg/contour.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gsqg/fft.hpp"

namespace gsqg {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

int wavenumber(int i, int m) { return i <= m / 2 ? i : i - m; }

std::vector<cplx> to_complex(std::span<const Point2> x) {
  std::vector<cplx> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = {x[i].x, x[i].y};
  return z;
}

// Spectral multiplier on a complex periodic signal; symbol(k) for k != +-M/2.
template <class Symbol>
std::vector<cplx> spectral_apply(const std::vector<cplx>& z, Symbol&& symbol) {
  const int m = static_cast<int>(z.size());
  std::vector<cplx> hat(z.size()), out(z.size());
  fft::forward_1d(z, hat);
  for (int i = 0; i < m; ++i) {
    const int k = wavenumber(i, m);
    hat[i] = 2 * k == m ? cplx{} : hat[i] * symbol(k) / static_cast<double>(m);
  }
  fft::inverse_1d(hat, out);
  return out;
}

std::vector<Point2> from_complex(const std::vector<cplx>& z) {
  std::vector<Point2> x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = {z[i].real(), z[i].imag()};
  return x;
}

std::vector<double> antiderivative_zero_mean(const std::vector<double>& g) {
  std::vector<cplx> z(g.begin(), g.end());
  const auto out = spectral_apply(z, [](int k) { return k == 0 ? cplx{} : 1.0 / cplx(0.0, k); });
  std::vector<double> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = out[i].real();
  return r;
}

}  // namespace

double Contour::gamma(int i) const noexcept { return -kPi + 2.0 * kPi * i / size(); }

void Contour::validate() const {
  const int m = size();
  if (m < 8 || m % 2 != 0) throw PreconditionError("contour needs an even number of nodes >= 8");
  if (!(beta > 1.0 && beta < 2.0)) throw PreconditionError("contour beta must lie in (1,2)");
  if (!std::isfinite(strength)) throw PreconditionError("contour strength must be finite");
  for (const auto& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw PreconditionError("contour has a non-finite node");
}

Contour Contour::circle(int m, double radius, Point2 center, double beta, double strength) {
  Contour c{std::vector<Point2>(static_cast<std::size_t>(m)), beta, strength};
  for (int i = 0; i < m; ++i) {
    const double g = c.gamma(i);
    c.points[i] = {center.x + radius * std::cos(g), center.y + radius * std::sin(g)};
  }
  c.validate();
  return c;
}

Contour Contour::ellipse(int m, double a, double b, double beta, double strength) {
  return from_parametrization(
      m, [=](double t) { return Point2{a * std::cos(t), b * std::sin(t)}; },
      [=](double t) { return Point2{-a * std::sin(t), b * std::cos(t)}; }, beta, strength);
}

Contour Contour::perturbed_circle(int m, double eps, int mode, double beta, double strength) {
  auto r = [=](double t) { return 1.0 + eps * std::cos(mode * t); };
  auto dr = [=](double t) { return -eps * mode * std::sin(mode * t); };
  return from_parametrization(
      m, [=](double t) { return Point2{r(t) * std::cos(t), r(t) * std::sin(t)}; },
      [=](double t) {
        return Point2{dr(t) * std::cos(t) - r(t) * std::sin(t), dr(t) * std::sin(t) + r(t) * std::cos(t)};
      },
      beta, strength);
}

Contour Contour::from_parametrization(int m, const std::function<Point2(double)>& z,
                                      const std::function<Point2(double)>& dz, double beta, double strength) {
  if (m < 8 || m % 2 != 0) throw PreconditionError("contour needs an even number of nodes >= 8");
  // Arc length s(t) = sbar (t + pi) + psi(t) - psi(-pi), psi periodic.
  const int fine = std::max(1024, 4 * m);
  std::vector<double> speed(static_cast<std::size_t>(fine));
  for (int j = 0; j < fine; ++j) speed[j] = std::sqrt(norm_sq(dz(-kPi + 2.0 * kPi * j / fine)));
  double sbar = 0.0;
  for (double s : speed) sbar += s;
  sbar /= fine;
  std::vector<cplx> hat(speed.size());
  fft::forward_1d(std::vector<cplx>(speed.begin(), speed.end()), hat);
  struct Term {
    int k;
    cplx coeff;
  };
  std::vector<Term> psi;
  double largest = 0.0;
  for (int i = 0; i < fine; ++i) largest = std::max(largest, std::abs(hat[i]));
  for (int i = 1; i < fine; ++i) {
    const int k = wavenumber(i, fine);
    if (2 * k == fine || std::abs(hat[i]) <= 1e-18 * largest) continue;
    // Coefficient of exp(i k (t + pi)) in speed is hat/fine; integrate.
    psi.push_back({k, hat[i] / static_cast<double>(fine) / cplx(0.0, k)});
  }
  auto psi_at = [&](double t) {
    double v = 0.0;
    for (const auto& [k, c] : psi) v += (c * std::exp(cplx(0.0, k * (t + kPi)))).real();
    return v;
  };
  const double psi0 = psi_at(-kPi);

  Contour c{std::vector<Point2>(static_cast<std::size_t>(m)), beta, strength};
  for (int i = 0; i < m; ++i) {
    const double target = c.gamma(i);
    double t = target;
    for (int it = 0; it < 50; ++it) {
      const double f = t + (psi_at(t) - psi0) / sbar - target;
      const double df = std::sqrt(norm_sq(dz(t))) / sbar;
      const double dt = f / df;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    c.points[i] = z(t);
  }
  c.validate();
  return c;
}

std::vector<Point2> spectral_derivative(std::span<const Point2> x, int order) {
  const cplx i_unit(0.0, 1.0);
  return from_complex(spectral_apply(to_complex(x), [&](int k) { return std::pow(i_unit * double(k), order); }));
}

SelfIntersectionError::SelfIntersectionError(int i, int j)
    : Error("contour self-intersection between nodes " + std::to_string(i) + " and " + std::to_string(j)),
      i_(i),
      j_(j) {}

std::vector<double> kernel_moments(int kmax, double beta) {
  // Fourier coefficients a_k of |2 sin(eta/2)|^-beta (analytically continued):
  // a_0 = Gamma(1-beta) / Gamma(1-beta/2)^2, a_k = a_{k-1} (k-1+beta/2) / (k-beta/2).
  std::vector<double> c(static_cast<std::size_t>(kmax) + 1, 0.0);
  const double a0 = std::tgamma(1.0 - beta) / std::pow(std::tgamma(1.0 - 0.5 * beta), 2);
  double ratio = 1.0;  // a_k / a_0
  for (int k = 1; k <= kmax; ++k) {
    ratio *= (k - 1 + 0.5 * beta) / (k - 0.5 * beta);
    c[k] = 2.0 * kPi * a0 * (1.0 - ratio);
  }
  return c;
}

std::vector<double> singular_weights(int m, double beta) {
  const auto c = kernel_moments(m / 2, beta);
  std::vector<cplx> hat(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
  // The Nyquist pair (k = +-M/2, each weighted 1/2) collapses onto one entry.
  for (int i = 0; i < m; ++i) hat[i] = -c[static_cast<std::size_t>(std::abs(wavenumber(i, m)))];
  fft::inverse_1d(hat, w);
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[i] = w[i].real() / m;
  return out;
}

namespace {

struct Geometry {
  std::vector<Point2> d1;
  std::vector<double> weights;
  std::vector<double> inv_sin_sq;  // |2 sin(eta_m / 2)|^2
};

Geometry geometry(const Contour& c) {
  const int m = c.size();
  Geometry g{spectral_derivative(c.points, 1), singular_weights(m, c.beta), std::vector<double>(m)};
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * std::sin(kPi * k / m);
    g.inv_sin_sq[k] = s * s;
  }
  return g;
}

std::vector<Point2> velocity_from(const Contour& c, const Geometry& g) {
  const int m = c.size();
  const double half_beta = 0.5 * c.beta;
  std::vector<Point2> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Point2 xi = c.points[i];
    const Point2 di = g.d1[i];
    double sx = 0.0, sy = 0.0;
    for (int k = 1; k < m; ++k) {
      const int j = i - k < 0 ? i - k + m : i - k;
      const Point2 chord = xi - c.points[j];
      const double chord_sq = norm_sq(chord);
      if (!(chord_sq >= 1e-24)) throw SelfIntersectionError(i, j);
      const double factor = g.weights[k] * std::pow(chord_sq / g.inv_sin_sq[k], -half_beta);
      sx += factor * (di.x - g.d1[j].x);
      sy += factor * (di.y - g.d1[j].y);
    }
    v[i] = {sx, sy};
  }
  return v;
}

std::vector<double> lambda_from(const Contour& c, std::span<const Point2> d1, std::span<const Point2> v) {
  const int m = c.size();
  const auto dv = spectral_derivative(v, 1);
  std::vector<double> g(static_cast<std::size_t>(m));
  double mean = 0.0;
  for (int i = 0; i < m; ++i) {
    g[i] = dot(d1[i], dv[i]) / norm_sq(d1[i]);
    mean += g[i];
  }
  mean /= m;
  for (double& x : g) x -= mean;
  const auto phi = antiderivative_zero_mean(g);
  std::vector<double> lambda(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) lambda[i] = -c.strength * (phi[i] - phi[0]);
  lambda[0] = 0.0;
  return lambda;
}

std::vector<Point2> rhs_from(const Contour& c) {
  const Geometry g = geometry(c);
  const auto v = velocity_from(c, g);
  const auto lambda = lambda_from(c, g.d1, v);
  std::vector<Point2> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c.strength * v[i] + lambda[i] * g.d1[i];
  return out;
}

}  // namespace

std::vector<Point2> cde_velocity(const Contour& c) {
  c.validate();
  if (c.size() < 64) throw PreconditionError("cde_velocity needs M >= 64");
  return velocity_from(c, geometry(c));
}

std::vector<double> lambda_field(const Contour& c) {
  return lambda_field(c, cde_velocity(c));
}

std::vector<double> lambda_field(const Contour& c, std::span<const Point2> velocity) {
  if (static_cast<int>(velocity.size()) != c.size()) throw PreconditionError("lambda_field: velocity size mismatch");
  return lambda_from(c, spectral_derivative(c.points, 1), velocity);
}

std::vector<Point2> contour_rhs(const Contour& c) {
  c.validate();
  if (c.size() < 64) throw PreconditionError("contour_rhs needs M >= 64");
  return rhs_from(c);
}

double stable_step(const Contour& c) {
  const int m = c.size();
  const auto c_k = kernel_moments(m / 2, c.beta);
  double peak = 0.0;
  for (int k = 1; k <= m / 2; ++k) peak = std::max(peak, k * c_k[k]);
  double a_min = INFINITY;
  for (const auto& d : spectral_derivative(c.points, 1)) a_min = std::min(a_min, norm_sq(d));
  const double omega = std::abs(c.strength) * std::pow(a_min, -0.5 * c.beta) * peak;
  // 2.83 ~ 2 sqrt(2), the RK4 stability interval on the imaginary axis.
  return omega > 0.0 ? 0.8 * 2.83 / omega : INFINITY;
}

Contour step(const Contour& c, double dt) {
  if (!(dt > 0.0)) throw PreconditionError("contour step needs dt > 0");
  c.validate();
  if (c.size() < 64) throw PreconditionError("contour step needs M >= 64");
  const int substeps = std::max(1, static_cast<int>(std::ceil(dt / stable_step(c) - 1e-12)));
  const double h = dt / substeps;
  const std::size_t m = c.points.size();
  auto shifted = [&](const Contour& base, const std::vector<Point2>& k, double a) {
    Contour out = base;
    for (std::size_t i = 0; i < m; ++i) out.points[i] = base.points[i] + a * k[i];
    return out;
  };
  Contour cur = c;
  try {
    for (int s = 0; s < substeps; ++s) {
      const auto k1 = rhs_from(cur);
      const auto k2 = rhs_from(shifted(cur, k1, 0.5 * h));
      const auto k3 = rhs_from(shifted(cur, k2, 0.5 * h));
      const auto k4 = rhs_from(shifted(cur, k3, h));
      for (std::size_t i = 0; i < m; ++i)
        cur.points[i] = cur.points[i] + (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
  } catch (const SelfIntersectionError& e) {
    throw ContourBlowUp(e.what(), arc_chord(c));
  }
  for (const auto& p : cur.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ContourBlowUp("non-finite contour node", arc_chord(c));
  }
  const ArcChordReport rep = arc_chord(cur);
  if (rep.min_chord < 1e-12 || rep.f_max > 1e10) throw ContourBlowUp("arc-chord condition lost", arc_chord(c));
  return cur;
}

ArcChordReport arc_chord(const Contour& c) {
  const int m = c.size();
  const double h = 2.0 * kPi / m;
  ArcChordReport rep;
  rep.min_chord = INFINITY;
  rep.diagonal.resize(static_cast<std::size_t>(m));
  const auto d1 = spectral_derivative(c.points, 1);
  for (int i = 0; i < m; ++i) {
    rep.diagonal[i] = 1.0 / std::sqrt(norm_sq(d1[i]));
    if (rep.diagonal[i] > rep.f_max) {
      rep.f_max = rep.diagonal[i];
      rep.argmax_i = rep.argmax_j = i;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 1; k < m; ++k) {
      const int j = i - k < 0 ? i - k + m : i - k;
      const double chord = std::sqrt(norm_sq(c.points[i] - c.points[j]));
      rep.min_chord = std::min(rep.min_chord, chord);
      const double f = std::min(k, m - k) * h / chord;
      if (f > rep.f_max) {
        rep.f_max = f;
        rep.argmax_i = i;
        rep.argmax_j = j;
      }
    }
  }
  return rep;
}

ContourDiagnostics contour_diagnostics(const Contour& c, double t) {
  const int m = c.size();
  ContourDiagnostics d;
  d.t = t;
  std::vector<cplx> hat(static_cast<std::size_t>(m));
  fft::forward_1d(to_complex(c.points), hat);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const int k = wavenumber(i, m);
    if (2 * k == m) continue;
    sum += std::pow(1.0 + double(k) * k, 4) * std::norm(hat[i] / static_cast<double>(m));
  }
  d.h4_norm = std::sqrt(2.0 * kPi * sum);
  d.f_max = arc_chord(c).f_max;
  const auto d1 = spectral_derivative(c.points, 1);
  double area = 0.0, lo = INFINITY, hi = 0.0, mean = 0.0;
  for (int i = 0; i < m; ++i) {
    area += c.points[i].x * d1[i].y - c.points[i].y * d1[i].x;
    const double a = norm_sq(d1[i]);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    mean += a;
  }
  d.area = 0.5 * area * (2.0 * kPi / m);
  d.a_mean = mean / m;
  d.spread = (hi - lo) / d.a_mean;
  return d;
}

double curve_identity_check(const Contour& c) {
  const auto d1 = spectral_derivative(c.points, 1);
  double lo = INFINITY, hi = 0.0, mean = 0.0;
  for (const auto& p : d1) {
    const double a = norm_sq(p);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    mean += a;
  }
  mean /= c.size();
  if ((hi - lo) / mean > 1e-6) {
    throw PreconditionError("curve_identity_check needs a uniform parametrization (spread " +
                            std::to_string((hi - lo) / mean) + ")");
  }
  // Roundoff-level coefficients are dropped before differentiating: the fourth
  // derivative would otherwise amplify them by k^4.
  const int m = c.size();
  std::vector<cplx> hat(static_cast<std::size_t>(m));
  fft::forward_1d(to_complex(c.points), hat);
  double largest = 0.0;
  for (const auto& h : hat) largest = std::max(largest, std::abs(h));
  for (int i = 0; i < m; ++i) {
    if (std::abs(hat[i]) <= 1e-15 * largest || 2 * wavenumber(i, m) == m) hat[i] = {};
    hat[i] /= static_cast<double>(m);
  }
  auto derivative = [&](int order) {
    std::vector<cplx> h(hat), out(hat.size());
    for (int i = 0; i < m; ++i) h[i] *= std::pow(cplx(0.0, wavenumber(i, m)), order);
    fft::inverse_1d(h, out);
    return from_complex(out);
  };
  const auto f1 = derivative(1), f2 = derivative(2), f3 = derivative(3), f4 = derivative(4);
  double worst = 0.0;
  for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(dot(f1[i], f4[i]) + 3.0 * dot(f2[i], f3[i])));
  return worst;
}

SymmetrizedIntegral symmetrized_integral(const Contour& c) {
  c.validate();
  const int m = c.size();
  const Geometry g = geometry(c);
  const auto v = velocity_from(c, g);
  const double h = 2.0 * kPi / m;
  SymmetrizedIntegral r;
  for (int i = 0; i < m; ++i) r.direct += h * dot(c.points[i], v[i]);
  for (int i = 0; i < m; ++i) {
    for (int k = 1; k < m; ++k) {
      const int j = i - k < 0 ? i - k + m : i - k;
      const Point2 chord = c.points[i] - c.points[j];
      const double chord_sq = norm_sq(chord);
      r.symmetrized += 0.5 * h * g.weights[k] * dot(chord, g.d1[i] - g.d1[j]) *
                       std::pow(chord_sq / g.inv_sin_sq[k], -0.5 * c.beta);
    }
  }
  return r;
}

ContourRunResult run_contour(const Contour& c0, double dt, double t_end, int stride,
                             const std::function<void(double, const Contour&)>& on_snapshot, int snapshot_stride) {
  if (!(dt > 0.0) || !(t_end >= 0.0)) throw PreconditionError("run_contour needs dt > 0 and t_end >= 0");
  if (stride < 1) throw PreconditionError("diagnostic stride must be >= 1");
  const long steps = std::lround(t_end / dt);
  ContourRunResult r{c0, {}};
  r.diagnostics.push_back(contour_diagnostics(c0, 0.0));
  if (on_snapshot && snapshot_stride > 0) on_snapshot(0.0, c0);
  for (long s = 1; s <= steps; ++s) {
    r.final = step(r.final, dt);
    const double t = s * dt;
    if (s % stride == 0 || s == steps) r.diagnostics.push_back(contour_diagnostics(r.final, t));
    if (on_snapshot && snapshot_stride > 0 && (s % snapshot_stride == 0 || s == steps)) on_snapshot(t, r.final);
  }
  return r;
}

}  // namespace gsqg
