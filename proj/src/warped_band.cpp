#include "bandwidth/warped_band.hpp"

#include <cmath>
#include <utility>

#include "bandwidth/errors.hpp"

namespace bandwidth {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Warp from log-derivative closures: f' = f * lf', f'' = f * (lf'' + lf'^2).
Warp warp_from_log_derivatives(WarpKind kind, std::function<double(double)> f,
                               std::function<double(double)> lfp,
                               std::function<double(double)> lfpp) {
  Warp w;
  w.kind = kind;
  w.f = f;
  w.fp = [f, lfp](double t) { return f(t) * lfp(t); };
  w.fpp = [f, lfp, lfpp](double t) {
    const double d = lfp(t);
    return f(t) * (lfpp(t) + d * d);
  };
  return w;
}

}  // namespace

WarpedBandSpec::WarpedBandSpec(int n, double t0, double t1, Warp warp)
    : n_(n), interval_{t0, t1}, warp_(std::move(warp)) {
  if (n < 2) throw ConfigError("band dimension n must be >= 2");
  if (!(t0 < t1)) throw ConfigError("band interval needs t0 < t1");
  if (!warp_.f) throw ConfigError("warp carries no f(t)");
  // Metric nondegeneracy: f > 0 on the whole interval.
  const int probes = 1025;
  for (int i = 0; i < probes; ++i) {
    const double t = grid_point(t0, t1, i, probes);
    const double v = warp_.f(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError("warp factor not positive at t = " + format_double(t) +
                        " (f = " + format_double(v) + ")");
    }
  }
}

WarpedBandSpec WarpedBandSpec::cosine(int n, double t0, double t1) {
  if (n < 2) throw ConfigError("band dimension n must be >= 2");
  if (!(t0 > -kPi / n && t1 < kPi / n)) {
    throw ConfigError("cosine band requires [t0, t1] inside (-pi/n, pi/n)");
  }
  const double half_n = 0.5 * n;
  auto f = [n, half_n](double t) { return std::pow(std::cos(half_n * t), 2.0 / n); };
  auto lfp = [half_n](double t) { return -std::tan(half_n * t); };
  auto lfpp = [half_n](double t) {
    const double c = std::cos(half_n * t);
    return -half_n / (c * c);
  };
  return WarpedBandSpec(n, t0, t1, warp_from_log_derivatives(WarpKind::Cosine, f, lfp, lfpp));
}

WarpedBandSpec WarpedBandSpec::sinh_band(int n, double t0, double t1) {
  if (!(t0 > 0.0)) throw ConfigError("sinh band requires t0 > 0");
  const double half_n = 0.5 * n;
  auto f = [n, half_n](double t) { return std::pow(std::sinh(half_n * t), 2.0 / n); };
  auto lfp = [half_n](double t) { return 1.0 / std::tanh(half_n * t); };
  auto lfpp = [half_n](double t) {
    const double s = std::sinh(half_n * t);
    return -half_n / (s * s);
  };
  return WarpedBandSpec(n, t0, t1, warp_from_log_derivatives(WarpKind::Sinh, f, lfp, lfpp));
}

WarpedBandSpec WarpedBandSpec::power(int n, double t0, double t1) {
  if (!(t0 > 0.0)) throw ConfigError("power band requires t0 > 0");
  const double half_n = 0.5 * n;
  auto f = [n, half_n](double t) { return std::pow(half_n * t, 2.0 / n); };
  auto lfp = [n](double t) { return 2.0 / (n * t); };
  auto lfpp = [n](double t) { return -2.0 / (n * t * t); };
  return WarpedBandSpec(n, t0, t1, warp_from_log_derivatives(WarpKind::Power, f, lfp, lfpp));
}

WarpedBandSpec WarpedBandSpec::flat(int n, double t0, double t1) {
  Warp w;
  w.kind = WarpKind::Custom;
  w.f = [](double) { return 1.0; };
  w.fp = [](double) { return 0.0; };
  w.fpp = [](double) { return 0.0; };
  return WarpedBandSpec(n, t0, t1, std::move(w));
}

WarpedBandSpec WarpedBandSpec::custom(int n, double t0, double t1, Warp warp) {
  warp.kind = WarpKind::Custom;
  return WarpedBandSpec(n, t0, t1, std::move(warp));
}

void WarpedBandSpec::require_inside(double t) const {
  if (!interval_.contains(t)) {
    throw DomainError("t = " + format_double(t) + " outside band interval [" +
                      format_double(interval_.lo) + ", " + format_double(interval_.hi) + "]");
  }
}

double WarpedBandSpec::fd_step() const { return std::max(1e-5, 1e-5 * width()); }

double WarpedBandSpec::f(double t) const { return warp_.f(t); }

double WarpedBandSpec::f_prime(double t) const {
  if (warp_.fp) return warp_.fp(t);
  if (!warp_.fd_derivatives) {
    throw DerivativeError("custom warp carries no f' and finite differencing is disabled");
  }
  const double h = fd_step();
  // No ghost extension outside the interval: one-sided 2nd-order stencils
  // near the boundary.
  if (t - 2 * h < interval_.lo) return one_sided_diff_2(warp_.f, t, h, +1);
  if (t + 2 * h > interval_.hi) return one_sided_diff_2(warp_.f, t, h, -1);
  return central_diff_4(warp_.f, t, h);
}

double WarpedBandSpec::f_second(double t) const {
  if (warp_.fpp) return warp_.fpp(t);
  if (!warp_.fd_derivatives) {
    throw DerivativeError("custom warp carries no f'' and finite differencing is disabled");
  }
  const double h = fd_step();
  if (t - 2 * h < interval_.lo) return one_sided_diff2_2(warp_.f, t, h, +1);
  if (t + 2 * h > interval_.hi) return one_sided_diff2_2(warp_.f, t, h, -1);
  return central_diff2_4(warp_.f, t, h);
}

double mean_curvature(const WarpedBandSpec& band, double t) {
  band.require_inside(t);
  return (band.n() - 1) * band.f_prime(t) / band.f(t);
}

double mean_curvature_prime(const WarpedBandSpec& band, double t) {
  band.require_inside(t);
  const double lf = band.f_prime(t) / band.f(t);
  return (band.n() - 1) * (band.f_second(t) / band.f(t) - lf * lf);
}

double scalar_curvature(const WarpedBandSpec& band, double t) {
  band.require_inside(t);
  const int n = band.n();
  const double lf = band.f_prime(t) / band.f(t);
  return -2.0 * (n - 1) * band.f_second(t) / band.f(t) - (n - 1) * (n - 2) * lf * lf;
}

namespace {

// R(t) assembled from metric samples only: diag(1, F, ..., F) with F = f^2,
// Christoffels by central differences of F, Ricci by the generic contraction
//   R_bd = d_a Gamma^a_bd - d_b Gamma^a_ad + Gamma^a_ae Gamma^e_bd
//          - Gamma^a_be Gamma^e_ad,
// then R = g^bd R_bd. Index 0 is t; all fields depend on t alone.
double curvature_from_samples(const WarpedBandSpec& band, double t, double h) {
  const int dim = band.n();
  auto F = [&band](double s) {
    const double v = band.f(s);
    return v * v;
  };
  auto dF = [&](double s) { return (F(s + h) - F(s - h)) / (2 * h); };

  // Gamma^a_{bc}(s); zero unless the warped pattern matches.
  auto gamma = [&](int a, int b, int c, double s) -> double {
    if (a == 0 && b != 0 && b == c) return -0.5 * dF(s);            // Gamma^t_{ii}
    if (a != 0 && ((b == 0 && c == a) || (c == 0 && b == a))) {
      return dF(s) / (2 * F(s));                                    // Gamma^i_{ti}
    }
    return 0.0;
  };
  auto dgamma_dt = [&](int a, int b, int c, double s) {
    return (gamma(a, b, c, s + h) - gamma(a, b, c, s - h)) / (2 * h);
  };

  double scalar = 0.0;
  for (int b = 0; b < dim; ++b) {
    const int d = b;  // diagonal metric: only R_bb contributes to the trace
    double ricci = 0.0;
    // d_a Gamma^a_{bd}: spatial derivatives vanish by homogeneity.
    ricci += dgamma_dt(0, b, d, t);
    // - d_b Gamma^a_{ad}
    if (b == 0) {
      for (int a = 0; a < dim; ++a) ricci -= dgamma_dt(a, a, d, t);
    }
    for (int a = 0; a < dim; ++a) {
      for (int e = 0; e < dim; ++e) {
        ricci += gamma(a, a, e, t) * gamma(e, b, d, t);
        ricci -= gamma(a, b, e, t) * gamma(e, a, d, t);
      }
    }
    const double g_inv = (b == 0) ? 1.0 : 1.0 / F(t);
    scalar += g_inv * ricci;
  }
  return scalar;
}

}  // namespace

double curvature_oracle(const WarpedBandSpec& band, double t, double h, double tol) {
  if (!(h > 0.0)) throw ConfigError("curvature_oracle needs h > 0");
  if (t - 2 * h < band.t0() || t + 2 * h > band.t1()) {
    throw DomainError("curvature_oracle stencil t +/- 2h leaves the band interval");
  }
  const double coarse = curvature_from_samples(band, t, h);
  const double fine = curvature_from_samples(band, t, 0.5 * h);
  const double err_est = (4.0 / 3.0) * std::fabs(coarse - fine);
  if (err_est > tol * std::max(1.0, std::fabs(fine))) {
    throw ConfigError("curvature_oracle step too large: h = " + format_double(h) +
                      ", estimated error " + format_double(err_est));
  }
  return fine;
}

}  // namespace bandwidth
