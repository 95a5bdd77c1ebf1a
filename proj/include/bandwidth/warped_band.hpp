#pragma once

#include <functional>
#include <string>

#include "bandwidth/numerics.hpp"

namespace bandwidth {

enum class WarpKind { Cosine, Sinh, Power, Custom };

/// Warp factor of the band metric dt^2 + f(t)^2 tau, tau the unit flat torus
/// metric. Catalog entries ship analytic f', f''; custom warps may opt into
/// 4th-order finite differences instead.
struct Warp {
  WarpKind kind = WarpKind::Custom;
  std::function<double(double)> f;
  std::function<double(double)> fp;   // may be empty for Custom
  std::function<double(double)> fpp;  // may be empty for Custom
  bool fd_derivatives = false;
};

/// A band T^{n-1} x [t0, t1] with metric dt^2 + f(t)^2 tau.
///
/// Immutable after construction; every query is a pure function of (this, t).
class WarpedBandSpec {
 public:
  WarpedBandSpec(int n, double t0, double t1, Warp warp);

  /// f(t) = cos(nt/2)^{2/n}; requires [t0, t1] inside (-pi/n, pi/n).
  static WarpedBandSpec cosine(int n, double t0, double t1);
  /// f(t) = sinh(nt/2)^{2/n}; requires t0 > 0.
  static WarpedBandSpec sinh_band(int n, double t0, double t1);
  /// f(t) = (nt/2)^{2/n}; requires t0 > 0.
  static WarpedBandSpec power(int n, double t0, double t1);
  /// f == 1 (flat product metric).
  static WarpedBandSpec flat(int n, double t0, double t1);
  static WarpedBandSpec custom(int n, double t0, double t1, Warp warp);

  int n() const { return n_; }
  double t0() const { return interval_.lo; }
  double t1() const { return interval_.hi; }
  Interval interval() const { return interval_; }
  double width() const { return interval_.length(); }
  WarpKind kind() const { return warp_.kind; }

  double f(double t) const;
  double f_prime(double t) const;
  double f_second(double t) const;

  void require_inside(double t) const;

 private:
  double fd_step() const;

  int n_;
  Interval interval_;
  Warp warp_;
};

/// H(t) = (n-1) f'(t)/f(t): divergence of the unit normal d/dt of the leaf.
double mean_curvature(const WarpedBandSpec& band, double t);

/// H'(t) = (n-1)(f''/f - (f'/f)^2), analytic.
double mean_curvature_prime(const WarpedBandSpec& band, double t);

/// Scalar curvature of dt^2 + f^2 tau:
///   R = -2(n-1) f''/f - (n-1)(n-2) (f'/f)^2.
double scalar_curvature(const WarpedBandSpec& band, double t);

/// Independent verification path: R(t) from samples of f only, through
/// discrete Christoffel symbols and the Ricci contraction, second-order
/// central differences of step h. Runs at h and h/2 and refuses steps whose
/// Richardson error estimate exceeds `tol`; returns the h/2 evaluation.
double curvature_oracle(const WarpedBandSpec& band, double t, double h, double tol = 1e-4);

}  // namespace bandwidth
