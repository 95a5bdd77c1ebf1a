#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bandwidth {

/// Closed interval [lo, hi] unless stated otherwise at the use site.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
  bool contains_open(double t) const { return t > lo && t < hi; }
  double clamp(double t) const { return t < lo ? lo : (t > hi ? hi : t); }
};

/// Evaluation point for grids: endpoints exact, interior by lerp so the
/// layout is bit-reproducible regardless of accumulation order.
inline double grid_point(double lo, double hi, int i, int n) {
  if (i == 0) return lo;
  if (i == n - 1) return hi;
  const double s = static_cast<double>(i) / static_cast<double>(n - 1);
  return lo + (hi - lo) * s;
}

namespace detail {

template <class T, class Op>
T pairwise_reduce_impl(std::span<const T> xs, Op op) {
  // Fixed tree over index ranges: the result does not depend on the order in
  // which chunks are evaluated, which keeps parallel and serial runs equal.
  if (xs.size() <= 8) {
    T acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = op(acc, xs[i]);
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return op(pairwise_reduce_impl(xs.first(half), op),
            pairwise_reduce_impl(xs.subspan(half), op));
}

}  // namespace detail

inline double pairwise_min(std::span<const double> xs) {
  return detail::pairwise_reduce_impl(xs, [](double a, double b) { return a < b ? a : b; });
}

inline double pairwise_max(std::span<const double> xs) {
  return detail::pairwise_reduce_impl(xs, [](double a, double b) { return a > b ? a : b; });
}

inline double pairwise_sum(std::span<const double> xs) {
  return detail::pairwise_reduce_impl(xs, [](double a, double b) { return a + b; });
}

inline double pairwise_max_abs(std::span<const double> xs) {
  std::vector<double> a(xs.begin(), xs.end());
  for (double& x : a) x = std::fabs(x);
  return pairwise_max(a);
}

/// Composite trapezoid over uniformly spaced samples.
inline double trapezoid(std::span<const double> values, double step) {
  if (values.size() < 2) return 0.0;
  std::vector<double> w(values.begin(), values.end());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return pairwise_sum(w) * step;
}

/// 4th-order central first derivative of a callable. Used for custom warps
/// that opt into finite differencing.
inline double central_diff_4(const std::function<double(double)>& f, double t, double h) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

/// 4th-order central second derivative.
inline double central_diff2_4(const std::function<double(double)>& f, double t, double h) {
  return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) /
         (12 * h * h);
}

/// One-sided 2nd-order first derivative (sign = +1 forward, -1 backward).
inline double one_sided_diff_2(const std::function<double(double)>& f, double t, double h,
                               int sign) {
  const double s = static_cast<double>(sign);
  return s * (-3 * f(t) + 4 * f(t + s * h) - f(t + 2 * s * h)) / (2 * h);
}

/// One-sided 2nd-order second derivative.
inline double one_sided_diff2_2(const std::function<double(double)>& f, double t, double h,
                                int sign) {
  const double s = static_cast<double>(sign);
  return (2 * f(t) - 5 * f(t + s * h) + 4 * f(t + 2 * s * h) - f(t + 3 * s * h)) / (h * h);
}

/// Canonical float formatting for all emitted files ("%.12g").
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Round to 12 significant digits; reports store numbers canonicalized this
/// way so emitted JSON is diff-stable.
inline double canonical_round(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace bandwidth
