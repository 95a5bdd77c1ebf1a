#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bandwidth/numerics.hpp"

namespace bandwidth {

/// Uniformly sampled scalar field on [t0, t1]. Carrier for mu, J, theta,
/// residuals, u, u' and everything else the checkers pass around.
class GridField1D {
 public:
  GridField1D() = default;
  GridField1D(double t0, double t1, std::vector<double> values);

  static GridField1D sample(double t0, double t1, int n,
                            const std::function<double(double)>& fn);

  int size() const { return static_cast<int>(values_.size()); }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  double step() const;
  double t(int i) const { return grid_point(t0_, t1_, i, size()); }
  double operator[](int i) const { return values_[i]; }
  double& operator[](int i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  /// Linear interpolation; clamps to the end values outside [t0, t1].
  double value_at(double t) const;

  double max_abs() const { return pairwise_max_abs(values_); }
  double min() const { return pairwise_min(values_); }
  double max() const { return pairwise_max(values_); }

  /// 2nd-order derivative grid: central differences inside, one-sided
  /// 2nd-order stencils at the boundary (no ghost extension).
  GridField1D derivative() const;

 private:
  double t0_ = 0.0;
  double t1_ = 1.0;
  std::vector<double> values_;
};

/// A field plus a column label, for CSV/SVG emission.
struct NamedField {
  std::string name;
  GridField1D field;
};

}  // namespace bandwidth
