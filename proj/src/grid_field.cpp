#include "bandwidth/grid_field.hpp"

#include <cmath>
#include <stdexcept>

#include "bandwidth/errors.hpp"

namespace bandwidth {

GridField1D::GridField1D(double t0, double t1, std::vector<double> values)
    : t0_(t0), t1_(t1), values_(std::move(values)) {
  if (values_.size() < 2) throw ConfigError("GridField1D needs at least 2 samples");
  if (!(t1_ > t0_)) throw ConfigError("GridField1D needs t1 > t0");
}

GridField1D GridField1D::sample(double t0, double t1, int n,
                                const std::function<double(double)>& fn) {
  if (n < 2) throw ConfigError("GridField1D::sample needs n >= 2");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = fn(grid_point(t0, t1, i, n));
  return GridField1D(t0, t1, std::move(v));
}

double GridField1D::step() const { return (t1_ - t0_) / static_cast<double>(size() - 1); }

double GridField1D::value_at(double t) const {
  if (t <= t0_) return values_.front();
  if (t >= t1_) return values_.back();
  const double s = (t - t0_) / (t1_ - t0_) * static_cast<double>(size() - 1);
  const int i = static_cast<int>(std::floor(s));
  const int j = i + 1 >= size() ? size() - 1 : i + 1;
  const double w = s - static_cast<double>(i);
  return values_[static_cast<std::size_t>(i)] * (1.0 - w) +
         values_[static_cast<std::size_t>(j)] * w;
}

GridField1D GridField1D::derivative() const {
  const int n = size();
  const double h = step();
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 1; i + 1 < n; ++i) {
    d[static_cast<std::size_t>(i)] = (values_[static_cast<std::size_t>(i + 1)] -
                                      values_[static_cast<std::size_t>(i - 1)]) /
                                     (2 * h);
  }
  d.front() = (-3 * values_[0] + 4 * values_[1] - values_[2]) / (2 * h);
  d.back() = (3 * values_[static_cast<std::size_t>(n - 1)] -
              4 * values_[static_cast<std::size_t>(n - 2)] +
              values_[static_cast<std::size_t>(n - 3)]) /
             (2 * h);
  return GridField1D(t0_, t1_, std::move(d));
}

}  // namespace bandwidth
