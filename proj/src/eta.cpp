#include "bandwidth/eta.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "bandwidth/errors.hpp"

namespace bandwidth {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBlowUp = 1e12;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double EtaParams::classify_eps() const {
  return 1e-12 * std::max({1.0, std::fabs(sigma), lambda * lambda});
}

EtaCase classify(const EtaParams& params) {
  if (params.n < 2) throw ConfigError("eta params need n >= 2");
  const double d = params.discriminant();
  const double eps = params.classify_eps();
  if (d > eps) return EtaCase::Tan;
  if (d < -eps) return EtaCase::Coth;
  return EtaCase::Rational;
}

DomainBounds domain_bounds(const EtaParams& params) {
  DomainBounds bounds;
  if (classify(params) != EtaCase::Tan) {
    bounds.bounded = false;
    bounds.r_minus = -kInf;
    bounds.r_plus = kInf;
    return bounds;
  }
  const double n = params.n;
  const double d = params.discriminant();
  const double root = std::sqrt((n - 1.0) / n * d);
  bounds.bounded = true;
  bounds.r_plus = (n - 1.0) * kPi / n / root;
  bounds.r_minus = -bounds.r_plus;
  return bounds;
}

EtaSolution::EtaSolution(EtaParams params, Branch branch)
    : params_(params), case_(classify(params)), branch_(branch) {
  const double n = params_.n;
  m_ = (n - 1.0) / n * params_.lambda;
  const double d = params_.discriminant();
  switch (case_) {
    case EtaCase::Rational:
      domain_ = (branch_ == Branch::Right) ? Interval{params_.c, kInf}
                                           : Interval{-kInf, params_.c};
      break;
    case EtaCase::Tan: {
      amp_ = std::sqrt((n - 1.0) / n * d);
      rate_ = n * amp_ / (2.0 * (n - 1.0));
      const double half = 0.5 * kPi / rate_;
      domain_ = {params_.c - half, params_.c + half};
      branch_ = Branch::Right;  // single connected domain
      break;
    }
    case EtaCase::Coth: {
      amp_ = std::sqrt((n - 1.0) / n * (-d));
      rate_ = n * amp_ / (2.0 * (n - 1.0));
      domain_ = (branch_ == Branch::Right) ? Interval{params_.c, kInf}
                                           : Interval{-kInf, params_.c};
      break;
    }
  }
}

void EtaSolution::require_inside(double t) const {
  if (!domain_.contains_open(t)) {
    throw DomainError("t = " + format_double(t) + " outside the eta domain (" +
                      format_double(domain_.lo) + ", " + format_double(domain_.hi) + ")");
  }
}

double EtaSolution::eta(double t) const {
  require_inside(t);
  const double n = params_.n;
  const double x = t - params_.c;
  switch (case_) {
    case EtaCase::Rational: return m_ + 2.0 * (n - 1.0) / (n * x);
    case EtaCase::Tan: return m_ - amp_ * std::tan(rate_ * x);
    case EtaCase::Coth: return m_ + amp_ / std::tanh(rate_ * x);
  }
  return 0.0;
}

double EtaSolution::eta_prime(double t) const {
  require_inside(t);
  const double n = params_.n;
  const double x = t - params_.c;
  switch (case_) {
    case EtaCase::Rational: return -2.0 * (n - 1.0) / (n * x * x);
    case EtaCase::Tan: {
      const double cs = std::cos(rate_ * x);
      return -amp_ * rate_ / (cs * cs);
    }
    case EtaCase::Coth: {
      const double sh = std::sinh(rate_ * x);
      return -amp_ * rate_ / (sh * sh);
    }
  }
  return 0.0;
}

double EtaSolution::inverse(double y) const {
  const double n = params_.n;
  switch (case_) {
    case EtaCase::Rational: {
      const double dy = y - m_;
      if ((branch_ == Branch::Right && !(dy > 0.0)) ||
          (branch_ == Branch::Left && !(dy < 0.0))) {
        throw DomainError("value y = " + format_double(y) +
                          " not attained on this Rational branch");
      }
      return params_.c + 2.0 * (n - 1.0) / (n * dy);
    }
    case EtaCase::Tan:
      return params_.c + std::atan((m_ - y) / amp_) / rate_;
    case EtaCase::Coth: {
      const double w = (y - m_) / amp_;
      if ((branch_ == Branch::Right && !(w > 1.0)) || (branch_ == Branch::Left && !(w < -1.0))) {
        throw DomainError("value y = " + format_double(y) +
                          " not attained on this Coth branch");
      }
      return params_.c + std::atanh(1.0 / w) / rate_;
    }
  }
  throw InternalError("unhandled eta case in inverse");
}

EtaSolution eta_closed(const EtaParams& params, Branch branch) {
  return EtaSolution(params, branch);
}

EtaSolution eta_through(double sigma, double lambda, int n, double t_anchor,
                        double y_anchor) {
  EtaParams params{sigma, lambda, n, 0.0};
  const double m = (n - 1.0) / n * lambda;
  switch (classify(params)) {
    case EtaCase::Rational: {
      const double dy = y_anchor - m;
      if (dy == 0.0) {
        throw DomainError("no decreasing Rational solution passes through eta = m");
      }
      params.c = t_anchor - 2.0 * (n - 1.0) / (n * dy);
      return EtaSolution(params, dy > 0.0 ? Branch::Right : Branch::Left);
    }
    case EtaCase::Tan: {
      const double d = params.discriminant();
      const double b = std::sqrt((n - 1.0) / n * d);
      const double beta = n * b / (2.0 * (n - 1.0));
      params.c = t_anchor - std::atan((m - y_anchor) / b) / beta;
      return EtaSolution(params, Branch::Right);
    }
    case EtaCase::Coth: {
      const double d = params.discriminant();
      const double a = std::sqrt((n - 1.0) / n * (-d));
      const double gamma = n * a / (2.0 * (n - 1.0));
      const double w = (y_anchor - m) / a;
      if (!(std::fabs(w) > 1.0)) {
        throw DomainError("no decreasing Coth solution passes through eta = " +
                          format_double(y_anchor) + " (value between the roots)");
      }
      params.c = t_anchor - std::atanh(1.0 / w) / gamma;
      return EtaSolution(params, w > 1.0 ? Branch::Right : Branch::Left);
    }
  }
  throw InternalError("unhandled eta case in eta_through");
}

namespace {

struct RayResult {
  std::vector<double> values;  // excludes the initial point
  bool blew_up = false;
  double last_valid = 0.0;
};

// One RK4 ray of eta' = -(sigma + n/(n-1) eta^2 - 2 lambda eta)/2.
RayResult integrate_ray(double sigma, double lambda, int n, double t_init, double eta_init,
                        int steps, double signed_step) {
  auto rhs = [sigma, lambda, n](double e) {
    return -0.5 * (sigma + n / (n - 1.0) * e * e - 2.0 * lambda * e);
  };
  RayResult out;
  out.last_valid = t_init;
  double e = eta_init;
  double t = t_init;
  out.values.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double h = signed_step;
    const double k1 = rhs(e);
    const double k2 = rhs(e + 0.5 * h * k1);
    const double k3 = rhs(e + 0.5 * h * k2);
    const double k4 = rhs(e + h * k3);
    e += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    if (!std::isfinite(e) || std::fabs(e) > kBlowUp) {
      out.blew_up = true;
      break;
    }
    out.values.push_back(e);
    out.last_valid = t;
  }
  return out;
}

}  // namespace

EtaGrid eta_solve_numeric(double sigma, double lambda, int n, double t_init, double eta_init,
                          Interval range, double step) {
  if (n < 2) throw ConfigError("eta_solve_numeric needs n >= 2");
  if (!(step > 0.0)) throw ConfigError("eta_solve_numeric needs step > 0");
  if (!(range.lo <= t_init && t_init <= range.hi)) {
    throw ConfigError("t_init outside the requested range");
  }
  if (step >= range.length() / 16.0) {
    throw ConfigError("step too coarse: need step < |range| / 16");
  }
  if (!(std::fabs(eta_init) < kBlowUp)) {
    throw ConfigError("eta_init already beyond the blow-up threshold");
  }

  const int steps_lo = static_cast<int>(std::floor((t_init - range.lo) / step + 1e-12));
  const int steps_hi = static_cast<int>(std::floor((range.hi - t_init) / step + 1e-12));

  const RayResult down = integrate_ray(sigma, lambda, n, t_init, eta_init, steps_lo, -step);
  const RayResult up = integrate_ray(sigma, lambda, n, t_init, eta_init, steps_hi, +step);

  const int got_lo = static_cast<int>(down.values.size());
  const int got_hi = static_cast<int>(up.values.size());
  if (got_lo + got_hi + 1 < 2) {
    throw ConfigError("solution blew up immediately in both directions");
  }

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(got_lo + got_hi + 1));
  for (int i = got_lo - 1; i >= 0; --i) values.push_back(down.values[static_cast<std::size_t>(i)]);
  values.push_back(eta_init);
  for (int i = 0; i < got_hi; ++i) values.push_back(up.values[static_cast<std::size_t>(i)]);

  EtaGrid grid{GridField1D(t_init - got_lo * step, t_init + got_hi * step, std::move(values)),
               down.blew_up,
               up.blew_up,
               down.last_valid,
               up.last_valid,
               0.0};

  // Step-halving error estimate on shared points.
  const RayResult down2 =
      integrate_ray(sigma, lambda, n, t_init, eta_init, 2 * got_lo, -0.5 * step);
  const RayResult up2 = integrate_ray(sigma, lambda, n, t_init, eta_init, 2 * got_hi, 0.5 * step);
  double dev = 0.0;
  for (int i = 0; i < got_lo; ++i) {
    const std::size_t j = 2 * static_cast<std::size_t>(i) + 1;
    if (j < down2.values.size()) {
      dev = std::max(dev, std::fabs(down.values[static_cast<std::size_t>(i)] -
                                    down2.values[j]));
    }
  }
  for (int i = 0; i < got_hi; ++i) {
    const std::size_t j = 2 * static_cast<std::size_t>(i) + 1;
    if (j < up2.values.size()) {
      dev = std::max(dev, std::fabs(up.values[static_cast<std::size_t>(i)] - up2.values[j]));
    }
  }
  grid.halving_error = dev;
  return grid;
}

ResidualReport ode_residual(const EtaSolution& sol, Interval window, int n_points) {
  if (n_points < 2) throw ConfigError("ode_residual needs n_points >= 2");
  const Interval dom = sol.domain();
  if (!(window.lo > dom.lo && window.hi < dom.hi && window.lo < window.hi)) {
    throw DomainError("residual window not inside the eta domain");
  }
  const EtaParams& p = sol.params();
  const double n = p.n;
  std::vector<double> res(static_cast<std::size_t>(n_points));
  double worst_prime = -kInf;
  for (int i = 0; i < n_points; ++i) {
    const double t = grid_point(window.lo, window.hi, i, n_points);
    const double e = sol.eta(t);
    const double ep = sol.eta_prime(t);
    worst_prime = std::max(worst_prime, ep);
    res[static_cast<std::size_t>(i)] =
        p.sigma + n / (n - 1.0) * e * e - 2.0 * e * p.lambda + 2.0 * ep;
  }
  ResidualReport report{GridField1D(window.lo, window.hi, std::move(res)), 0.0,
                        worst_prime < 0.0};
  report.max_abs = report.residual.max_abs();
  return report;
}

ResidualReport ode_residual(const GridField1D& eta, const EtaParams& params) {
  const double n = params.n;
  const GridField1D deriv = eta.derivative();
  std::vector<double> res(static_cast<std::size_t>(eta.size()));
  for (int i = 0; i < eta.size(); ++i) {
    const double e = eta[i];
    res[static_cast<std::size_t>(i)] =
        params.sigma + n / (n - 1.0) * e * e - 2.0 * e * params.lambda + 2.0 * deriv[i];
  }
  ResidualReport report{GridField1D(eta.t0(), eta.t1(), std::move(res)), 0.0,
                        deriv.max() < 0.0};
  report.max_abs = report.residual.max_abs();
  return report;
}

}  // namespace bandwidth
