#pragma once

#include "bandwidth/grid_field.hpp"
#include "bandwidth/numerics.hpp"

namespace bandwidth {

/// Parameters of the comparison ODE
///   sigma + n/(n-1) eta^2 - 2 eta lambda + 2 eta' = 0,   eta' < 0.
struct EtaParams {
  double sigma = 0.0;
  double lambda = 0.0;
  int n = 3;
  double c = 0.0;  // free constant of integration

  /// sigma - (n-1)/n lambda^2; its sign picks the closed-form case.
  double discriminant() const { return sigma - (n - 1.0) / n * lambda * lambda; }

  /// Relative fuzz band for the exact trichotomy on floating input.
  double classify_eps() const;
};

enum class EtaCase { Rational, Tan, Coth };

/// Monotone branch for the Rational and Coth cases.
enum class Branch { Right /* t > c */, Left /* t < c */ };

/// Endpoints of the maximal domain of the Tan-case solution with c = 0.
/// Unbounded marker (+-infinity) otherwise.
struct DomainBounds {
  double r_minus = 0.0;
  double r_plus = 0.0;
  bool bounded = false;
};

EtaCase classify(const EtaParams& params);
DomainBounds domain_bounds(const EtaParams& params);

/// Closed-form solution with its maximal eta' < 0 domain:
///   Rational:  eta = m + 2(n-1)/(n(t-c))
///   Tan:       eta = m - b tan(beta (t-c)),   |beta (t-c)| < pi/2
///   Coth:      eta = m + a coth(gamma (t-c))
/// where m = (n-1) lambda / n.
class EtaSolution {
 public:
  EtaSolution(EtaParams params, Branch branch);

  double operator()(double t) const { return eta(t); }
  double eta(double t) const;
  double eta_prime(double t) const;

  /// eta is strictly decreasing on its domain; invert it.
  double inverse(double y) const;

  EtaCase kind() const { return case_; }
  Branch branch() const { return branch_; }
  const EtaParams& params() const { return params_; }
  /// Open interval on which the branch lives.
  Interval domain() const { return domain_; }
  bool contains(double t) const { return domain_.contains_open(t); }

  double midpoint() const { return m_; }  // (n-1) lambda / n
  double amplitude() const { return amp_; }
  double rate() const { return rate_; }

 private:
  void require_inside(double t) const;

  EtaParams params_;
  EtaCase case_;
  Branch branch_;
  Interval domain_;
  double m_ = 0.0;
  double amp_ = 0.0;   // b (Tan) or a (Coth); unused for Rational
  double rate_ = 0.0;  // beta (Tan) or gamma (Coth)
};

EtaSolution eta_closed(const EtaParams& params, Branch branch = Branch::Right);

/// Pick the integration constant so that eta(t_anchor) = y_anchor, choosing
/// the branch that contains the value. Throws DomainError when no monotone
/// solution passes through (y unreachable for the case).
EtaSolution eta_through(double sigma, double lambda, int n, double t_anchor, double y_anchor);

/// Fixed-step classical RK4 integration of the ODE from (t_init, eta_init),
/// both directions, truncated at blow-up (|eta| > 1e12).
struct EtaGrid {
  GridField1D eta;
  bool blew_up_low = false;
  bool blew_up_high = false;
  double last_valid_low = 0.0;
  double last_valid_high = 0.0;
  /// Max deviation against a step-halved rerun on shared points.
  double halving_error = 0.0;
};

EtaGrid eta_solve_numeric(double sigma, double lambda, int n, double t_init, double eta_init,
                          Interval range, double step);

/// Pointwise residual sigma + n/(n-1) eta^2 - 2 eta lambda + 2 eta'.
struct ResidualReport {
  GridField1D residual;
  double max_abs = 0.0;
  /// The eta' < 0 side condition. A zero-residual field that fails this is
  /// a stationary point of the flow, not a solution.
  bool eta_prime_negative = false;
};

/// Residual of a closed form, analytic eta', sampled on `window`.
ResidualReport ode_residual(const EtaSolution& sol, Interval window, int n_points);

/// Residual of a sampled solution, eta' by 2nd-order differences.
ResidualReport ode_residual(const GridField1D& eta, const EtaParams& params);

}  // namespace bandwidth
