#include "bandwidth/extrinsic.hpp"

#include <cmath>
#include <utility>

#include "bandwidth/errors.hpp"

namespace bandwidth {

ExtrinsicSpec ExtrinsicSpec::umbilic(double lambda) {
  ExtrinsicSpec k;
  k.mode_ = Mode::UmbilicCmc;
  k.lambda_ = lambda;
  return k;
}

ExtrinsicSpec ExtrinsicSpec::diagonal(ScalarProfile a, ScalarProfile b) {
  if (!a.value || !a.deriv || !b.value || !b.deriv) {
    throw ConfigError("diagonal extrinsic spec needs a(t), b(t) with derivatives");
  }
  ExtrinsicSpec k;
  k.mode_ = Mode::Diagonal;
  k.a_ = std::move(a);
  k.b_ = std::move(b);
  return k;
}

ExtrinsicSpec ExtrinsicSpec::conformal(ScalarProfile psi) {
  if (!psi.value || !psi.deriv) {
    throw ConfigError("conformal extrinsic spec needs psi(t) with derivative");
  }
  ExtrinsicSpec k;
  k.mode_ = Mode::Conformal;
  k.psi_ = std::move(psi);
  return k;
}

double ExtrinsicSpec::trace(int n, double t) const {
  switch (mode_) {
    case Mode::UmbilicCmc: return lambda_;
    case Mode::Diagonal: return a_.value(t) + (n - 1) * b_.value(t);
    case Mode::Conformal: return n * psi_.value(t);
  }
  return 0.0;
}

double ExtrinsicSpec::trace_deriv(int n, double t) const {
  switch (mode_) {
    case Mode::UmbilicCmc: return 0.0;
    case Mode::Diagonal: return a_.deriv(t) + (n - 1) * b_.deriv(t);
    case Mode::Conformal: return n * psi_.deriv(t);
  }
  return 0.0;
}

double ExtrinsicSpec::norm_sq(int n, double t) const {
  switch (mode_) {
    case Mode::UmbilicCmc: return lambda_ * lambda_ / n;
    case Mode::Diagonal: {
      const double a = a_.value(t);
      const double b = b_.value(t);
      return a * a + (n - 1) * b * b;
    }
    case Mode::Conformal: {
      const double p = psi_.value(t);
      return n * p * p;
    }
  }
  return 0.0;
}

double ExtrinsicSpec::k_tt(int n, double t) const {
  switch (mode_) {
    case Mode::UmbilicCmc: return lambda_ / n;
    case Mode::Diagonal: return a_.value(t);
    case Mode::Conformal: return psi_.value(t);
  }
  return 0.0;
}

double ExtrinsicSpec::k_tt_deriv(int n, double t) const {
  (void)n;
  switch (mode_) {
    case Mode::UmbilicCmc: return 0.0;
    case Mode::Diagonal: return a_.deriv(t);
    case Mode::Conformal: return psi_.deriv(t);
  }
  return 0.0;
}

double ExtrinsicSpec::k_tan(int n, double t) const {
  switch (mode_) {
    case Mode::UmbilicCmc: return lambda_ / n;
    case Mode::Diagonal: return b_.value(t);
    case Mode::Conformal: return psi_.value(t);
  }
  return 0.0;
}

double ExtrinsicSpec::k_tan_deriv(int n, double t) const {
  (void)n;
  switch (mode_) {
    case Mode::UmbilicCmc: return 0.0;
    case Mode::Diagonal: return b_.deriv(t);
    case Mode::Conformal: return psi_.deriv(t);
  }
  return 0.0;
}

double ExtrinsicSpec::current_density(const WarpedBandSpec& band, double t) const {
  const int n = band.n();
  switch (mode_) {
    case Mode::UmbilicCmc:
      return 0.0;
    case Mode::Conformal:
      // J = div(psi g) - d(n psi) = (1 - n) psi' dt.
      return (1.0 - n) * psi_.deriv(t);
    case Mode::Diagonal: {
      // (div k)_t = a' + H (a - b), d(tr k)_t = a' + (n-1) b', hence
      // J_t = (n-1) [ (f'/f)(a - b) - b' ].
      const double lf = band.f_prime(t) / band.f(t);
      return (n - 1) * (lf * (a_.value(t) - b_.value(t)) - b_.deriv(t));
    }
  }
  return 0.0;
}

ConstraintSample constraint_sample(const WarpedBandSpec& band, const ExtrinsicSpec& k,
                                   double t) {
  band.require_inside(t);
  const int n = band.n();
  const double R = scalar_curvature(band, t);
  const double tr = k.trace(n, t);
  ConstraintSample s;
  s.t = t;
  s.mu = 0.5 * (R - k.norm_sq(n, t) + tr * tr);
  s.J_t = k.current_density(band, t);
  s.absJ = std::fabs(s.J_t);
  return s;
}

double null_expansion(const WarpedBandSpec& band, const ExtrinsicSpec& k, double t,
                      Side /*side*/) {
  band.require_inside(t);
  return mean_curvature(band, t) + k.trace_on_leaf(band.n(), t);
}

ScalarProfile null_expansion_profile(const WarpedBandSpec& band, const ExtrinsicSpec& k) {
  const int n = band.n();
  auto value = [band, k, n](double t) {
    return mean_curvature(band, t) + (n - 1) * k.k_tan(n, t);
  };
  auto deriv = [band, k, n](double t) {
    return mean_curvature_prime(band, t) + (n - 1) * k.k_tan_deriv(n, t);
  };
  return {value, deriv};
}

ExtrinsicSpec transfer_to_mots(const ExtrinsicSpec& k, const ScalarProfile& p, int n) {
  if (!p.value || !p.deriv) throw ConfigError("transfer_to_mots needs p with derivative");
  const double scale = 1.0 / (n - 1);
  switch (k.mode()) {
    case ExtrinsicSpec::Mode::UmbilicCmc:
    case ExtrinsicSpec::Mode::Conformal: {
      ScalarProfile psi{
          [k, p, n, scale](double t) { return k.k_tan(n, t) - scale * p.value(t); },
          [k, p, n, scale](double t) { return k.k_tan_deriv(n, t) - scale * p.deriv(t); }};
      return ExtrinsicSpec::conformal(psi);
    }
    case ExtrinsicSpec::Mode::Diagonal: {
      ScalarProfile a{
          [k, p, n, scale](double t) { return k.k_tt(n, t) - scale * p.value(t); },
          [k, p, n, scale](double t) { return k.k_tt_deriv(n, t) - scale * p.deriv(t); }};
      ScalarProfile b{
          [k, p, n, scale](double t) { return k.k_tan(n, t) - scale * p.value(t); },
          [k, p, n, scale](double t) { return k.k_tan_deriv(n, t) - scale * p.deriv(t); }};
      return ExtrinsicSpec::diagonal(a, b);
    }
  }
  throw InternalError("unhandled extrinsic mode in transfer_to_mots");
}

}  // namespace bandwidth
