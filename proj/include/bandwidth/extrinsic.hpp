#pragma once

#include <functional>

#include "bandwidth/grid_field.hpp"
#include "bandwidth/warped_band.hpp"

namespace bandwidth {

/// A scalar function of t with its derivative, the currency for profiles
/// like a(t), b(t), psi(t) and potentials p(t).
struct ScalarProfile {
  std::function<double(double)> value;
  std::function<double(double)> deriv;

  static ScalarProfile constant(double c) {
    return {[c](double) { return c; }, [](double) { return 0.0; }};
  }

  /// Linear interpolation of a grid; derivative from the 2nd-order
  /// difference grid. Good enough for sampled potentials.
  static ScalarProfile from_grid(const GridField1D& g) {
    auto d = g.derivative();
    return {[g](double t) { return g.value_at(t); },
            [d](double t) { return d.value_at(t); }};
  }
};

/// Second fundamental form k of the slice, restricted to the shapes the
/// symmetric setting admits:
///   UmbilicCmc:  k = (lambda/n) g
///   Diagonal:    k = a(t) dt^2 + b(t) f(t)^2 tau
///   Conformal:   k = psi(t) g
class ExtrinsicSpec {
 public:
  enum class Mode { UmbilicCmc, Diagonal, Conformal };

  static ExtrinsicSpec umbilic(double lambda);
  static ExtrinsicSpec diagonal(ScalarProfile a, ScalarProfile b);
  static ExtrinsicSpec conformal(ScalarProfile psi);
  static ExtrinsicSpec zero() { return umbilic(0.0); }

  Mode mode() const { return mode_; }
  double lambda() const { return lambda_; }

  double trace(int n, double t) const;        // tr_g k
  double trace_deriv(int n, double t) const;  // d/dt tr_g k
  double norm_sq(int n, double t) const;      // |k|^2_g
  double k_tt(int n, double t) const;         // k(d/dt, d/dt)
  double k_tt_deriv(int n, double t) const;
  double k_tan(int n, double t) const;        // tangential eigenvalue w.r.t. g
  double k_tan_deriv(int n, double t) const;
  /// tr_Sigma k on the leaf through t.
  double trace_on_leaf(int n, double t) const { return trace(n, t) - k_tt(n, t); }

  /// J_t, the only nonzero component of J = div k - d(tr k) by symmetry.
  double current_density(const WarpedBandSpec& band, double t) const;

 private:
  ExtrinsicSpec() = default;

  Mode mode_ = Mode::UmbilicCmc;
  double lambda_ = 0.0;
  ScalarProfile a_;
  ScalarProfile b_;
  ScalarProfile psi_;
};

/// Sampled constraint quantities at one t: 2 mu = R - |k|^2 + (tr k)^2 and
/// J from the closed form per extrinsic mode.
struct ConstraintSample {
  double t = 0.0;
  double mu = 0.0;
  double J_t = 0.0;
  double absJ = 0.0;
};

ConstraintSample constraint_sample(const WarpedBandSpec& band, const ExtrinsicSpec& k,
                                   double t);

/// Which boundary hypothesis a null-expansion value feeds. Both boundaries
/// use the same normal d/dt, so the value is the same; the tag is
/// bookkeeping for the checkers.
enum class Side { Plus, Minus };

/// theta(t) = H(t) + tr_Sigma k, computed with respect to d/dt.
double null_expansion(const WarpedBandSpec& band, const ExtrinsicSpec& k, double t,
                      Side side = Side::Plus);

/// theta(t) as a profile with analytic derivative.
ScalarProfile null_expansion_profile(const WarpedBandSpec& band, const ExtrinsicSpec& k);

/// k~ = k - p/(n-1) g: a hypersurface of prescribed expansion p for k
/// becomes a MOTS for k~ (theta_{k~} = theta_k - p pointwise).
ExtrinsicSpec transfer_to_mots(const ExtrinsicSpec& k, const ScalarProfile& p, int n);

}  // namespace bandwidth
