#ifndef ADSMANA_ORACLE_HPP
#define ADSMANA_ORACLE_HPP

#include <utility>
#include <vector>

#include "adsmana/background.hpp"

// Independent quadrature route to q and beta. At finite regulator eps both
// the adaptive integral and the regulated mode series are exact expressions
// for the same number, which makes the comparison a genuine cross-check of
// everything upstream (correlator, special functions, series summation).

namespace adsmana {
namespace oracle {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  double epsilon = 0.0;
};

struct ExtrapolationResult {
  double limit_value = 0.0;
  std::vector<double> eps_sequence;
  std::vector<double> per_eps_values;
  int model_order = 2;
  double discrepancy = 0.0;  // shift when the highest-order model term is dropped
};

inline constexpr int kPanelCap = 10000;

// q(eps) = (lambda^2 sigma / 2) sqrt(pi/2)
//          int ds e^{-s^2/2sigma^2} e^{-i Omega s} W(s; eps)
// over s in [-10 sigma, 10 sigma]; the truncated Gaussian tail is bounded
// analytically and added to the error estimate. The imaginary part of the
// integral must vanish within 10x the error estimate.
QuadratureResult quad_q(const background::DetectorSetup& setup, double eps,
                        double quad_tol = 1e-11);

// Full-line symmetric prescription for the renormalized coherence,
//   beta(eps) = -(lambda^2 sqrt(2 pi) sigma / 8) e^{-sigma^2 Omega^2/2}
//               int_-inf^inf ds e^{-s^2/2sigma^2} W(s; eps).
QuadratureResult quad_beta(const background::DetectorSetup& setup, double eps,
                           double quad_tol = 1e-11);

// Fits value(eps) = v0 + c1 eps + c2 eps^2 through the three smallest
// regulators and reports v0; the discrepancy is the change when the
// quadratic term is dropped. Input pairs must have strictly decreasing
// positive eps.
ExtrapolationResult richardson_extrapolate(
    const std::vector<std::pair<double, double>>& pairs);

}  // namespace oracle
}  // namespace adsmana

#endif
