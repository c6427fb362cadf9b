#ifndef ADSMANA_CLOSEDFORM_HPP
#define ADSMANA_CLOSEDFORM_HPP

#include <optional>

#include "adsmana/background.hpp"
#include "adsmana/specfn.hpp"

// Large-gamma closed forms for the two series, their hand-simplified
// d = 2, 3, 4 rows, and the Euler-Maclaurin bridge that quantifies the
// series <-> integral gap at any gamma.

namespace adsmana {
namespace closedform {

enum class Kind { q_c, beta_c, table_q, table_beta };

struct ClosedFormResult {
  double value = 0.0;
  int d = 0;
  Kind kind = Kind::q_c;
  std::optional<double> em_correction;      // boundary terms applied, if any
  std::optional<double> em_residual_bound;  // bound on the remaining gap
};

// q_c = 2 gamma alpha sum_{n=0}^{d-2} zeta_n [ Gamma((n+1)/2) F(-n/2; 1/2; -t)
//       - sqrt(2) sigma Omega' Gamma((n+2)/2) F((1-n)/2; 3/2; -t) ],
// with Omega' = Omega + Omega_d, t = sigma^2 Omega'^2 / 2 and
// zeta_n = 2^{(n-1)/2} sigma^{-n-1} C_n.
ClosedFormResult q_closed(const background::DetectorSetup& setup);

// beta_c with the same coefficients, F arguments (n+1)/2 and n/2+1 evaluated
// at +sigma^2 Omega_d^2 / 2, and the extra factor e^{-sigma^2(Omega^2+Omega_d^2)/2}.
ClosedFormResult beta_closed(const background::DetectorSetup& setup);

// Hand-simplified erfc/exponential rows for d = 2, 3, 4; algebraically equal
// to the generic forms above.
ClosedFormResult q_table(int d, const background::DetectorSetup& setup);
ClosedFormResult beta_table(int d, const background::DetectorSetup& setup);

// Which of the two series the Euler-Maclaurin machinery targets.
enum class EmKind { excitation, coherence };

// amplitude * P(x) * exp(-sigma^2 (center + x)^2 / 2); closed under
// differentiation, which maps P -> P' - sigma^2 (center + x) P.
struct EmTermFunction {
  specfn::Polynomial poly;
  double amplitude = 1.0;
  double center = 0.0;
  double sigma = 1.0;

  double operator()(double x) const;
  EmTermFunction derivative() const;
};

// The summand of the mode series viewed as a function of x = n / gamma.
EmTermFunction em_term_function(const background::DetectorSetup& setup,
                                EmKind kind = EmKind::excitation);

// Series estimate from the closed form plus Euler-Maclaurin boundary terms,
//   value = integral + f(0)/2 - sum_{k<=m} B_{2k}/(2k)! Delta^{2k-1} f^{(2k-1)}(0),
// with Delta = 1/gamma and the b = infinity boundary terms dropped (the
// Gaussian decay annihilates them). em_residual_bound bounds |value - series|
// through the Bernoulli-kernel remainder integral, evaluated by quadrature
// over unit intervals of n.
ClosedFormResult euler_maclaurin_correct(const background::DetectorSetup& setup,
                                         int m,
                                         EmKind kind = EmKind::excitation);

}  // namespace closedform
}  // namespace adsmana

#endif
