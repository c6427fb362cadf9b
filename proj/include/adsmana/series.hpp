#ifndef ADSMANA_SERIES_HPP
#define ADSMANA_SERIES_HPP

#include <complex>

#include "adsmana/background.hpp"

// Exact mode-series evaluation of the transition probability q, the
// renormalized coherence beta, the harvest discriminant Delta, and the
// flat-space closed forms they limit to.
//
// All three physical series share the structure
//   value = prefactor * sum_n Gamma(d+n-1)/Gamma(n+1) * (Gaussian factor),
// summed in log space. Summation stops at the first n past the minimum term
// count where term_n <= tol * partial_sum and the next term ratio has
// dropped below 1/2; the tail is then bounded geometrically.

namespace adsmana {
namespace series {

enum class Method { series, series_with_regulator, minkowski_closed };

struct SeriesResult {
  double value = 0.0;
  Method method = Method::series;
  double epsilon = 0.0;        // regulator used; 0 = the limit was taken
  long long terms_used = 1;
  double tail_bound = 0.0;     // truncation error relative to |value|
  bool term_cap_hit = false;
};

inline constexpr long long kTermCap = 1000000;
inline constexpr double kDefaultTol = 1e-14;

// q = 2 alpha sum_n w_n exp(-sigma^2 (Omega + Omega_n)^2 / 2)
SeriesResult q_series(const background::DetectorSetup& setup,
                      double tol = kDefaultTol);

// Same series with the per-term factor exp(-(2n+d-1) eps), eps > 0; tends to
// q_series from below as eps -> 0+.
SeriesResult q_series_with_regulator(const background::DetectorSetup& setup,
                                     double eps, double tol = kDefaultTol);

// beta = -alpha sum_n w_n exp(-sigma^2 (Omega^2 + Omega_n^2) / 2)  (< 0)
SeriesResult beta_series_renormalized(const background::DetectorSetup& setup,
                                      double tol = kDefaultTol);
SeriesResult beta_series_renormalized_regulated(
    const background::DetectorSetup& setup, double eps,
    double tol = kDefaultTol);

// Delta = 2 alpha sum_n w_n exp(-sigma^2 (Omega^2+Omega_n^2)/2)
//         * (1 - exp(-sigma^2 Omega Omega_n))   (> 0 term by term)
SeriesResult delta_series(const background::DetectorSetup& setup,
                          double tol = kDefaultTol);

// Delta := -(q + 2 beta); defined for q > 0 and real beta <= 0.
double delta_discriminant(double q, double beta);

// Divergence diagnostic: N+1 leading terms of the coherence series before
// renormalization. The real part reproduces the renormalized partial sum;
// the imaginary partial sums grow without bound in N. Each term pairs
// exp(-sigma^2 Omega_n^2 / 2) with erfi(sigma Omega_n / sqrt 2) through
// erfi_scaled, so no intermediate overflows.
std::complex<double> beta_series_raw(const background::DetectorSetup& setup,
                                     long long n_terms);

// Flat-space limits.
//   q_M = lambda^2 Omega Gamma(d-1) pi sigma^{4-d} / (2 (8 pi)^{d/2} Gamma(d/2))
//         * exp(-sigma^2 Omega^2/2) U(d/2, 3/2, sigma^2 Omega^2/2),  Omega > 0
double minkowski_q(int d, double sigma, double lambda, double omega);
//   beta_M = -lambda^2 2^{-(d+7)/2} pi^{1-d/2} sigma^{3-d}
//            * Gamma((d-1)/2)/Gamma(d/2) * exp(-sigma^2 Omega^2/2)
double minkowski_beta(int d, double sigma, double lambda, double omega);

}  // namespace series
}  // namespace adsmana

#endif
