#include "adsmana/series.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "adsmana/specfn.hpp"

namespace adsmana {
namespace series {

namespace {

constexpr double kExpUnderflow = -745.0;

struct SumOutcome {
  double sum = 0.0;
  long long terms = 1;
  double rel_tail = 0.0;
  bool cap_hit = false;
};

// Sums exp(log_term(n)) over n >= 0. log_term must eventually decrease
// geometrically (here a Gaussian always beats the polynomial weight).
// At least min_terms terms are taken so the growing weight cannot trigger a
// premature stop; a term whose log is below the exp underflow threshold
// contributes 0 but still counts toward the stopping rule.
SumOutcome sum_modes(const std::function<double(long long)>& log_term,
                     long long min_terms, double tol) {
  SumOutcome out;
  double lt = log_term(0);
  for (long long n = 0;; ++n) {
    const double term = lt > kExpUnderflow ? std::exp(lt) : 0.0;
    out.sum += term;
    out.terms = n + 1;
    const double lt_next = log_term(n + 1);
    const double ratio = std::exp(std::min(lt_next - lt, 0.0));
    if (n + 1 >= min_terms && ratio < 0.5) {
      if (out.sum > 0.0 && term <= tol * out.sum) {
        const double tail = term * ratio / (1.0 - ratio);
        out.rel_tail = tail / out.sum;
        return out;
      }
      if (out.sum == 0.0 && lt < kExpUnderflow - 15.0) return out;
    }
    if (n + 1 >= kTermCap) {
      out.cap_hit = true;
      const double tail = term * std::min(ratio, 0.999) /
                          (1.0 - std::min(ratio, 0.999));
      out.rel_tail = out.sum > 0.0 ? tail / out.sum : 0.0;
      return out;
    }
    lt = lt_next;
  }
}

double log_alpha_unit_coupling(const background::DetectorSetup& setup,
                               double gamma) {
  return std::log(setup.sigma * setup.sigma * M_PI / 4.0) +
         (1.0 - setup.d) * std::log(gamma) -
         0.5 * setup.d * std::log(4.0 * M_PI) -
         specfn::log_gamma(0.5 * setup.d);
}

SeriesResult run_series(const background::DetectorSetup& setup, double eps,
                        double tol, bool beta_kind, bool delta_kind,
                        double sign_and_scale) {
  setup.validate();
  if (setup.is_minkowski())
    throw std::invalid_argument(
        "series: Minkowski sentinel; use minkowski_q / minkowski_beta");
  SeriesResult res;
  res.epsilon = eps;
  res.method = eps > 0.0 ? Method::series_with_regulator : Method::series;
  if (setup.coupling == 0.0) return res;  // alpha ~ lambda^2

  const int d = setup.d;
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const double sig2 = setup.sigma * setup.sigma;
  const double omega = setup.gap;
  auto log_term = [&](long long n) {
    const double k = 2.0 * n + d - 1.0;
    const double omega_n = k / (2.0 * gamma);
    double lt = specfn::gamma_ratio_log(d, n) - k * eps;
    if (delta_kind) {
      const double x = sig2 * omega * omega_n;
      // log(1 - e^{-x}) without cancellation at small x
      lt += -0.5 * sig2 * (omega * omega + omega_n * omega_n) +
            std::log(-std::expm1(-x));
    } else if (beta_kind) {
      lt += -0.5 * sig2 * (omega * omega + omega_n * omega_n);
    } else {
      const double w = omega + omega_n;
      lt += -0.5 * sig2 * w * w;
    }
    return lt;
  };
  const SumOutcome sum = sum_modes(log_term, d + 2, tol);
  const double alpha = setup.coupling * setup.coupling *
                       std::exp(log_alpha_unit_coupling(setup, gamma));
  res.value = sign_and_scale * alpha * sum.sum;
  res.terms_used = sum.terms;
  res.tail_bound = sum.rel_tail;
  res.term_cap_hit = sum.cap_hit;
  return res;
}

}  // namespace

SeriesResult q_series(const background::DetectorSetup& setup, double tol) {
  return run_series(setup, 0.0, tol, false, false, 2.0);
}

SeriesResult q_series_with_regulator(const background::DetectorSetup& setup,
                                     double eps, double tol) {
  if (!(eps > 0.0))
    throw std::domain_error(
        "q_series_with_regulator: requires eps > 0 (use q_series for the "
        "eps = 0 limit)");
  return run_series(setup, eps, tol, false, false, 2.0);
}

SeriesResult beta_series_renormalized(const background::DetectorSetup& setup,
                                      double tol) {
  return run_series(setup, 0.0, tol, true, false, -1.0);
}

SeriesResult beta_series_renormalized_regulated(
    const background::DetectorSetup& setup, double eps, double tol) {
  if (!(eps > 0.0))
    throw std::domain_error(
        "beta_series_renormalized_regulated: requires eps > 0");
  return run_series(setup, eps, tol, true, false, -1.0);
}

SeriesResult delta_series(const background::DetectorSetup& setup, double tol) {
  SeriesResult res = run_series(setup, 0.0, tol, false, true, 2.0);
  return res;
}

double delta_discriminant(double q, double beta) {
  if (!(q > 0.0))
    throw std::invalid_argument("delta_discriminant: requires q > 0");
  if (!(beta <= 0.0))
    throw std::invalid_argument("delta_discriminant: requires beta <= 0");
  return -(q + 2.0 * beta);
}

std::complex<double> beta_series_raw(const background::DetectorSetup& setup,
                                     long long n_terms) {
  setup.validate();
  if (setup.is_minkowski())
    throw std::invalid_argument("beta_series_raw: requires an AdS setup");
  if (n_terms < 0)
    throw std::invalid_argument("beta_series_raw: N must be >= 0");
  const int d = setup.d;
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const double sig2 = setup.sigma * setup.sigma;
  const double omega = setup.gap;
  const double alpha = setup.coupling == 0.0
                           ? 0.0
                           : setup.coupling * setup.coupling *
                                 std::exp(log_alpha_unit_coupling(setup, gamma));
  double re = 0.0, im = 0.0;
  for (long long n = 0; n <= n_terms; ++n) {
    const double k = 2.0 * n + d - 1.0;
    const double omega_n = k / (2.0 * gamma);
    const double lw = specfn::gamma_ratio_log(d, n);
    const double lg_real = lw - 0.5 * sig2 * (omega * omega + omega_n * omega_n);
    re += lg_real > kExpUnderflow ? std::exp(lg_real) : 0.0;
    // the factor e^{-sigma^2 Omega_n^2/2} erfi(sigma Omega_n / sqrt 2) is the
    // scaled form, finite for every n
    const double scaled = specfn::erfi_scaled(setup.sigma * omega_n / M_SQRT2);
    const double lg_imag = lw - 0.5 * sig2 * omega * omega + std::log(scaled);
    im += lg_imag > kExpUnderflow ? std::exp(lg_imag) : 0.0;
  }
  return {-alpha * re, alpha * im};
}

double minkowski_q(int d, double sigma, double lambda, double omega) {
  if (d < 2) throw std::invalid_argument("minkowski_q: requires d >= 2");
  if (!(sigma > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("minkowski_q: requires sigma > 0, omega > 0");
  if (lambda == 0.0) return 0.0;
  const double z = 0.5 * sigma * sigma * omega * omega;
  const double log_pref =
      std::log(omega) + specfn::log_gamma(d - 1.0) + std::log(M_PI) +
      (4.0 - d) * std::log(sigma) - std::log(2.0) -
      0.5 * d * std::log(8.0 * M_PI) - specfn::log_gamma(0.5 * d);
  const double u = specfn::tricomi_u(0.5 * d, 1.5, z);
  return lambda * lambda * std::exp(log_pref - z) * u;
}

double minkowski_beta(int d, double sigma, double lambda, double omega) {
  if (d < 2) throw std::invalid_argument("minkowski_beta: requires d >= 2");
  if (!(sigma > 0.0) || !(omega >= 0.0))
    throw std::invalid_argument(
        "minkowski_beta: requires sigma > 0, omega >= 0");
  if (lambda == 0.0) return 0.0;
  const double log_mag = -0.5 * (d + 7.0) * std::log(2.0) +
                         (1.0 - 0.5 * d) * std::log(M_PI) +
                         (3.0 - d) * std::log(sigma) +
                         specfn::log_gamma(0.5 * (d - 1.0)) -
                         specfn::log_gamma(0.5 * d) -
                         0.5 * sigma * sigma * omega * omega;
  return -lambda * lambda * std::exp(log_mag);
}

}  // namespace series
}  // namespace adsmana
