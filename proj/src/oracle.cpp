#include "adsmana/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "adsmana/detail/adaptive_quad.hpp"
#include "adsmana/specfn.hpp"

namespace adsmana {
namespace oracle {

namespace {

using background::DetectorSetup;

// Panel edges on [-L, L]: 64 uniform panels plus a geometric cascade toward
// s = 0, where the integrand develops its eps-narrow spike.
std::vector<double> seeded_edges(double L) {
  std::vector<double> edges = detail::uniform_edges(-L, L, 64);
  for (double e = L / 2.0; e > L * 1e-9; e *= 0.5) {
    edges.push_back(e);
    edges.push_back(-e);
  }
  edges.push_back(0.0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Supremum of |W(s; eps)|: |2i sin(x - i eps)| >= 2 sinh(eps).
double wightman_sup(const DetectorSetup& setup, double gamma, double eps) {
  const int d = setup.d;
  const double log_pref = specfn::log_gamma(d - 1.0) +
                          (1.0 - d) * std::log(gamma) -
                          0.5 * d * std::log(4.0 * M_PI) -
                          specfn::log_gamma(0.5 * d);
  return std::exp(log_pref + (1.0 - d) * std::log(2.0 * std::sinh(eps)));
}

struct Integral {
  std::complex<double> value;
  double abs_error;
  int panels;
};

template <typename F>
Integral run_quadrature(F&& integrand, const DetectorSetup& setup, double eps,
                        double quad_tol, const char* who) {
  const double L = 10.0 * setup.sigma;
  auto res = detail::adaptive_gk15(integrand, seeded_edges(L), quad_tol,
                                   1e-300, kPanelCap);
  if (!res.converged)
    throw std::runtime_error(std::string(who) +
                             ": quadrature did not converge within the "
                             "panel cap");
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  // analytic bound on the discarded |s| > 10 sigma tails:
  // 2 * max|W| * int_{10 sigma}^inf e^{-s^2/2sigma^2} ds
  const double tail = 2.0 * wightman_sup(setup, gamma, eps) *
                      (setup.sigma / 10.0) * std::exp(-50.0);
  return {res.integral, res.abs_error + tail, res.panels};
}

}  // namespace

QuadratureResult quad_q(const DetectorSetup& setup, double eps,
                        double quad_tol) {
  setup.validate();
  if (setup.is_minkowski())
    throw std::invalid_argument("quad_q: requires an AdS setup");
  if (!(eps > 0.0)) throw std::domain_error("quad_q: requires eps > 0");
  QuadratureResult out;
  out.epsilon = eps;
  if (setup.coupling == 0.0) return out;

  const double sigma = setup.sigma;
  const double omega = setup.gap;
  auto integrand = [&](double s) -> std::complex<double> {
    const std::complex<double> phase{std::cos(omega * s),
                                     -std::sin(omega * s)};
    return std::exp(-0.5 * s * s / (sigma * sigma)) * phase *
           background::wightman(setup, s, eps);
  };
  const Integral I = run_quadrature(integrand, setup, eps, quad_tol, "quad_q");
  const double pref =
      0.5 * setup.coupling * setup.coupling * sigma * std::sqrt(M_PI / 2.0);
  out.value = pref * I.value.real();
  out.abs_error_estimate = pref * I.abs_error;
  out.subdivisions = I.panels;
  if (std::fabs(pref * I.value.imag()) > 10.0 * out.abs_error_estimate)
    throw std::runtime_error(
        "quad_q: imaginary part exceeds the quadrature error budget");
  return out;
}

QuadratureResult quad_beta(const DetectorSetup& setup, double eps,
                           double quad_tol) {
  setup.validate();
  if (setup.is_minkowski())
    throw std::invalid_argument("quad_beta: requires an AdS setup");
  if (!(eps > 0.0)) throw std::domain_error("quad_beta: requires eps > 0");
  QuadratureResult out;
  out.epsilon = eps;
  if (setup.coupling == 0.0) return out;

  const double sigma = setup.sigma;
  auto integrand = [&](double s) -> std::complex<double> {
    return std::exp(-0.5 * s * s / (sigma * sigma)) *
           background::wightman(setup, s, eps);
  };
  const Integral I =
      run_quadrature(integrand, setup, eps, quad_tol, "quad_beta");
  const double pref = -setup.coupling * setup.coupling *
                      std::sqrt(2.0 * M_PI) * sigma / 8.0 *
                      std::exp(-0.5 * sigma * sigma * setup.gap * setup.gap);
  out.value = pref * I.value.real();
  out.abs_error_estimate = std::fabs(pref) * I.abs_error;
  out.subdivisions = I.panels;
  if (std::fabs(pref * I.value.imag()) > 10.0 * out.abs_error_estimate)
    throw std::runtime_error(
        "quad_beta: imaginary part exceeds the quadrature error budget");
  return out;
}

ExtrapolationResult richardson_extrapolate(
    const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3)
    throw std::invalid_argument("richardson_extrapolate: need >= 3 pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(pairs[i].first > 0.0))
      throw std::invalid_argument("richardson_extrapolate: eps must be > 0");
    if (i > 0 && !(pairs[i].first < pairs[i - 1].first))
      throw std::invalid_argument(
          "richardson_extrapolate: eps must be strictly decreasing");
  }
  ExtrapolationResult out;
  for (const auto& [e, v] : pairs) {
    out.eps_sequence.push_back(e);
    out.per_eps_values.push_back(v);
  }
  const std::size_t n = pairs.size();
  Eigen::Matrix3d A;
  Eigen::Vector3d b;
  for (int i = 0; i < 3; ++i) {
    const double e = pairs[n - 3 + i].first;
    A(i, 0) = 1.0;
    A(i, 1) = e;
    A(i, 2) = e * e;
    b(i) = pairs[n - 3 + i].second;
  }
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(A);
  if (!lu.isInvertible())
    throw std::invalid_argument("richardson_extrapolate: degenerate fit");
  const Eigen::Vector3d coef = lu.solve(b);
  out.limit_value = coef(0);
  out.model_order = 2;
  // linear fit through the two smallest eps = the model with the quadratic
  // term dropped
  const double e1 = pairs[n - 2].first, v1 = pairs[n - 2].second;
  const double e2 = pairs[n - 1].first, v2 = pairs[n - 1].second;
  const double v0_linear = v2 - e2 * (v1 - v2) / (e1 - e2);
  out.discrepancy = std::fabs(out.limit_value - v0_linear);
  return out;
}

}  // namespace oracle
}  // namespace adsmana
