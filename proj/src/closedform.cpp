#include "adsmana/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "adsmana/detail/adaptive_quad.hpp"

namespace adsmana {
namespace closedform {

namespace {

using background::DetectorSetup;
using background::Geometry;
using background::derive_geometry;
using specfn::kummer_1f1;
using specfn::log_gamma;
using specfn::Polynomial;

double sqr(double x) { return x * x; }

// sum_{n=0}^{d-2} zeta_n [ Gamma((n+1)/2) F(a1_n; 1/2; z) -
//                          sqrt2 sigma c Gamma((n+2)/2) F(a2_n; 3/2; z) ]
// shared by the q (z = -t, a1 = -n/2) and beta (z = +t, a1 = (n+1)/2) forms.
double bracket_sum(const DetectorSetup& setup, double c, bool coherence) {
  const Geometry g = derive_geometry(setup);
  const Polynomial poly = specfn::prod_poly_coeffs(setup.d, g.gamma);
  const double sigma = setup.sigma;
  const double t = 0.5 * sqr(sigma * c);
  double total = 0.0;
  for (int n = 0; n <= setup.d - 2; ++n) {
    const double cn =
        n < static_cast<int>(poly.coeffs().size()) ? poly.coeffs()[n] : 0.0;
    if (cn == 0.0) continue;
    const double zeta =
        cn * std::exp(0.5 * (n - 1.0) * std::log(2.0) - (n + 1.0) * std::log(sigma));
    double f1, f2;
    if (coherence) {
      f1 = kummer_1f1(0.5 * (n + 1.0), 0.5, t);
      f2 = kummer_1f1(0.5 * n + 1.0, 1.5, t);
    } else {
      f1 = kummer_1f1(-0.5 * n, 0.5, -t);
      f2 = kummer_1f1(0.5 * (1.0 - n), 1.5, -t);
    }
    total += zeta * (std::exp(log_gamma(0.5 * (n + 1.0))) * f1 -
                     M_SQRT2 * sigma * c * std::exp(log_gamma(0.5 * (n + 2.0))) * f2);
  }
  return total;
}

}  // namespace

ClosedFormResult q_closed(const DetectorSetup& setup) {
  setup.validate();
  const Geometry g = derive_geometry(setup);
  const double omega_prime = setup.gap + g.omega_d;
  ClosedFormResult out;
  out.d = setup.d;
  out.kind = Kind::q_c;
  out.value = 2.0 * g.gamma * g.alpha * bracket_sum(setup, omega_prime, false);
  return out;
}

ClosedFormResult beta_closed(const DetectorSetup& setup) {
  setup.validate();
  const Geometry g = derive_geometry(setup);
  ClosedFormResult out;
  out.d = setup.d;
  out.kind = Kind::beta_c;
  const double damp =
      std::exp(-0.5 * sqr(setup.sigma) * (sqr(setup.gap) + sqr(g.omega_d)));
  out.value = -g.gamma * g.alpha * damp * bracket_sum(setup, g.omega_d, true);
  return out;
}

ClosedFormResult q_table(int d, const DetectorSetup& setup) {
  setup.validate();
  if (d != setup.d)
    throw std::invalid_argument("q_table: d must match the setup");
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const double s = setup.sigma, O = setup.gap, l2 = sqr(setup.coupling);
  ClosedFormResult out;
  out.d = d;
  out.kind = Kind::table_q;
  switch (d) {
    case 2:
      out.value = 0.125 * std::sqrt(M_PI / 2.0) * l2 * s *
                  specfn::erfc(s * (1.0 + 2.0 * gamma * O) /
                               (2.0 * M_SQRT2 * gamma));
      break;
    case 3:
      out.value = l2 / (16.0 * M_PI) *
                  (2.0 * std::exp(-sqr(s + gamma * s * O) / (2.0 * sqr(gamma))) -
                   std::sqrt(2.0 * M_PI) * s * O *
                       specfn::erfc(s * (1.0 + gamma * O) / (M_SQRT2 * gamma)));
      break;
    case 4:
      out.value =
          l2 / (256.0 * M_PI * sqr(gamma) * s) *
          (4.0 * gamma * s * (3.0 - 2.0 * gamma * O) *
               std::exp(-sqr(s) * sqr(3.0 + 2.0 * gamma * O) / (8.0 * sqr(gamma))) +
           std::sqrt(2.0 * M_PI) * (4.0 * sqr(gamma) * (1.0 + sqr(s * O)) - sqr(s)) *
               specfn::erfc(s * (3.0 + 2.0 * gamma * O) / (2.0 * M_SQRT2 * gamma)));
      break;
    default:
      throw std::invalid_argument("q_table: supported d are 2, 3, 4");
  }
  return out;
}

ClosedFormResult beta_table(int d, const DetectorSetup& setup) {
  setup.validate();
  if (d != setup.d)
    throw std::invalid_argument("beta_table: d must match the setup");
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const double s = setup.sigma, O = setup.gap, l2 = sqr(setup.coupling);
  ClosedFormResult out;
  out.d = d;
  out.kind = Kind::table_beta;
  switch (d) {
    case 2:
      out.value = -std::sqrt(M_PI / 2.0) / 16.0 * l2 * s *
                  std::exp(-0.5 * sqr(s * O)) *
                  specfn::erfc(s / (2.0 * M_SQRT2 * gamma));
      break;
    case 3:
      out.value = -l2 / (16.0 * M_PI) *
                  std::exp(-0.5 * sqr(s) * (1.0 / sqr(gamma) + sqr(O)));
      break;
    case 4:
      out.value = l2 / (512.0 * M_PI * sqr(gamma) * s) *
                  std::exp(-0.5 * sqr(s) * (2.25 / sqr(gamma) + sqr(O))) *
                  (std::sqrt(2.0 * M_PI) * std::exp(1.125 * sqr(s) / sqr(gamma)) *
                       (sqr(s) - 4.0 * sqr(gamma)) *
                       specfn::erfc(1.5 * s / (M_SQRT2 * gamma)) -
                   12.0 * gamma * s);
      break;
    default:
      throw std::invalid_argument("beta_table: supported d are 2, 3, 4");
  }
  return out;
}

double EmTermFunction::operator()(double x) const {
  return amplitude * poly(x) * std::exp(-0.5 * sqr(sigma * (center + x)));
}

EmTermFunction EmTermFunction::derivative() const {
  // d/dx [P e^{-s^2(c+x)^2/2}] = (P' - s^2 (c+x) P) e^{-s^2(c+x)^2/2}
  const double s2 = sqr(sigma);
  std::vector<double> q(poly.coeffs().size() + 1, 0.0);
  const Polynomial dp = poly.derivative();
  for (std::size_t k = 0; k < dp.coeffs().size(); ++k) q[k] += dp.coeffs()[k];
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    q[k] -= s2 * center * poly.coeffs()[k];
    q[k + 1] -= s2 * poly.coeffs()[k];
  }
  EmTermFunction out;
  out.poly = Polynomial(std::move(q));
  out.amplitude = amplitude;
  out.center = center;
  out.sigma = sigma;
  return out;
}

EmTermFunction em_term_function(const DetectorSetup& setup, EmKind kind) {
  setup.validate();
  const Geometry g = derive_geometry(setup);
  EmTermFunction f;
  f.poly = specfn::prod_poly_coeffs(setup.d, g.gamma);
  f.sigma = setup.sigma;
  if (kind == EmKind::excitation) {
    f.amplitude = 1.0;
    f.center = setup.gap + g.omega_d;
  } else {
    f.amplitude = std::exp(-0.5 * sqr(setup.sigma * setup.gap));
    f.center = g.omega_d;
  }
  return f;
}

ClosedFormResult euler_maclaurin_correct(const DetectorSetup& setup, int m,
                                         EmKind kind) {
  if (m != 1 && m != 2)
    throw std::invalid_argument("euler_maclaurin_correct: supported m are 1, 2");
  const Geometry g = derive_geometry(setup);
  const bool excitation = kind == EmKind::excitation;
  const double prefactor = excitation ? 2.0 * g.alpha : -g.alpha;
  const ClosedFormResult integral =
      excitation ? q_closed(setup) : beta_closed(setup);

  const EmTermFunction f = em_term_function(setup, kind);
  const double delta = 1.0 / g.gamma;  // step of x_n = n / gamma

  // boundary terms at a = 0 (everything at b = infinity decays away)
  const specfn::BernoulliData bd = specfn::bernoulli_data(m);
  EmTermFunction deriv = f.derivative();
  double correction = 0.5 * f(0.0);
  double factorial = 1.0;
  for (int k = 1; k <= m; ++k) {
    factorial *= (2.0 * k - 1.0) * (2.0 * k);
    correction -= bd.numbers[k - 1] / factorial *
                  std::pow(delta, 2.0 * k - 1.0) * deriv(0.0);
    if (k < m) deriv = deriv.derivative().derivative();
  }

  // Bernoulli-kernel remainder  (-1)^{m+1}/(2m)! int_0^inf B_{2m}({y}) h^{(2m)}(y) dy
  // with h(y) = f(y delta); integrated per unit interval of y where the
  // kernel is smooth.
  EmTermFunction f2m = f;
  for (int j = 0; j < 2 * m; ++j) f2m = f2m.derivative();
  const double y_span = g.gamma * (42.0 / setup.sigma + f.center) + 2.0;
  const long long y_max =
      std::min<long long>(static_cast<long long>(y_span) + 1, 2000000);
  double rem = 0.0;
  double rem_err = 0.0;
  const double scale = std::pow(delta, 2.0 * m);
  for (long long j = 0; j < y_max; ++j) {
    auto est = detail::gk15_panel(
        [&](double y) {
          return bd.b2m_polynomial(y - j) * scale * f2m(y * delta);
        },
        static_cast<double>(j), static_cast<double>(j + 1));
    rem += est.integral;
    rem_err += est.error;
    // the Gaussian envelope ends the tail long before y_max on real inputs
    if (j > 4 && std::fabs(est.integral) + est.error <
                     1e-18 * (std::fabs(rem) + 1e-300) &&
        (j + 1) * delta > f.center + 42.0 / setup.sigma)
      break;
  }
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  rem *= sign / factorial;

  ClosedFormResult out;
  out.d = setup.d;
  out.kind = excitation ? Kind::q_c : Kind::beta_c;
  out.value = integral.value + prefactor * correction;
  out.em_correction = prefactor * correction;
  out.em_residual_bound = std::fabs(prefactor) *
                              (std::fabs(rem) * 1.02 + 10.0 * rem_err / factorial) +
                          1e-13 * std::fabs(out.value);
  return out;
}

}  // namespace closedform
}  // namespace adsmana
