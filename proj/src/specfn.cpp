#include "adsmana/specfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "adsmana/detail/adaptive_quad.hpp"

namespace adsmana {
namespace specfn {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set). Keeps
// |relative error| ~ 1e-15 on Gamma for x >= 0.5.
double lanczos_log_gamma(double x) {
  static constexpr double c[9] = {
      0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
      771.32342877765313,     -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
  double acc = c[0];
  for (int k = 1; k < 9; ++k) acc += c[k] / (x - 1.0 + k);
  const double base = x + 6.5;
  return 0.91893853320467274178032973640561764 +  // ln sqrt(2 pi)
         (x - 0.5) * std::log(base) - base + std::log(acc);
}

// erf(x) for 0 <= x < 1 via the non-alternating series
//   erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!
double erf_small(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * kEps) break;
  }
  return 2.0 / kSqrtPi * std::exp(-x2) * sum;
}

// Modified Lentz evaluation of the continued fraction F in
//   Gamma(s, z) = e^{-z} z^s * F(s, z),  valid for z somewhat > 0.
double gamma_cf(double s, double z) {
  constexpr double tiny = 1e-300;
  double b = z + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 2000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("upper_inc_gamma: continued fraction stalled");
}

// Lower incomplete gamma series: gamma(s, z) = z^s e^{-z} sum_k z^k / (s)_{k+1}
// (s > 0, z <= s + 1), returned as P = gamma(s, z) / Gamma(s).
double lower_gamma_series_p(double s, double z) {
  double ap = s;
  double term = 1.0 / s;
  double sum = term;
  for (int n = 0; n < 2000; ++n) {
    ap += 1.0;
    term *= z / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps)
      return sum * std::exp(s * std::log(z) - z - log_gamma(s));
  }
  throw std::runtime_error("upper_inc_gamma: series stalled");
}

// E_1(z) for 0 < z < 1: -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
double exp_integral_e1_small(double z) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 100; ++k) {
    term *= -z / k;
    const double add = -term / k;
    sum += add;
    if (std::fabs(add) < std::fabs(sum) * kEps) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// Dawson function D(x) = e^{-x^2} int_0^x e^{t^2} dt, odd in x.
double dawson(double x) {
  const double ax = std::fabs(x);
  double result;
  if (ax <= 6.0) {
    // positive-term series  D = e^{-x^2} sum_n x^{2n+1} / (n! (2n+1))
    const double x2 = ax * ax;
    double p = ax;  // x^{2n+1} / n!
    double sum = ax;
    for (int n = 1; n < 400; ++n) {
      p *= x2 / n;
      const double term = p / (2.0 * n + 1.0);
      sum += term;
      if (term < sum * kEps) break;
    }
    result = std::exp(-x2) * sum;
  } else {
    // asymptotic series  D ~ 1/(2x) sum_k (2k-1)!! / (2x^2)^k, truncated at
    // the smallest term (relative error < 1e-15 for x >= 6)
    const double inv = 1.0 / (2.0 * ax * ax);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
      const double next = term * (2.0 * k - 1.0) * inv;
      if (next >= term) break;
      term = next;
      sum += term;
      if (term < sum * kEps) break;
    }
    result = sum / (2.0 * ax);
  }
  return x < 0.0 ? -result : result;
}

// Positive-term Taylor series for 1F1(a; b; z); every in-scope call has
// a > 0, b > 0, z > 0 so no cancellation occurs.
double kummer_taylor(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  int small_count = 0;
  for (int n = 0; n < 10000; ++n) {
    term *= (a + n) * z / ((b + n) * (n + 1.0));
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) {
      if (++small_count >= 2) return sum;
    } else {
      small_count = 0;
    }
  }
  throw std::runtime_error("kummer_1f1: series did not converge");
}

// Exact terminating sum for non-positive integer a.
double kummer_terminating(double a, double b, double z) {
  const long long m = static_cast<long long>(-a);
  double term = 1.0;
  double sum = 1.0;
  for (long long n = 0; n < m; ++n) {
    term *= (a + n) * z / ((b + n) * (n + 1.0));
    sum += term;
  }
  return sum;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = k * coeffs_[k];
  return Polynomial(std::move(d));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma(x);
}

double gamma_ratio_log(int d, long long n) {
  if (d < 2) throw std::domain_error("gamma_ratio_log: requires d >= 2");
  if (n < 0) throw std::domain_error("gamma_ratio_log: requires n >= 0");
  if (d == 2) return 0.0;  // Gamma(n+1)/Gamma(n+1)
  return log_gamma(static_cast<double>(d + n - 1)) -
         log_gamma(static_cast<double>(n + 1));
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 1.0) return 1.0 - erf_small(x);
  // erfc(x) = Gamma(1/2, x^2) / sqrt(pi); the log form keeps the graceful
  // underflow to 0 for large x
  const double z = x * x;
  const double f = gamma_cf(0.5, z);
  return std::exp(0.5 * std::log(z) - z) * f / kSqrtPi;
}

double erfi_scaled(double x) {
  if (!(x >= 0.0)) throw std::domain_error("erfi_scaled: requires x >= 0");
  return 2.0 / kSqrtPi * dawson(x);
}

double kummer_1f1(double a, double b, double z) {
  if (is_nonpositive_integer(b))
    throw std::domain_error("kummer_1f1: b must not be a non-positive integer");
  if (is_nonpositive_integer(a)) return kummer_terminating(a, b, z);
  if (z == 0.0) return 1.0;
  if (z > 0.0) return kummer_taylor(a, b, z);
  // Kummer transformation: 1F1(a;b;z) = e^z 1F1(b-a; b; -z), which turns the
  // alternating series at z < 0 into a cancellation-free one.
  const double bma = b - a;
  if (is_nonpositive_integer(bma))
    return std::exp(z) * kummer_terminating(bma, b, -z);
  return std::exp(z) * kummer_taylor(bma, b, -z);
}

double tricomi_u(double a, double b, double z) {
  if (!(z > 0.0)) throw std::domain_error("tricomi_u: requires z > 0");
  if (b == std::floor(b)) throw std::domain_error("tricomi_u: integer b unsupported");
  if (!(a > 0.0)) throw std::domain_error("tricomi_u: requires a > 0");
  // u-substituted Laplace representation; integrand is smooth, positive and
  // exponentially decaying, so the panel rule converges without cancellation
  // for any z > 0.
  const double p = b - a - 1.0;
  auto integrand = [a, z, p](double u) {
    if (u <= 0.0) return a > 1.0 ? 0.0 : (a == 1.0 ? 1.0 : 0.0);
    return std::exp(-u + (a - 1.0) * std::log(u) + p * std::log1p(u / z));
  };
  const double u_max = 745.0 + 40.0 * std::fabs(p) + 10.0 * a;
  std::vector<double> edges;
  for (double e = u_max; e > 1e-8; e *= 0.5) edges.push_back(e);
  edges.push_back(0.0);
  std::sort(edges.begin(), edges.end());
  auto res = detail::adaptive_gk15([&](double u) { return integrand(u); },
                                   edges, 1e-13, 0.0, 4000);
  return std::exp(-a * std::log(z) - log_gamma(a)) * res.integral;
}

double upper_inc_gamma(double s, double z) {
  if (!(z > 0.0)) throw std::domain_error("upper_inc_gamma: requires z > 0");
  if (z > s + 1.0 && z >= 0.35)
    return std::exp(s * std::log(z) - z) * gamma_cf(s, z);
  if (s > 0.0) {
    // Gamma(s,z) = Gamma(s) (1 - P(s,z))
    const double p = lower_gamma_series_p(s, z);
    return std::exp(log_gamma(s)) * (1.0 - p);
  }
  // s <= 0, small z: climb down from a directly computable starting order
  // with Gamma(s, z) = (Gamma(s+1, z) - z^s e^{-z}) / s.
  double s_top, g;
  if (s == std::floor(s)) {
    s_top = 0.0;
    g = exp_integral_e1_small(z);  // Gamma(0, z) = E_1(z)
  } else {
    s_top = s - std::floor(s);  // in (0, 1)
    g = upper_inc_gamma(s_top, z);
  }
  for (double sj = s_top - 1.0; sj >= s - 0.5; sj -= 1.0)
    g = (g - std::exp(sj * std::log(z) - z)) / sj;
  return g;
}

Polynomial prod_poly_coeffs(int d, double gamma) {
  if (d < 2) throw std::domain_error("prod_poly_coeffs: requires d >= 2");
  if (!(gamma > 0.0)) throw std::domain_error("prod_poly_coeffs: requires gamma > 0");
  std::vector<double> c{1.0};
  for (int k = 1; k <= d - 2; ++k) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += k * c[i];
      next[i + 1] += gamma * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

BernoulliData bernoulli_data(int m) {
  BernoulliData out;
  if (m == 1) {
    out.numbers = {1.0 / 6.0};
    out.b2m_polynomial = Polynomial({1.0 / 6.0, -1.0, 1.0});
    out.max_abs_on_unit_interval = 1.0 / 6.0;  // attained at t = 0, 1
  } else if (m == 2) {
    out.numbers = {1.0 / 6.0, -1.0 / 30.0};
    out.b2m_polynomial = Polynomial({-1.0 / 30.0, 0.0, 1.0, -2.0, 1.0});
    out.max_abs_on_unit_interval = 1.0 / 30.0;  // attained at t = 0, 1
  } else {
    throw std::invalid_argument("bernoulli_data: supported m are 1 and 2");
  }
  return out;
}

}  // namespace specfn
}  // namespace adsmana
