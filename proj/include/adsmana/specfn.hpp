#ifndef ADSMANA_SPECFN_HPP
#define ADSMANA_SPECFN_HPP

#include <string>
#include <vector>

// Self-contained double-precision special functions. Everything here is a
// pure function of its arguments; accuracy is checked against the
// high-precision reference tables in tests/golden/.

namespace adsmana {
namespace specfn {

// Real polynomial; coeffs[k] multiplies x^k. Trailing zero coefficients are
// stripped so that degree() is meaningful (the zero polynomial has degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  double operator()(double x) const;  // Horner evaluation
  Polynomial derivative() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

// Outcome of comparing one function against its reference table.
struct AccuracyReport {
  std::string function_name;
  double max_rel_error = 0.0;
  std::string domain_tested;
};

// ln Gamma(x) for x > 0. Relative error <= 1e-13 on [1e-3, 1e6]
// (measured against max(1, |ln Gamma|) near the zeros at x = 1, 2).
double log_gamma(double x);

// ln[Gamma(d+n-1) / Gamma(n+1)], d >= 2, n >= 0. Never overflows.
double gamma_ratio_log(int d, long long n);

// Complementary error function, relative error <= 1e-13 for |x| <= 26.
double erfc(double x);

// exp(-x^2) * erfi(x) for x >= 0, i.e. the Dawson function scaled by
// 2/sqrt(pi). Finite for all x; bare erfi overflows past x ~ 26 so only the
// scaled form is exposed.
double erfi_scaled(double x);

// Kummer confluent hypergeometric 1F1(a; b; z). Terminates exactly when a is
// a non-positive integer; otherwise both sign cases of z are routed through a
// positive-term series (the z < 0 case via the Kummer transformation
// 1F1(a;b;z) = e^z 1F1(b-a;b;-z)).
double kummer_1f1(double a, double b, double z);

// Tricomi confluent hypergeometric U(a, b, z) for a > 0, z > 0, b not an
// integer. Evaluated from the Laplace integral representation
//   U(a,b,z) = z^{-a}/Gamma(a) * int_0^inf e^{-u} u^{a-1} (1+u/z)^{b-a-1} du,
// which stays cancellation-free over the whole supported domain.
double tricomi_u(double a, double b, double z);

// Upper incomplete gamma Gamma(s, z), z > 0, s in [-5, 5] tested.
double upper_inc_gamma(double s, double z);

// Coefficients C_0..C_{d-2} of prod_{k=1}^{d-2} (gamma x + k). The empty
// product (d = 2) is the constant polynomial 1.
Polynomial prod_poly_coeffs(int d, double gamma);

// Bernoulli numbers B_2..B_{2m} and the Bernoulli polynomial B_{2m}(t),
// together with max |B_{2m}(t)| on [0, 1]. Supported m: 1, 2.
struct BernoulliData {
  std::vector<double> numbers;     // B_2, ..., B_{2m}
  Polynomial b2m_polynomial;       // B_{2m}(t)
  double max_abs_on_unit_interval = 0.0;
};
BernoulliData bernoulli_data(int m);

}  // namespace specfn
}  // namespace adsmana

#endif
