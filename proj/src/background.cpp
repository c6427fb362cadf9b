#include "adsmana/background.hpp"

#include <cmath>
#include <stdexcept>

#include "adsmana/specfn.hpp"

namespace adsmana {
namespace background {

namespace {

constexpr double kLog4Pi = 2.53102424696929153339603136928201811;

// w^n for complex w by binary exponentiation; exact branch handling is moot
// because the exponent is an integer.
std::complex<double> cpow_int(std::complex<double> w, int n) {
  std::complex<double> acc{1.0, 0.0};
  while (n > 0) {
    if (n & 1) acc *= w;
    w *= w;
    n >>= 1;
  }
  return acc;
}

void require_ads(const DetectorSetup& setup, const char* who) {
  if (setup.is_minkowski())
    throw std::invalid_argument(std::string(who) +
                                ": Minkowski sentinel; use the minkowski_* "
                                "operations in the series module");
}

}  // namespace

void DetectorSetup::validate() const {
  if (d < 2) throw std::invalid_argument("DetectorSetup: d must be >= 2");
  if (!(ads_radius > 0.0))
    throw std::invalid_argument("DetectorSetup: ads_radius must be > 0");
  if (!(radial_position >= 0.0))
    throw std::invalid_argument("DetectorSetup: radial_position must be >= 0");
  if (!(sigma > 0.0))
    throw std::invalid_argument("DetectorSetup: sigma must be > 0");
  if (!(gap > 0.0))
    throw std::invalid_argument("DetectorSetup: gap must be > 0");
  if (std::isnan(coupling))
    throw std::invalid_argument("DetectorSetup: coupling must be finite");
}

double EmbeddingPoint::hyperboloid_residual(double ads_radius) const {
  double q = z.front() * z.front() + z.back() * z.back();
  for (std::size_t i = 1; i + 1 < z.size(); ++i) q -= z[i] * z[i];
  return std::fabs(q - ads_radius * ads_radius) / (ads_radius * ads_radius);
}

Geometry derive_geometry(const DetectorSetup& setup) {
  setup.validate();
  require_ads(setup, "derive_geometry");
  Geometry g;
  g.gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const int d = setup.d;
  const double lam = setup.coupling;
  if (lam == 0.0) {
    g.alpha = 0.0;
  } else {
    const double log_a = std::log(setup.sigma * setup.sigma * M_PI / 4.0) +
                         (1.0 - d) * std::log(g.gamma) -
                         0.5 * d * kLog4Pi - specfn::log_gamma(0.5 * d);
    g.alpha = lam * lam * std::exp(log_a);
  }
  g.omega_d = (d - 1.0) / (2.0 * g.gamma);
  g.curvature = -static_cast<double>(d) * (d + 1.0) /
                (setup.ads_radius * setup.ads_radius);
  return g;
}

double mode_frequency(const Geometry& geom, int d, long long n) {
  if (n < 0) throw std::invalid_argument("mode_frequency: n must be >= 0");
  return (2.0 * n + d - 1.0) / (2.0 * geom.gamma);
}

EmbeddingPoint embed(const DetectorSetup& setup, const SpacetimePoint& point) {
  setup.validate();
  require_ads(setup, "embed");
  const int d = setup.d;
  if (point.r < 0.0) throw std::invalid_argument("embed: r must be >= 0");
  if (static_cast<int>(point.angles.size()) != d - 1)
    throw std::invalid_argument("embed: expected d-1 angles");
  const double ell = setup.ads_radius;
  EmbeddingPoint out;
  out.z.resize(d + 2);
  const double rho = std::hypot(ell, point.r);
  out.z[0] = rho * std::sin(point.t / ell);
  out.z[d + 1] = rho * std::cos(point.t / ell);
  double prefix = point.r;
  for (int i = 1; i <= d - 1; ++i) {
    out.z[i] = prefix * std::cos(point.angles[i - 1]);
    prefix *= std::sin(point.angles[i - 1]);
  }
  out.z[d] = prefix;
  return out;
}

double geodesic_interval_embedding(const DetectorSetup& setup, double tau,
                                   double tau_prime,
                                   const std::vector<double>& angles) {
  const int d = setup.d;
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  SpacetimePoint a{tau * setup.ads_radius / gamma, setup.radial_position,
                   angles};
  SpacetimePoint b{tau_prime * setup.ads_radius / gamma,
                   setup.radial_position, angles};
  if (a.angles.empty()) a.angles.assign(d - 1, 0.0);
  if (b.angles.empty()) b.angles.assign(d - 1, 0.0);
  const EmbeddingPoint za = embed(setup, a);
  const EmbeddingPoint zb = embed(setup, b);
  double interval = 0.0;
  for (int i = 0; i <= d + 1; ++i) {
    const double diff = za.z[i] - zb.z[i];
    const double sq = diff * diff;
    interval += (i == 0 || i == d + 1) ? -sq : sq;
  }
  return interval;
}

double geodesic_interval(const DetectorSetup& setup, double tau,
                         double tau_prime) {
  setup.validate();
  require_ads(setup, "geodesic_interval");
  const double gamma = std::hypot(setup.ads_radius, setup.radial_position);
  const double half = (tau - tau_prime) / (2.0 * gamma);
  // 2 gamma^2 (cos(dtau/gamma) - 1) written without cancellation
  const double s = std::sin(half);
  const double closed = -4.0 * gamma * gamma * s * s;
  const double embedded = geodesic_interval_embedding(setup, tau, tau_prime);
  const double tol =
      1e-11 * std::fabs(closed) + 1e-13 * gamma * gamma;
  if (std::fabs(closed - embedded) > tol)
    throw std::runtime_error(
        "geodesic_interval: closed-form and embedding routes disagree");
  return closed;
}

std::complex<double> wightman(const DetectorSetup& setup, double s,
                              double eps) {
  setup.validate();
  require_ads(setup, "wightman");
  if (!(eps > 0.0)) throw std::domain_error("wightman: requires eps > 0");
  const int d = setup.d;
  const Geometry g = derive_geometry(setup);
  const double x = s / (2.0 * g.gamma);
  // 2i sin(x - i eps) = 2 cos(x) sinh(eps) + 2i sin(x) cosh(eps); never zero
  // for eps > 0, and the power 1-d is an integer so no branch issue arises.
  const std::complex<double> w{2.0 * std::cos(x) * std::sinh(eps),
                               2.0 * std::sin(x) * std::cosh(eps)};
  const double log_pref = specfn::log_gamma(d - 1.0) +
                          (1.0 - d) * std::log(g.gamma) -
                          0.5 * d * kLog4Pi - specfn::log_gamma(0.5 * d);
  return std::exp(log_pref) * cpow_int(1.0 / w, d - 1);
}

std::complex<double> wightman_mode_expansion(const DetectorSetup& setup,
                                             double s, double eps,
                                             int n_max) {
  setup.validate();
  require_ads(setup, "wightman_mode_expansion");
  if (!(eps > 0.0))
    throw std::domain_error("wightman_mode_expansion: requires eps > 0");
  if (n_max < 0)
    throw std::invalid_argument("wightman_mode_expansion: N must be >= 0");
  const int d = setup.d;
  const Geometry g = derive_geometry(setup);
  const double x = s / (2.0 * g.gamma);
  std::complex<double> sum{0.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double k = 2.0 * n + d - 1.0;
    const double mag = std::exp(specfn::gamma_ratio_log(d, n) - k * eps);
    sum += std::complex<double>{mag * std::cos(k * x), -mag * std::sin(k * x)};
  }
  const double log_pref = (1.0 - d) * std::log(g.gamma) -
                          0.5 * d * kLog4Pi - specfn::log_gamma(0.5 * d);
  return std::exp(log_pref) * sum;
}

}  // namespace background
}  // namespace adsmana
