#ifndef ADSMANA_BACKGROUND_HPP
#define ADSMANA_BACKGROUND_HPP

#include <complex>
#include <limits>
#include <vector>

// Static-detector kinematics on AdS_{d+1}: derived parameters, the embedding
// of global coordinates into the flat ambient space, and the regularized
// two-point correlator pulled back to the worldline. Natural units
// throughout (c = hbar = 1).

namespace adsmana {
namespace background {

// ads_radius may be set to kMinkowskiRadius to denote the flat-space limit;
// geometry-dependent operations reject that sentinel and direct the caller
// to the dedicated flat-space formulas in the series module.
inline constexpr double kMinkowskiRadius =
    std::numeric_limits<double>::infinity();

struct DetectorSetup {
  int d = 3;                    // spatial dimension, >= 2
  double ads_radius = 1.0;      // ell > 0, or kMinkowskiRadius
  double radial_position = 0.0; // R >= 0
  double sigma = 1.0;           // Gaussian switching width, > 0
  double coupling = 1.0;        // lambda
  double gap = 1.0;             // Omega_1 = Omega_2 = Omega, > 0

  bool is_minkowski() const { return std::isinf(ads_radius); }
  void validate() const;  // throws std::invalid_argument on bad fields
};

struct Geometry {
  double gamma;      // sqrt(ell^2 + R^2)
  double alpha;      // lambda^2 sigma^2 pi gamma^{1-d} / (4 (4pi)^{d/2} Gamma(d/2))
  double omega_d;    // (d-1) / (2 gamma), the n = 0 mode frequency
  double curvature;  // -d(d+1) / ell^2
};

struct SpacetimePoint {
  double t = 0.0;
  double r = 0.0;
  std::vector<double> angles;  // theta_1 .. theta_{d-1}
};

struct EmbeddingPoint {
  std::vector<double> z;  // z^0 .. z^{d+1}
  // |(z0)^2 - sum (z^i)^2 + (z^{d+1})^2 - ell^2| / ell^2
  double hyperboloid_residual(double ads_radius) const;
};

Geometry derive_geometry(const DetectorSetup& setup);

// Omega_n = (2n + d - 1) / (2 gamma); strictly increasing in n and d.
double mode_frequency(const Geometry& geom, int d, long long n);

EmbeddingPoint embed(const DetectorSetup& setup, const SpacetimePoint& point);

// Squared geodesic separation of two proper times on the static worldline,
//   sigma(tau, tau') = 2 gamma^2 (cos((tau - tau')/gamma) - 1).
// Evaluated both in closed form and through embedding-space differences;
// the two routes are required to agree before the value is returned.
double geodesic_interval(const DetectorSetup& setup, double tau,
                         double tau_prime);
// The embedding-difference route alone (angles are arbitrary but must match
// the worldline's fixed values; they drop out of the interval).
double geodesic_interval_embedding(const DetectorSetup& setup, double tau,
                                   double tau_prime,
                                   const std::vector<double>& angles = {});

// Pulled-back correlator W(s) at proper-time separation s with dimensionless
// regulator eps > 0:
//   W(s) = Gamma(d-1) gamma^{1-d} / ((4pi)^{d/2} Gamma(d/2))
//          * [2i sin(s/(2 gamma) - i eps)]^{1-d}.
std::complex<double> wightman(const DetectorSetup& setup, double s,
                              double eps);

// Partial sum of the mode expansion of the same correlator,
//   gamma^{1-d} / ((4pi)^{d/2} Gamma(d/2))
//     * sum_{n=0}^{N} Gamma(d+n-1)/Gamma(n+1) e^{-i(2n+d-1)(s/(2gamma) - i eps)};
// converges to wightman() as N grows for any eps > 0.
std::complex<double> wightman_mode_expansion(const DetectorSetup& setup,
                                             double s, double eps, int n_max);

}  // namespace background
}  // namespace adsmana

#endif
