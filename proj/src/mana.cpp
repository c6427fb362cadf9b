#include "adsmana/mana.hpp"

#include <cmath>
#include <stdexcept>

#include "adsmana/series.hpp"

namespace adsmana {
namespace mana {

namespace {
constexpr double kSqrt3 = 1.73205080756887729352744634150587237;
}

Eigen::Matrix3cd DetectorState::matrix() const {
  Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();
  rho(0, 0) = p;
  rho(1, 1) = q;
  rho(2, 2) = 1.0 - p - q;
  rho(0, 2) = std::conj(beta);
  rho(2, 0) = beta;
  return rho;
}

double DetectorState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(matrix());
  return solver.eigenvalues().minCoeff();
}

DetectorState build_state(double q, std::complex<double> beta) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("build_state: q must lie in [0, 1]");
  DetectorState s;
  s.q = q;
  s.beta = beta;
  s.p = 1.0 - q;
  return s;
}

double mana(double q, std::complex<double> beta) {
  const double x = beta.real();
  const double y = beta.imag();
  const double abs_sum = std::fabs(q - x - kSqrt3 * y) +
                         std::fabs(q + 2.0 * x) +
                         std::fabs(q - x + kSqrt3 * y);
  // ln(1 - q + abs_sum/3) via log1p; abs_sum/3 >= q by the triangle
  // inequality, so the argument of ln can only dip below 1 by rounding.
  const double shifted = abs_sum / 3.0 - q;
  if (shifted <= -1.0)
    throw std::domain_error("mana: non-positive logarithm argument");
  return std::max(0.0, std::log1p(shifted));
}

HarvestVerdict verdict(double q, double beta_real) {
  if (!(q > 0.0)) throw std::invalid_argument("verdict: requires q > 0");
  if (!(beta_real <= 0.0))
    throw std::invalid_argument("verdict: requires beta <= 0");
  HarvestVerdict v;
  v.delta = series::delta_discriminant(q, beta_real);
  v.harvestable = v.delta > 0.0;
  v.mana_delta = v.harvestable ? std::log1p(2.0 * v.delta / 3.0) : 0.0;
  return v;
}

ManaCurve mana_curve(const background::DetectorSetup& setup_template,
                     const std::vector<double>& omega_grid) {
  if (omega_grid.empty())
    throw std::invalid_argument("mana_curve: empty gap grid");
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > 0.0))
      throw std::invalid_argument("mana_curve: gaps must be > 0");
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw std::invalid_argument("mana_curve: grid must be strictly increasing");
  }
  ManaCurve curve;
  curve.points.reserve(omega_grid.size());
  for (double omega : omega_grid) {
    background::DetectorSetup setup = setup_template;
    setup.gap = omega;
    const double q = series::q_series(setup).value;
    const double b = series::beta_series_renormalized(setup).value;
    const double m = mana(q, {b, 0.0});
    curve.points.push_back({omega, m});
    if (curve.points.size() == 1 || m > curve.max_mana) {
      curve.max_mana = m;
      curve.argmax_omega = omega;
    }
  }
  return curve;
}

}  // namespace mana
}  // namespace adsmana
