#ifndef ADSMANA_MANA_HPP
#define ADSMANA_MANA_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "adsmana/background.hpp"

// Resource layer: the detector's final-state density matrix, the mana
// monotone, and the harvest discriminant Delta = -(q + 2 beta).

namespace adsmana {
namespace mana {

// Perturbative final state of the qutrit. The ground population is reported
// as p = 1 - q (the second-excited population is O(lambda^4) and set to 0),
// which affects display only: mana depends on q and beta alone.
struct DetectorState {
  double q = 0.0;
  std::complex<double> beta{0.0, 0.0};
  double p = 1.0;

  // [[p, 0, beta*], [0, q, 0], [beta, 0, 1-p-q]]; trace 1 by construction.
  Eigen::Matrix3cd matrix() const;
  // Smallest eigenvalue of the (Hermitian) matrix; slightly negative at
  // O(lambda^4) whenever beta != 0, which is expected for a perturbative
  // state and worth surfacing as a diagnostic.
  double min_eigenvalue() const;
};

struct HarvestVerdict {
  double delta = 0.0;
  bool harvestable = false;   // delta > 0
  double mana_delta = 0.0;    // ln(1 + 2 delta / 3) if harvestable, else 0
};

DetectorState build_state(double q, std::complex<double> beta);

// M = ln[1 - q + (|q - Re b - sqrt3 Im b| + |q + 2 Re b| +
//                 |q - Re b + sqrt3 Im b|) / 3]  (>= 0; 0 exactly on
// stabilizer states, where the three absolute values sum to 3q).
double mana(double q, std::complex<double> beta);

// Discriminant verdict for the regime q > 0, real beta <= 0.
HarvestVerdict verdict(double q, double beta_real);

struct ManaCurvePoint {
  double omega = 0.0;
  double mana = 0.0;
};

struct ManaCurve {
  std::vector<ManaCurvePoint> points;
  double argmax_omega = 0.0;
  double max_mana = 0.0;
};

// Series-evaluated M over a strictly increasing positive gap grid; the setup
// is used as a template with its gap replaced per grid point.
ManaCurve mana_curve(const background::DetectorSetup& setup_template,
                     const std::vector<double>& omega_grid);

}  // namespace mana
}  // namespace adsmana

#endif
