#ifndef ADSMANA_VERIFY_HPP
#define ADSMANA_VERIFY_HPP

#include <string>
#include <vector>

#include "adsmana/specfn.hpp"

// Verification checks behind `adsmana verify` and the acceptance test
// binary. Each check pins its tolerances in code and reports one line.

namespace adsmana {
namespace verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Golden-table conformance of every special function; also returns the
// per-function accuracy reports through `reports` when non-null.
std::vector<CheckResult> run_specfn(
    const std::string& golden_dir,
    std::vector<specfn::AccuracyReport>* reports = nullptr);

// Finite-regulator identity between quadrature and the regulated series.
std::vector<CheckResult> run_identity();

// Flat-space and large-radius limits plus the Euler-Maclaurin bridge.
std::vector<CheckResult> run_limits();

// Peak phenomenology versus curvature and dimension, and the small/large
// gap asymptotics of the harvested mana.
std::vector<CheckResult> run_figures();

// Table identities, positivity, the mana closed form, geometry consistency.
std::vector<CheckResult> run_consistency();

std::vector<CheckResult> run_all(const std::string& golden_dir);

}  // namespace verify
}  // namespace adsmana

#endif
