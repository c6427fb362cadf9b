#include "adsmana/mana.hpp"

#include <cmath>
#include <random>

#include "adsmana/series.hpp"
#include "doctest.h"

using namespace adsmana::mana;
using adsmana::background::DetectorSetup;

TEST_CASE("build_state") {
  const auto ground = build_state(0.0, {0.0, 0.0});
  CHECK(ground.matrix()(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(ground.matrix()(1, 1) == std::complex<double>(0.0, 0.0));
  CHECK(ground.min_eigenvalue() == doctest::Approx(0.0));

  const auto st = build_state(0.1, {-0.03, 0.0});
  const auto rho = st.matrix();
  CHECK(rho(0, 0).real() == doctest::Approx(0.9));
  CHECK(rho(1, 1).real() == doctest::Approx(0.1));
  CHECK(rho(2, 2).real() == doctest::Approx(0.0));
  CHECK(rho(2, 0) == std::complex<double>(-0.03, 0.0));
  CHECK(rho(0, 2) == std::complex<double>(-0.03, 0.0));
  // trace is exactly one by construction
  CHECK((rho(0, 0) + rho(1, 1) + rho(2, 2)).real() == 1.0);
  // off-diagonal coherence makes the smallest eigenvalue dip below zero at
  // O(lambda^4)
  CHECK(st.min_eigenvalue() < 0.0);
  CHECK(st.min_eigenvalue() > -0.01);

  CHECK_THROWS_AS(build_state(-0.1, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_state(1.5, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("mana pinned values") {
  CHECK(mana(0.0, {0.0, 0.0}) == 0.0);
  // Delta < 0 collapses the bracket to 1
  CHECK(mana(0.1, {-0.02, 0.0}) == 0.0);
  // Delta = 0.06 -> ln(1.04)
  CHECK(mana(0.1, {-0.08, 0.0}) ==
        doctest::Approx(std::log(1.04)).epsilon(1e-14));
  CHECK(mana(0.1, {-0.08, 0.0}) == doctest::Approx(0.0392207131532813).epsilon(1e-12));
}

TEST_CASE("mana closed form on the grid") {
  for (int i = 1; i <= 100; ++i) {
    const double q = i / 100.0;
    for (int j = 0; j < 100; ++j) {
      const double b = -0.5 * j / 99.0;
      const double delta = -(q + 2.0 * b);
      const double expect = delta > 0.0 ? std::log1p(2.0 * delta / 3.0) : 0.0;
      CHECK(std::fabs(mana(q, {b, 0.0}) - expect) <= 1e-14);
    }
  }
}

TEST_CASE("mana properties for complex beta") {
  std::mt19937_64 rng(60601);
  std::uniform_real_distribution<double> uq(0.0, 1.0);
  std::uniform_real_distribution<double> ub(-0.5, 0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const double q = uq(rng);
    const std::complex<double> beta{ub(rng), ub(rng)};
    const double m = mana(q, beta);
    CHECK(m >= 0.0);
    // invariant under Im beta -> -Im beta (the sqrt-3 terms swap)
    CHECK(m == doctest::Approx(mana(q, std::conj(beta))).epsilon(1e-15));
  }
}

TEST_CASE("verdict") {
  const auto boundary = verdict(0.1, -0.05);
  CHECK(boundary.delta == 0.0);
  CHECK_FALSE(boundary.harvestable);
  CHECK(boundary.mana_delta == 0.0);

  const auto yes = verdict(0.1, -0.08);
  CHECK(yes.delta == doctest::Approx(0.06).epsilon(1e-14));
  CHECK(yes.harvestable);
  CHECK(yes.mana_delta == doctest::Approx(std::log(1.04)).epsilon(1e-14));
  // agrees with the full formula in this regime
  CHECK(yes.mana_delta == doctest::Approx(mana(0.1, {-0.08, 0.0})).epsilon(1e-14));

  CHECK_THROWS_AS(verdict(-0.1, -0.05), std::invalid_argument);
  CHECK_THROWS_AS(verdict(0.1, 0.05), std::invalid_argument);

  // monotone in delta
  double prev = -1.0;
  for (double delta = 0.0; delta <= 1.0; delta += 0.05) {
    const double md = verdict(0.5, -(0.5 + delta) / 2.0).mana_delta;
    CHECK(md >= prev);
    prev = md;
  }
}

TEST_CASE("series-produced states are always harvestable") {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> ud(2, 6);
  std::uniform_real_distribution<double> ul(0.5, 30.0);
  std::uniform_real_distribution<double> uo(0.1, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    DetectorSetup s{ud(rng), ul(rng), 0.1, 1.0, 1.0, uo(rng)};
    const double q = adsmana::series::q_series(s).value;
    const double b = adsmana::series::beta_series_renormalized(s).value;
    if (q <= 0.0) continue;  // sub-double-range corner
    const auto v = verdict(q, b);
    CHECK(v.harvestable);
    CHECK(v.mana_delta == doctest::Approx(mana(q, {b, 0.0})).epsilon(1e-14));
  }
}

TEST_CASE("mana_curve") {
  const DetectorSetup tmpl{3, 1.0, 0.1, 1.0, 1.0, 1.0};
  std::vector<double> grid;
  for (int i = 0; i < 60; ++i) grid.push_back(0.05 + i * 0.1);
  const auto curve = mana_curve(tmpl, grid);
  CHECK(curve.points.size() == grid.size());
  CHECK(curve.max_mana > 0.0);
  CHECK(curve.argmax_omega > grid.front());
  CHECK(curve.argmax_omega < grid.back());
  // the template's own gap field is irrelevant
  DetectorSetup other = tmpl;
  other.gap = 3.0;
  CHECK(mana_curve(other, grid).max_mana == curve.max_mana);

  CHECK_THROWS_AS(mana_curve(tmpl, {}), std::invalid_argument);
  CHECK_THROWS_AS(mana_curve(tmpl, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(mana_curve(tmpl, {-1.0, 0.5}), std::invalid_argument);
}
