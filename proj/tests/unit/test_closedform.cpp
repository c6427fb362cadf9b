#include "adsmana/closedform.hpp"

#include <cmath>
#include <random>

#include "adsmana/series.hpp"
#include "doctest.h"
#include "golden_util.hpp"

using namespace adsmana::closedform;
using adsmana::background::DetectorSetup;

namespace {
DetectorSetup standard(int d = 3) { return DetectorSetup{d, 1.0, 0.1, 1.0, 1.0, 1.0}; }
}  // namespace

TEST_CASE("closed forms carry the right signs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ul(0.8, 60.0);
  std::uniform_real_distribution<double> uo(0.05, 1.5);
  for (int d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 30; ++trial) {
      DetectorSetup s{d, ul(rng), 0.1, 1.0, 1.0, uo(rng)};
      CHECK(q_closed(s).value > 0.0);
      CHECK(beta_closed(s).value < 0.0);
    }
  }
  DetectorSetup s = standard();
  s.coupling = 0.0;
  CHECK(beta_closed(s).value == 0.0);
  CHECK(q_closed(s).value == 0.0);
}

TEST_CASE("d = 2 closed form collapses to its table row") {
  const DetectorSetup s{2, 1.7, 0.4, 0.9, 1.1, 0.8};
  CHECK(q_closed(s).value ==
        doctest::Approx(q_table(2, s).value).epsilon(1e-13));
}

TEST_CASE("beta d = 3 table row in closed form") {
  DetectorSetup s = standard();
  const double gamma = std::hypot(s.ads_radius, s.radial_position);
  const double expect =
      -std::exp(-0.5 * (1.0 / (gamma * gamma) + 1.0)) / (16.0 * M_PI);
  CHECK(beta_closed(s).value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(beta_table(3, s).value == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("table rows equal the generic closed forms") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> ulog_ell(0.0, std::log(100.0));
  std::uniform_real_distribution<double> uR(0.0, 1.0);
  std::uniform_real_distribution<double> us(0.5, 1.0);
  std::uniform_real_distribution<double> uo(0.05, 1.5);
  std::uniform_real_distribution<double> ulam(0.5, 2.0);
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      DetectorSetup s{d, std::exp(ulog_ell(rng)), uR(rng), us(rng), ulam(rng),
                      uo(rng)};
      CHECK(testutil::rel_err(q_table(d, s).value, q_closed(s).value) < 1e-12);
      CHECK(testutil::rel_err(beta_table(d, s).value, beta_closed(s).value) <
            1e-12);
    }
  }
  CHECK_THROWS_AS(q_table(5, standard(5)), std::invalid_argument);
  CHECK_THROWS_AS(beta_table(7, standard(7)), std::invalid_argument);
}

TEST_CASE("closed-form gap shrinks with the radius") {
  double prev_q = HUGE_VAL, prev_b = HUGE_VAL;
  for (double ell : {1.0, 10.0, 100.0, 1000.0}) {
    DetectorSetup s = standard();
    s.ads_radius = ell;
    const double q = adsmana::series::q_series(s).value;
    const double b = adsmana::series::beta_series_renormalized(s).value;
    const double gq = std::fabs(q_closed(s).value - q) / q;
    const double gb = std::fabs(beta_closed(s).value - b) / std::fabs(b);
    CHECK(gq < prev_q);
    CHECK(gb < prev_b);
    prev_q = gq;
    prev_b = gb;
  }
}

TEST_CASE("em term function evaluates and differentiates") {
  DetectorSetup s = standard();
  const auto f = em_term_function(s);

  // d = 2 -> constant polynomial 1, so f(0) = e^{-sigma^2 Omega'^2/2}
  const auto f2 = em_term_function(standard(2));
  const double gamma = std::hypot(1.0, 0.1);
  const double op2 = 1.0 + 0.5 / gamma;
  CHECK(f2(0.0) == doctest::Approx(std::exp(-0.5 * op2 * op2)).epsilon(1e-14));

  // Gaussian decay
  CHECK(f(80.0) == 0.0);
  CHECK(f(30.0) < 1e-100);

  // derivative descriptor vs central finite differences
  const auto df = f.derivative();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(0.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double x = ux(rng);
    const double h = 1e-5;
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    CHECK(testutil::rel_err(df(x), fd) < 1e-8);
  }

  // second derivative too (the chain is reused for the remainder kernel)
  const auto d2f = df.derivative();
  for (int i = 0; i < 10; ++i) {
    const double x = ux(rng);
    const double h = 1e-4;
    const double fd = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    CHECK(std::fabs(d2f(x) - fd) <= 1e-6 * std::max(1.0, std::fabs(d2f(x))));
  }
}

TEST_CASE("euler_maclaurin corrected value tracks the series") {
  {  // gamma ~ 1: residual in the advertised window and actually bounding
    const DetectorSetup s = standard();
    const auto em = euler_maclaurin_correct(s, 2, EmKind::excitation);
    const double q = adsmana::series::q_series(s).value;
    REQUIRE(em.em_residual_bound.has_value());
    const double rel = *em.em_residual_bound / em.value;
    CHECK(rel > 1e-8);
    CHECK(rel < 1e-4);
    CHECK(std::fabs(em.value - q) <= *em.em_residual_bound);

    const auto emb = euler_maclaurin_correct(s, 2, EmKind::coherence);
    const double b = adsmana::series::beta_series_renormalized(s).value;
    CHECK(std::fabs(emb.value - b) <= *emb.em_residual_bound);
  }
  {  // m = 1 still bounds, just more loosely
    const DetectorSetup s = standard();
    const auto em = euler_maclaurin_correct(s, 1, EmKind::excitation);
    const double q = adsmana::series::q_series(s).value;
    CHECK(std::fabs(em.value - q) <= *em.em_residual_bound);
  }
  {  // large radius: corrections shrink and the corrected value is tight
    DetectorSetup s = standard();
    s.ads_radius = 100.0;
    const auto em = euler_maclaurin_correct(s, 2, EmKind::excitation);
    const double q = adsmana::series::q_series(s).value;
    CHECK(std::fabs(em.value - q) / q <= 1e-8);
    CHECK(std::fabs(em.value - q) <= *em.em_residual_bound);
  }
  CHECK_THROWS_AS(euler_maclaurin_correct(standard(), 3, EmKind::excitation),
                  std::invalid_argument);
}
