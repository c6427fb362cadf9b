#include "adsmana/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "adsmana/background.hpp"
#include "adsmana/closedform.hpp"
#include "adsmana/mana.hpp"
#include "adsmana/oracle.hpp"
#include "adsmana/series.hpp"
#include "adsmana/sweep.hpp"

namespace adsmana {
namespace verify {

namespace {

using background::DetectorSetup;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5g", v);
  return buf;
}

DetectorSetup standard_point(int d) {
  return DetectorSetup{d, 1.0, 0.1, 1.0, 1.0, 1.0};
}

double mana_at(const DetectorSetup& base, double omega) {
  DetectorSetup s = base;
  s.gap = omega;
  const double q = series::q_series(s).value;
  const double b = series::beta_series_renormalized(s).value;
  return mana::mana(q, {b, 0.0});
}

// Golden-section refinement of the maximum of fn inside [lo, hi].
double refine_argmax(const std::function<double(double)>& fn, double lo,
                     double hi) {
  constexpr double kInvPhi = 0.61803398874989484820458683436564;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < 80; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
    }
  }
  return 0.5 * (a + b);
}

struct Peak {
  double argmax;
  double max;
};

Peak mana_peak(const DetectorSetup& base) {
  // scan the default sweep grid, then refine around the best grid point
  constexpr int kSteps = 120;
  constexpr double kLo = 0.05, kHi = 6.0;
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < kSteps; ++i) {
    const double omega = kLo + (kHi - kLo) * i / (kSteps - 1);
    const double m = mana_at(base, omega);
    if (m > best) {
      best = m;
      best_i = i;
    }
  }
  const double step = (kHi - kLo) / (kSteps - 1);
  const double lo = std::max(kLo, kLo + (best_i - 1) * step);
  const double hi = std::min(kHi, kLo + (best_i + 1) * step);
  auto fn = [&](double w) { return mana_at(base, w); };
  const double arg = refine_argmax(fn, lo, hi);
  return {arg, fn(arg)};
}

// Largest log-magnitude of any term of the Delta series; when this is below
// the double-precision floor, a zero sum still certifies a positive value.
double delta_peak_log_term(const DetectorSetup& s) {
  const double gamma = std::hypot(s.ads_radius, s.radial_position);
  const double sig2 = s.sigma * s.sigma;
  const double log_alpha = std::log(s.sigma * s.sigma * M_PI / 4.0) +
                           (1.0 - s.d) * std::log(gamma) -
                           0.5 * s.d * std::log(4.0 * M_PI) -
                           specfn::log_gamma(0.5 * s.d);
  double best = -HUGE_VAL;
  double prev = -HUGE_VAL;
  for (long long n = 0; n < 100000; ++n) {
    const double k = 2.0 * n + s.d - 1.0;
    const double omega_n = k / (2.0 * gamma);
    const double x = sig2 * s.gap * omega_n;
    const double lt = specfn::gamma_ratio_log(s.d, n) -
                      0.5 * sig2 * (s.gap * s.gap + omega_n * omega_n) +
                      std::log(-std::expm1(-x));
    best = std::max(best, lt);
    if (n > s.d + 2 && lt < prev && lt < best - 60.0) break;
    prev = lt;
  }
  return best + std::log(2.0) + log_alpha;
}

}  // namespace

// ---------------------------------------------------------------------------
// golden-table conformance

namespace {

struct GoldenRecord {
  std::string name;
  std::vector<double> args;
  double value;
};

std::vector<GoldenRecord> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open golden table: " + path);
  std::vector<GoldenRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw UsageError("malformed golden record: " + line);
    GoldenRecord rec;
    rec.name = line.substr(0, tab1);
    std::string args = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) rec.args.push_back(std::strtod(tok.c_str(), nullptr));
    rec.value = std::strtod(line.substr(tab2 + 1).c_str(), nullptr);
    records.push_back(std::move(rec));
  }
  return records;
}

struct FunctionContract {
  std::function<double(const std::vector<double>&)> eval;
  double tol;
  bool log_scale;  // compare against max(1, |ref|) instead of |ref|
  const char* domain;
};

const std::map<std::string, FunctionContract>& specfn_contracts() {
  static const std::map<std::string, FunctionContract> contracts = {
      {"log_gamma",
       {[](const std::vector<double>& a) { return specfn::log_gamma(a[0]); },
        1e-13, true, "x in [1e-3, 1e6]"}},
      {"gamma_ratio_log",
       {[](const std::vector<double>& a) {
          return specfn::gamma_ratio_log(static_cast<int>(a[0]),
                                         static_cast<long long>(a[1]));
        },
        1e-13, true, "d in [2,10], n in [0, 1e5]"}},
      {"erfc",
       {[](const std::vector<double>& a) { return specfn::erfc(a[0]); },
        1e-13, false, "|x| <= 26"}},
      {"erfi_scaled",
       {[](const std::vector<double>& a) { return specfn::erfi_scaled(a[0]); },
        1e-12, false, "x in [0, 100]"}},
      {"kummer_1f1",
       {[](const std::vector<double>& a) {
          return specfn::kummer_1f1(a[0], a[1], a[2]);
        },
        1e-10, false, "|a| <= 30, b in {1/2, 3/2}, |z| <= 50"}},
      {"tricomi_u",
       {[](const std::vector<double>& a) {
          return specfn::tricomi_u(a[0], a[1], a[2]);
        },
        1e-9, false, "a in [1, 6], b = 3/2, z in (0, 50]"}},
      {"upper_inc_gamma",
       {[](const std::vector<double>& a) {
          return specfn::upper_inc_gamma(a[0], a[1]);
        },
        1e-11, false, "s in [-5, 5], z in (0, 50]"}},
  };
  return contracts;
}

}  // namespace

std::vector<CheckResult> run_specfn(const std::string& golden_dir,
                                    std::vector<specfn::AccuracyReport>* reports) {
  const auto records = load_golden(golden_dir + "/specfn_golden.txt");
  struct Accum {
    double max_err = 0.0;
    int points = 0;
  };
  std::map<std::string, Accum> accums;
  for (const auto& rec : records) {
    const auto it = specfn_contracts().find(rec.name);
    if (it == specfn_contracts().end())
      throw UsageError("golden table names unknown function: " + rec.name);
    const double got = it->second.eval(rec.args);
    const double scale = it->second.log_scale
                             ? std::max(1.0, std::fabs(rec.value))
                             : std::fabs(rec.value);
    const double err = std::fabs(got - rec.value) / scale;
    auto& acc = accums[rec.name];
    acc.max_err = std::max(acc.max_err, err);
    acc.points += 1;
  }
  std::vector<CheckResult> results;
  for (const auto& [name, contract] : specfn_contracts()) {
    const auto it = accums.find(name);
    const bool have = it != accums.end() && it->second.points >= 20;
    const double err = have ? it->second.max_err : HUGE_VAL;
    CheckResult r;
    r.name = "specfn/" + name;
    r.pass = have && err <= contract.tol;
    r.detail = have ? "max rel err " + num(err) + " over " +
                          std::to_string(it->second.points) +
                          " points (tol " + num(contract.tol) + ")"
                    : "fewer than 20 golden points";
    results.push_back(r);
    if (reports) {
      specfn::AccuracyReport rep;
      rep.function_name = name;
      rep.max_rel_error = have ? err : HUGE_VAL;
      rep.domain_tested = contract.domain;
      reports->push_back(rep);
    }
  }
  return results;
}

// ---------------------------------------------------------------------------
// finite-regulator identity

std::vector<CheckResult> run_identity() {
  std::vector<CheckResult> results;
  double worst_ratio = 0.0;
  std::string worst_where;
  bool pass = true;
  for (int d : {2, 3, 4, 5}) {
    const DetectorSetup setup = standard_point(d);
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const double qs = series::q_series_with_regulator(setup, eps).value;
      const double qq = oracle::quad_q(setup, eps).value;
      const double q_allow = std::max(1e-10, 1e-8 * std::fabs(qs));
      const double bs =
          series::beta_series_renormalized_regulated(setup, eps).value;
      const double bq = oracle::quad_beta(setup, eps).value;
      const double b_allow = std::max(1e-10, 1e-8 * std::fabs(bs));
      for (auto [diff, allow, tag] :
           {std::tuple{std::fabs(qq - qs), q_allow, 'q'},
            std::tuple{std::fabs(bq - bs), b_allow, 'b'}}) {
        if (diff > allow) pass = false;
        if (allow > 0 && diff / allow > worst_ratio) {
          worst_ratio = diff / allow;
          worst_where = std::string(1, tag) + " at d=" + std::to_string(d) +
                        " eps=" + num(eps);
        }
      }
    }
  }
  results.push_back({"identity/quad-vs-series",
                     pass,
                     "worst |diff|/allowance = " + num(worst_ratio) + " (" +
                         worst_where + ")"});
  return results;
}

// ---------------------------------------------------------------------------
// limits

std::vector<CheckResult> run_limits() {
  std::vector<CheckResult> results;

  {  // flat-space limit at ell = 1e4
    bool pass = true;
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
      DetectorSetup s = standard_point(d);
      s.ads_radius = 1e4;
      const double qm = series::minkowski_q(d, 1.0, 1.0, 1.0);
      const double bm = series::minkowski_beta(d, 1.0, 1.0, 1.0);
      const double dq = std::fabs(series::q_series(s).value - qm) / qm;
      const double db =
          std::fabs(series::beta_series_renormalized(s).value - bm) /
          std::fabs(bm);
      worst = std::max({worst, dq, db});
      if (dq > 1e-3 || db > 1e-3) pass = false;
    }
    // the two published forms of the d=3 flat-space q
    const double u_form = series::minkowski_q(3, 1.0, 1.0, 1.0);
    const double erfc_form =
        (2.0 * std::exp(-0.5) -
         std::sqrt(2.0 * M_PI) * specfn::erfc(1.0 / M_SQRT2)) /
        (16.0 * M_PI);
    const double dforms = std::fabs(u_form - erfc_form) / erfc_form;
    if (dforms > 1e-10) pass = false;
    results.push_back({"limits/minkowski",
                       pass,
                       "worst series-vs-closed rel " + num(worst) +
                           " (tol 1e-3); U-form vs erfc-form rel " +
                           num(dforms) + " (tol 1e-10)"});
  }

  {  // closed-form gap shrinking with ell
    for (bool coherence : {false, true}) {
      bool monotone = true;
      double prev = HUGE_VAL;
      double gap_at_100 = 0.0;
      for (double ell : {1.0, 10.0, 100.0, 1000.0}) {
        DetectorSetup s = standard_point(3);
        s.ads_radius = ell;
        const double exact =
            coherence ? series::beta_series_renormalized(s).value
                      : series::q_series(s).value;
        const double closed = coherence ? closedform::beta_closed(s).value
                                        : closedform::q_closed(s).value;
        const double gap = std::fabs(closed - exact) / std::fabs(exact);
        if (gap >= prev) monotone = false;
        prev = gap;
        if (ell == 100.0) gap_at_100 = gap;
      }
      const bool pass = monotone && gap_at_100 <= 1e-4;
      results.push_back(
          {std::string("limits/closed-form-gap-") + (coherence ? "beta" : "q"),
           pass,
           std::string(monotone ? "monotone" : "NOT monotone") +
               ", gap(ell=100) = " + num(gap_at_100) + " (tol 1e-4)"});
    }
  }

  {  // Euler-Maclaurin bridge at gamma ~ 1
    const DetectorSetup s = standard_point(3);
    const auto em = closedform::euler_maclaurin_correct(
        s, 2, closedform::EmKind::excitation);
    const double q = series::q_series(s).value;
    const double rel_bound = *em.em_residual_bound / std::fabs(em.value);
    const bool in_window = rel_bound >= 1e-8 && rel_bound <= 1e-4;
    const double err = std::fabs(em.value - q);
    const bool bounded = err <= *em.em_residual_bound;
    results.push_back({"limits/euler-maclaurin",
                       in_window && bounded,
                       "m=2 residual bound rel " + num(rel_bound) +
                           " (window [1e-8, 1e-4]); |corrected - series| = " +
                           num(err) + " vs bound " +
                           num(*em.em_residual_bound)});
  }
  return results;
}

// ---------------------------------------------------------------------------
// figures

std::vector<CheckResult> run_figures() {
  std::vector<CheckResult> results;

  {  // peaks versus curvature at d = 3
    std::vector<double> ells = {0.2, 0.5, 1.0, 5.0};
    std::vector<Peak> peaks;
    for (double ell : ells) {
      DetectorSetup s = standard_point(3);
      s.ads_radius = ell;
      peaks.push_back(mana_peak(s));
    }
    bool ordered = true;
    for (std::size_t i = 1; i < peaks.size(); ++i)
      if (!(peaks[i].max > peaks[i - 1].max &&
            peaks[i].argmax > peaks[i - 1].argmax))
        ordered = false;
    const bool suppressed = peaks[0].max < 0.1 * peaks[2].max;
    std::string detail = "max/argmax:";
    for (std::size_t i = 0; i < peaks.size(); ++i)
      detail += " ell=" + num(ells[i]) + " -> (" + num(peaks[i].max) + ", " +
                num(peaks[i].argmax) + ")";
    results.push_back({"figures/curvature", ordered && suppressed, detail});
  }

  {  // peaks versus dimension at ell = 1
    std::vector<int> ds = {3, 4, 5, 6};
    std::vector<Peak> peaks;
    for (int d : ds) peaks.push_back(mana_peak(standard_point(d)));
    bool ordered = true;
    for (std::size_t i = 1; i < peaks.size(); ++i)
      if (!(peaks[i].max < peaks[i - 1].max &&
            peaks[i].argmax < peaks[i - 1].argmax))
        ordered = false;
    std::string detail = "max/argmax:";
    for (std::size_t i = 0; i < peaks.size(); ++i)
      detail += " d=" + std::to_string(ds[i]) + " -> (" + num(peaks[i].max) +
                ", " + num(peaks[i].argmax) + ")";
    results.push_back({"figures/dimension", ordered, detail});
  }

  {  // small-gap linearity and large-gap Gaussian decay
    const DetectorSetup s = standard_point(3);
    const double ratio = mana_at(s, 2e-6) / mana_at(s, 1e-6);
    const bool linear = std::fabs(ratio - 2.0) <= 0.1;

    constexpr int kN = 21;
    Eigen::MatrixXd A(kN, 3);
    Eigen::VectorXd y(kN);
    for (int i = 0; i < kN; ++i) {
      const double w = 4.0 + 2.0 * i / (kN - 1);
      A(i, 0) = w * w;
      A(i, 1) = w;
      A(i, 2) = 1.0;
      y(i) = std::log(mana_at(s, w));
    }
    const Eigen::Vector3d coef =
        A.colPivHouseholderQr().solve(y);
    const bool gaussian = std::fabs(coef(0) + 0.5) <= 0.05;  // -sigma^2/2 +/- 10%
    results.push_back({"figures/asymptotics",
                       linear && gaussian,
                       "M(2w)/M(w) at w=1e-6: " + num(ratio) +
                           " (2 +/- 5%); log-fit curvature " + num(coef(0)) +
                           " (-0.5 +/- 10%)"});
  }
  return results;
}

// ---------------------------------------------------------------------------
// consistency: tables, positivity, mana closed form, geometry

std::vector<CheckResult> run_consistency() {
  std::vector<CheckResult> results;

  {  // table rows == generic closed forms
    std::mt19937_64 rng(0x7ab1e5ULL);
    std::uniform_real_distribution<double> uR(0.0, 1.0);
    std::uniform_real_distribution<double> usig(0.5, 1.0);
    std::uniform_real_distribution<double> uom(0.05, 1.5);
    std::uniform_real_distribution<double> ulam(0.5, 2.0);
    std::uniform_real_distribution<double> ulog_ell(0.0, std::log(100.0));
    bool pass = true;
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
      for (int trial = 0; trial < 100; ++trial) {
        DetectorSetup s{d, std::exp(ulog_ell(rng)), uR(rng), usig(rng),
                        ulam(rng), uom(rng)};
        const double qg = closedform::q_closed(s).value;
        const double qt = closedform::q_table(d, s).value;
        const double bg = closedform::beta_closed(s).value;
        const double bt = closedform::beta_table(d, s).value;
        const double eq = std::fabs(qg - qt) / std::fabs(qt);
        const double eb = std::fabs(bg - bt) / std::fabs(bt);
        worst = std::max({worst, eq, eb});
        if (eq > 1e-12 || eb > 1e-12) pass = false;
      }
    }
    results.push_back({"consistency/table-identities", pass,
                       "worst rel diff " + num(worst) +
                           " over 100 draws x d in {2,3,4} (tol 1e-12)"});
  }

  {  // Delta > 0 across the sampled parameter space
    std::mt19937_64 rng(0xde17aULL);
    std::uniform_int_distribution<int> ud(2, 10);
    std::uniform_real_distribution<double> ulog_ell(std::log(0.1),
                                                    std::log(100.0));
    std::uniform_real_distribution<double> uR(0.0, 1.0);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    bool pass = true;
    int underflow = 0;
    std::string failure;
    for (int trial = 0; trial < 1000; ++trial) {
      DetectorSetup s{ud(rng), std::exp(ulog_ell(rng)), uR(rng), 1.0, 1.0,
                      10.0 * (1.0 - uu(rng))};
      const double q = series::q_series(s).value;
      const double b = series::beta_series_renormalized(s).value;
      const double delta = series::delta_series(s).value;
      bool ok = q >= 0.0 && b <= 0.0 && delta >= 0.0;
      if (ok && delta == 0.0) {
        // a zero can only be accepted when the whole series sits below the
        // double-precision floor
        if (delta_peak_log_term(s) < -740.0)
          ++underflow;
        else
          ok = false;
      }
      if (!ok && failure.empty()) {
        pass = false;
        failure = " first failure: d=" + std::to_string(s.d) +
                  " ell=" + num(s.ads_radius) + " Omega=" + num(s.gap);
      }
    }
    results.push_back({"consistency/positivity", pass,
                       "1000 draws; " + std::to_string(underflow) +
                           " sub-double-range (certified positive by term "
                           "logs)" +
                           failure});
  }

  {  // mana closed form on the (q, beta) grid
    bool pass = true;
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double q = i / 100.0;
      for (int j = 0; j < 100; ++j) {
        const double b = -0.5 * j / 99.0;
        const double m = mana::mana(q, {b, 0.0});
        const double delta = -(q + 2.0 * b);
        const double expect = delta > 0.0 ? std::log1p(2.0 * delta / 3.0) : 0.0;
        const double err = std::fabs(m - expect);
        worst = std::max(worst, err);
        if (err > 1e-14) pass = false;
      }
    }
    results.push_back({"consistency/mana-identity", pass,
                       "worst |M - ln(1+2Delta/3)| = " + num(worst) +
                           " on the 100x100 grid (tol 1e-14)"});
  }

  {  // geodesic interval: embedding route vs closed form
    std::mt19937_64 rng(0x9e0deULL);
    std::uniform_int_distribution<int> ud(2, 6);
    std::uniform_real_distribution<double> ulog_ell(std::log(0.1),
                                                    std::log(100.0));
    std::uniform_real_distribution<double> uR(0.0, 1.0);
    std::uniform_real_distribution<double> uang(0.0, M_PI);
    std::uniform_real_distribution<double> usep(0.05, 10.0);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = ud(rng);
      DetectorSetup s{d, std::exp(ulog_ell(rng)), uR(rng), 1.0, 1.0, 1.0};
      const double gamma = std::hypot(s.ads_radius, s.radial_position);
      std::vector<double> angles(d - 1);
      for (auto& a : angles) a = uang(rng);
      const double tau = 10.0 * (uu(rng) - 0.5) * gamma;
      const double tau_p = tau + (uu(rng) < 0.5 ? -1.0 : 1.0) * usep(rng) * gamma;
      const double closed = s.is_minkowski()
                                ? 0.0
                                : background::geodesic_interval(s, tau, tau_p);
      const double embedded =
          background::geodesic_interval_embedding(s, tau, tau_p, angles);
      const double err = std::fabs(closed - embedded) / std::fabs(closed);
      worst = std::max(worst, err);
      if (err > 1e-12) pass = false;
    }
    results.push_back({"consistency/geodesic", pass,
                       "worst rel diff " + num(worst) +
                           " over 1000 draws (tol 1e-12)"});
  }
  return results;
}

std::vector<CheckResult> run_all(const std::string& golden_dir) {
  std::vector<CheckResult> all;
  for (auto part :
       {run_identity(), run_limits(), run_consistency(), run_figures()}) {
    all.insert(all.end(), part.begin(), part.end());
  }
  auto sf = run_specfn(golden_dir);
  all.insert(all.end(), sf.begin(), sf.end());
  return all;
}

}  // namespace verify
}  // namespace adsmana
