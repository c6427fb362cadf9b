// Command-line front end: single-point evaluation, parameter sweeps,
// verification suites, and SVG plots.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adsmana/background.hpp"
#include "adsmana/closedform.hpp"
#include "adsmana/mana.hpp"
#include "adsmana/oracle.hpp"
#include "adsmana/plot.hpp"
#include "adsmana/series.hpp"
#include "adsmana/sweep.hpp"
#include "adsmana/verify.hpp"

#ifndef ADSMANA_GOLDEN_DIR
#define ADSMANA_GOLDEN_DIR "tests/golden"
#endif

namespace {

using adsmana::UsageError;

double parse_ell(const std::string& text) {
  if (text == "minkowski" || text == "inf" || text == "Inf" || text == "INF")
    return adsmana::background::kMinkowskiRadius;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw UsageError("cannot parse ell value '" + text + "'");
  return v;
}

struct EvalOptions {
  int d = 3;
  std::string ell = "1";
  double R = 0.1, sigma = 1.0, lambda = 1.0, omega = 1.0;
  std::string method = "series";
  double eps = 0.0;
  double tol = 1e-14;
};

int cmd_eval(const EvalOptions& opt) {
  const double ell = parse_ell(opt.ell);
  adsmana::background::DetectorSetup setup{opt.d,     ell,        opt.R,
                                           opt.sigma, opt.lambda, opt.omega};
  double q = 0.0, beta = 0.0, gamma = 0.0, alpha = 0.0;
  long long n_terms = 0;
  double trunc_err = 0.0;
  std::string method_used = opt.method;
  bool cap_hit = false;

  if (setup.is_minkowski()) {
    q = adsmana::series::minkowski_q(opt.d, opt.sigma, opt.lambda, opt.omega);
    beta =
        adsmana::series::minkowski_beta(opt.d, opt.sigma, opt.lambda, opt.omega);
    gamma = adsmana::background::kMinkowskiRadius;
    method_used = "minkowski_closed";
    n_terms = 1;
  } else {
    const auto geom = adsmana::background::derive_geometry(setup);
    gamma = geom.gamma;
    alpha = geom.alpha;
    if (opt.method == "series") {
      adsmana::series::SeriesResult qr, br;
      if (opt.eps > 0.0) {
        qr = adsmana::series::q_series_with_regulator(setup, opt.eps, opt.tol);
        br = adsmana::series::beta_series_renormalized_regulated(setup, opt.eps,
                                                                 opt.tol);
        method_used = "series_with_regulator";
      } else {
        qr = adsmana::series::q_series(setup, opt.tol);
        br = adsmana::series::beta_series_renormalized(setup, opt.tol);
      }
      q = qr.value;
      beta = br.value;
      n_terms = std::max(qr.terms_used, br.terms_used);
      trunc_err = std::max(qr.tail_bound, br.tail_bound);
      cap_hit = qr.term_cap_hit || br.term_cap_hit;
    } else if (opt.method == "closed") {
      q = adsmana::closedform::q_closed(setup).value;
      beta = adsmana::closedform::beta_closed(setup).value;
      n_terms = opt.d - 1;
    } else if (opt.method == "quad") {
      if (!(opt.eps > 0.0))
        throw UsageError("eval: --method quad requires --eps > 0");
      const auto qr = adsmana::oracle::quad_q(setup, opt.eps);
      const auto br = adsmana::oracle::quad_beta(setup, opt.eps);
      q = qr.value;
      beta = br.value;
      n_terms = qr.subdivisions + br.subdivisions;
      trunc_err = std::max(qr.abs_error_estimate, br.abs_error_estimate);
    } else {
      throw UsageError("eval: unknown method '" + opt.method + "'");
    }
  }

  const double delta = -(q + 2.0 * beta);
  const double m = adsmana::mana::mana(q, {beta, 0.0});
  using adsmana::format_double;
  std::printf("d         = %d\n", opt.d);
  std::printf("ell       = %s\n", format_double(ell).c_str());
  std::printf("R         = %s\n", format_double(opt.R).c_str());
  std::printf("sigma     = %s\n", format_double(opt.sigma).c_str());
  std::printf("lambda    = %s\n", format_double(opt.lambda).c_str());
  std::printf("omega     = %s\n", format_double(opt.omega).c_str());
  std::printf("gamma     = %s\n", format_double(gamma).c_str());
  std::printf("alpha     = %s\n", format_double(alpha).c_str());
  std::printf("q         = %s\n", format_double(q).c_str());
  std::printf("beta      = %s\n", format_double(beta).c_str());
  std::printf("delta     = %s\n", format_double(delta).c_str());
  std::printf("mana      = %s\n", format_double(m).c_str());
  std::printf("method    = %s\n", method_used.c_str());
  std::printf("epsilon   = %s\n", format_double(opt.eps).c_str());
  std::printf("n_terms   = %lld\n", n_terms);
  std::printf("trunc_err = %s\n", format_double(trunc_err).c_str());

  if (q > 0.1)
    std::fprintf(stderr,
                 "warning: q = %.3g exceeds 0.1; the second-order result is "
                 "outside its perturbative comfort zone\n",
                 q);
  const auto state = adsmana::mana::build_state(q, {beta, 0.0});
  const double min_eig = state.min_eigenvalue();
  if (min_eig < 0.0)
    std::fprintf(stderr,
                 "note: reconstructed density matrix has smallest eigenvalue "
                 "%.3g (O(lambda^4) perturbative artifact)\n",
                 min_eig);
  if (cap_hit) {
    std::fprintf(stderr, "error: series hit the %lld-term cap\n",
                 adsmana::series::kTermCap);
    return 3;
  }
  return 0;
}

struct SweepOptions {
  std::vector<int> d_list;
  std::vector<std::string> ell_list;
  double omega_min = 0.05, omega_max = 6.0;
  int omega_steps = 120;
  double R = 0.1, sigma = 1.0, lambda = 1.0;
  std::string method = "series";
  double eps = 0.0;
  double tol = 1e-14;
  std::string out;
};

int cmd_sweep(const SweepOptions& opt) {
  adsmana::SweepSpec spec;
  spec.d_list = opt.d_list;
  for (const auto& e : opt.ell_list) spec.ell_list.push_back(parse_ell(e));
  spec.omega_min = opt.omega_min;
  spec.omega_max = opt.omega_max;
  spec.omega_steps = opt.omega_steps;
  spec.R = opt.R;
  spec.sigma = opt.sigma;
  spec.lambda = opt.lambda;
  spec.tol = opt.tol;
  if (opt.method == "series")
    spec.method = adsmana::SweepSpec::Method::series;
  else if (opt.method == "closed")
    spec.method = adsmana::SweepSpec::Method::closed;
  else if (opt.method == "quad")
    spec.method = adsmana::SweepSpec::Method::quad;
  else
    throw UsageError("sweep: unknown method '" + opt.method + "'");
  if (opt.eps > 0.0) spec.epsilon = opt.eps;

  const auto rows = adsmana::run_sweep(spec);
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw UsageError("sweep: cannot open output file " + opt.out);
  adsmana::write_csv(out, rows);
  if (!out) throw UsageError("sweep: failed writing " + opt.out);

  long long flagged = 0;
  double q_max = 0.0;
  for (const auto& r : rows) {
    if (!r.flag.empty()) ++flagged;
    q_max = std::max(q_max, r.q);
  }
  if (flagged > 0)
    std::fprintf(stderr, "warning: %lld rows carry a non-empty flag\n",
                 flagged);
  if (q_max > 0.1)
    std::fprintf(stderr,
                 "warning: largest q in the sweep is %.3g (> 0.1); treat "
                 "those rows with perturbative caution\n",
                 q_max);
  std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(),
               opt.out.c_str());
  return 0;
}

struct PlotOptions {
  std::string in, out;
  std::string x = "omega", y = "mana", group_by = "ell";
};

int cmd_plot(const PlotOptions& opt) {
  std::ifstream in(opt.in);
  if (!in) throw UsageError("plot: cannot open input file " + opt.in);
  const auto table = adsmana::parse_csv(in);
  adsmana::PlotSpec spec;
  spec.x = opt.x;
  spec.y = opt.y;
  spec.group_by = opt.group_by;
  const std::string svg = adsmana::render_svg_line_chart(table, spec);
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw UsageError("plot: cannot open output file " + opt.out);
  out << svg;
  if (!out) throw UsageError("plot: failed writing " + opt.out);
  std::fprintf(stderr, "wrote %s\n", opt.out.c_str());
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& golden_dir) {
  std::vector<adsmana::verify::CheckResult> checks;
  if (suite == "specfn")
    checks = adsmana::verify::run_specfn(golden_dir);
  else if (suite == "identity")
    checks = adsmana::verify::run_identity();
  else if (suite == "limits")
    checks = adsmana::verify::run_limits();
  else if (suite == "figures")
    checks = adsmana::verify::run_figures();
  else if (suite == "all")
    checks = adsmana::verify::run_all(golden_dir);
  else
    throw UsageError("verify: unknown suite '" + suite + "'");
  int failures = 0;
  for (const auto& c : checks) {
    std::printf("%s %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%s: %zu checks, %d failures\n",
              failures == 0 ? "OK" : "FAILED", checks.size(), failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detector response and harvested magic for a static qutrit "
               "probe in AdS"};
  app.require_subcommand(1);

  EvalOptions ev;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one parameter point");
  eval->set_config("--config");
  eval->add_option("--d", ev.d, "spatial dimension (>= 2)");
  eval->add_option("--ell", ev.ell, "AdS radius, or 'inf' for flat space");
  eval->add_option("--R", ev.R, "detector radial position");
  eval->add_option("--sigma", ev.sigma, "Gaussian switching width");
  eval->add_option("--lambda", ev.lambda, "coupling strength");
  eval->add_option("--omega", ev.omega, "energy gap");
  eval->add_option("--method", ev.method, "series | closed | quad");
  eval->add_option("--eps", ev.eps, "regulator (series/quad)");
  eval->add_option("--tol", ev.tol, "series tolerance");

  SweepOptions sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Write a CSV parameter sweep");
  sweep->set_config("--config");
  sweep->add_option("--d", sw.d_list, "spatial dimensions")
      ->delimiter(',')
      ->required();
  sweep->add_option("--ell", sw.ell_list, "AdS radii ('inf' allowed)")
      ->delimiter(',')
      ->required();
  sweep->add_option("--omega-min", sw.omega_min, "lowest gap");
  sweep->add_option("--omega-max", sw.omega_max, "highest gap");
  sweep->add_option("--omega-steps", sw.omega_steps, "grid points");
  sweep->add_option("--R", sw.R, "detector radial position");
  sweep->add_option("--sigma", sw.sigma, "Gaussian switching width");
  sweep->add_option("--lambda", sw.lambda, "coupling strength");
  sweep->add_option("--method", sw.method, "series | closed | quad");
  sweep->add_option("--eps", sw.eps, "regulator (series/quad)");
  sweep->add_option("--tol", sw.tol, "series tolerance");
  sweep->add_option("--out", sw.out, "output CSV path")->required();

  PlotOptions pl;
  CLI::App* plot = app.add_subcommand("plot", "Render an SVG chart from a CSV");
  plot->set_config("--config");
  plot->add_option("--in", pl.in, "input CSV path")->required();
  plot->add_option("--out", pl.out, "output SVG path")->required();
  plot->add_option("--x", pl.x, "x column");
  plot->add_option("--y", pl.y, "y column");
  plot->add_option("--group-by", pl.group_by, "one polyline per value");

  std::string suite = "all";
  std::string golden_dir = ADSMANA_GOLDEN_DIR;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->set_config("--config");
  verify->add_option("--suite", suite, "specfn | identity | limits | figures | all");
  verify->add_option("--golden-dir", golden_dir, "directory with golden tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(ev);
    if (*sweep) return cmd_sweep(sw);
    if (*plot) return cmd_plot(pl);
    if (*verify) return cmd_verify(suite, golden_dir);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
