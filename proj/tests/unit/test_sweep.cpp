#include "adsmana/sweep.hpp"

#include <cmath>
#include <sstream>

#include "adsmana/plot.hpp"
#include "adsmana/series.hpp"
#include "doctest.h"

using namespace adsmana;

namespace {
SweepSpec small_spec() {
  SweepSpec spec;
  spec.d_list = {3};
  spec.ell_list = {1.0};
  spec.omega_min = 0.5;
  spec.omega_max = 1.5;
  spec.omega_steps = 5;
  return spec;
}
}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0, -3.5e-300, 2.0 / 3.0, 1e308, 0.0,
                   6.329030427825057e-3}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec = small_spec();
  spec.d_list.clear();
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec = small_spec();
  spec.omega_min = 0.0;
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec = small_spec();
  spec.omega_steps = 1;
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec = small_spec();
  spec.d_list = {1};
  CHECK_THROWS_AS(spec.validate(), UsageError);
  spec = small_spec();
  spec.method = SweepSpec::Method::quad;
  CHECK_THROWS_AS(spec.validate(), UsageError);  // quad needs epsilon
  spec.epsilon = 1e-2;
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("sweep rows are ordered and consistent with the series") {
  SweepSpec spec = small_spec();
  spec.d_list = {4, 3};
  spec.ell_list = {5.0, 1.0};
  const auto rows = run_sweep(spec);
  CHECK(rows.size() == 2 * 2 * 5);
  // lexicographic (d, ell, omega)
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    const bool ordered = a.d < b.d || (a.d == b.d && a.ell < b.ell) ||
                         (a.d == b.d && a.ell == b.ell && a.omega < b.omega);
    CHECK(ordered);
  }
  // spot-check one row against the series directly
  const auto& r = rows.front();
  background::DetectorSetup s{r.d, r.ell, r.R, r.sigma, r.lambda, r.omega};
  CHECK(r.q == series::q_series(s).value);
  CHECK(r.beta == series::beta_series_renormalized(s).value);
  CHECK(r.delta == -(r.q + 2.0 * r.beta));
  CHECK(r.method == "series");
  CHECK(r.flag.empty());
}

TEST_CASE("minkowski rows use the closed flat-space forms") {
  SweepSpec spec = small_spec();
  spec.ell_list = {background::kMinkowskiRadius};
  const auto rows = run_sweep(spec);
  for (const auto& r : rows) {
    CHECK(std::isinf(r.ell));
    CHECK(r.method == "minkowski_closed");
    CHECK(r.q ==
          series::minkowski_q(r.d, r.sigma, r.lambda, r.omega));
  }
}

TEST_CASE("csv writes deterministically and round-trips") {
  SweepSpec spec = small_spec();
  spec.ell_list = {1.0, background::kMinkowskiRadius};
  const auto rows = run_sweep(spec);

  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, run_sweep(spec));
  CHECK(a.str() == b.str());  // byte-identical on identical input

  std::istringstream in(a.str());
  const auto table = parse_csv(in);
  CHECK(table.header.size() == 16);
  const auto parsed = rows_from_csv(table);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(parsed[i] == rows[i]);
}

TEST_CASE("csv rejects malformed input") {
  std::istringstream bad_header("a,b,c\n1,2,3\n");
  const auto table = parse_csv(bad_header);
  CHECK_THROWS_AS(rows_from_csv(table), UsageError);

  std::istringstream ragged(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(ragged), UsageError);
}

TEST_CASE("svg renderer") {
  SweepSpec spec = small_spec();
  spec.d_list = {3};
  spec.ell_list = {0.5, 1.0, 2.0, 5.0};
  const auto rows = run_sweep(spec);
  std::ostringstream csv;
  write_csv(csv, rows);
  std::istringstream in(csv.str());
  const auto table = parse_csv(in);

  const std::string svg = render_svg_line_chart(table, PlotSpec{});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // one polyline per ell group
  std::size_t count = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 4);
  CHECK(svg.find("ell=1") != std::string::npos);
  CHECK(svg.find("omega") != std::string::npos);

  // deterministic
  CHECK(svg == render_svg_line_chart(table, PlotSpec{}));

  // degenerate and missing-column errors
  PlotSpec badcol;
  badcol.y = "nope";
  CHECK_THROWS_AS(render_svg_line_chart(table, badcol), UsageError);
  CsvTable single;
  single.header = table.header;
  single.cells = {table.cells.front()};
  CHECK_THROWS_AS(render_svg_line_chart(single, PlotSpec{}), UsageError);
}
