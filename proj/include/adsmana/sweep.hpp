#ifndef ADSMANA_SWEEP_HPP
#define ADSMANA_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Parameter sweeps over (d, ell, Omega) grids and their CSV form. Output is
// deterministic: rows are ordered lexicographically by (d, ell, Omega) and
// numbers are printed in 17-significant-digit shortest round-trip form, so
// identical inputs give byte-identical files.

namespace adsmana {

// Bad user input (CLI exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  double omega_min = 0.05;
  double omega_max = 6.0;
  int omega_steps = 120;               // number of grid points, >= 2
  std::vector<double> ell_list;        // +inf = Minkowski
  std::vector<int> d_list;
  double R = 0.1;
  double sigma = 1.0;
  double lambda = 1.0;
  enum class Method { series, closed, quad } method = Method::series;
  std::optional<double> epsilon;       // regulator for series/quad
  double tol = 1e-14;

  void validate() const;  // throws UsageError
};

struct SweepRow {
  int d = 0;
  double ell = 0, R = 0, sigma = 0, lambda = 0, omega = 0, gamma = 0;
  double q = 0, beta = 0, delta = 0, mana = 0;
  std::string method;
  double epsilon = 0;
  long long n_terms = 0;
  double trunc_err = 0;
  std::string flag;  // "", "term_cap", or "no_converge"

  bool operator==(const SweepRow&) const = default;
};

inline constexpr char kCsvHeader[] =
    "d,ell,R,sigma,lambda,omega,gamma,q,beta,delta,mana,method,epsilon,"
    "n_terms,trunc_err,flag";

// Grid evaluation; rows may be computed concurrently but are returned (and
// written) in deterministic order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Shortest 17-significant-digit decimal that round-trips the double.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
  int column(const std::string& name) const;  // -1 when absent
};

CsvTable parse_csv(std::istream& is);

// Strict inverse of write_csv (exact header, numeric round-trip).
std::vector<SweepRow> rows_from_csv(const CsvTable& table);

}  // namespace adsmana

#endif
