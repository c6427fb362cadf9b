#include "adsmana/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

#include "adsmana/mana.hpp"
#include "adsmana/oracle.hpp"
#include "adsmana/closedform.hpp"
#include "adsmana/series.hpp"

namespace adsmana {

namespace {

const char* method_label(series::Method m) {
  switch (m) {
    case series::Method::series: return "series";
    case series::Method::series_with_regulator: return "series_with_regulator";
    case series::Method::minkowski_closed: return "minkowski_closed";
  }
  return "series";
}

SweepRow evaluate_row(const SweepSpec& spec, int d, double ell, double omega) {
  SweepRow row;
  row.d = d;
  row.ell = ell;
  row.R = spec.R;
  row.sigma = spec.sigma;
  row.lambda = spec.lambda;
  row.omega = omega;
  row.epsilon = spec.epsilon.value_or(0.0);

  background::DetectorSetup setup{d, ell, spec.R, spec.sigma, spec.lambda,
                                  omega};
  try {
    if (setup.is_minkowski()) {
      row.gamma = background::kMinkowskiRadius;
      row.q = series::minkowski_q(d, spec.sigma, spec.lambda, omega);
      row.beta = series::minkowski_beta(d, spec.sigma, spec.lambda, omega);
      row.method = method_label(series::Method::minkowski_closed);
      row.n_terms = 1;
    } else {
      row.gamma = std::hypot(ell, spec.R);
      switch (spec.method) {
        case SweepSpec::Method::series: {
          series::SeriesResult q, b;
          if (spec.epsilon) {
            q = series::q_series_with_regulator(setup, *spec.epsilon, spec.tol);
            b = series::beta_series_renormalized_regulated(setup, *spec.epsilon,
                                                           spec.tol);
          } else {
            q = series::q_series(setup, spec.tol);
            b = series::beta_series_renormalized(setup, spec.tol);
          }
          row.q = q.value;
          row.beta = b.value;
          row.method = method_label(q.method);
          row.n_terms = std::max(q.terms_used, b.terms_used);
          row.trunc_err = std::max(q.tail_bound, b.tail_bound);
          if (q.term_cap_hit || b.term_cap_hit) row.flag = "term_cap";
          break;
        }
        case SweepSpec::Method::closed: {
          row.q = closedform::q_closed(setup).value;
          row.beta = closedform::beta_closed(setup).value;
          row.method = "closed";
          row.n_terms = d - 1;
          break;
        }
        case SweepSpec::Method::quad: {
          const double eps = *spec.epsilon;
          const auto q = oracle::quad_q(setup, eps);
          const auto b = oracle::quad_beta(setup, eps);
          row.q = q.value;
          row.beta = b.value;
          row.method = "quad";
          row.n_terms = q.subdivisions + b.subdivisions;
          row.trunc_err =
              std::max(q.abs_error_estimate, b.abs_error_estimate);
          break;
        }
      }
    }
    row.delta = -(row.q + 2.0 * row.beta);
    row.mana = mana::mana(row.q, {row.beta, 0.0});
  } catch (const std::exception&) {
    row.q = row.beta = row.delta = row.mana = 0.0;
    row.flag = "no_converge";
  }
  return row;
}

}  // namespace

void SweepSpec::validate() const {
  if (!(omega_min > 0.0)) throw UsageError("sweep: omega_min must be > 0");
  if (!(omega_max > omega_min))
    throw UsageError("sweep: omega_max must exceed omega_min");
  if (omega_steps < 2) throw UsageError("sweep: omega_steps must be >= 2");
  if (d_list.empty()) throw UsageError("sweep: d list must not be empty");
  if (ell_list.empty()) throw UsageError("sweep: ell list must not be empty");
  for (int d : d_list)
    if (d < 2) throw UsageError("sweep: every d must be >= 2");
  for (double ell : ell_list)
    if (!(ell > 0.0)) throw UsageError("sweep: every ell must be > 0");
  if (!(R >= 0.0)) throw UsageError("sweep: R must be >= 0");
  if (!(sigma > 0.0)) throw UsageError("sweep: sigma must be > 0");
  if (method == Method::quad && !epsilon)
    throw UsageError("sweep: method 'quad' requires an epsilon");
  if (epsilon && !(*epsilon > 0.0))
    throw UsageError("sweep: epsilon must be > 0");
  if (!(tol > 0.0)) throw UsageError("sweep: tol must be > 0");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<int> ds = spec.d_list;
  std::vector<double> ells = spec.ell_list;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());

  struct Task {
    int d;
    double ell, omega;
  };
  std::vector<Task> tasks;
  for (int d : ds)
    for (double ell : ells)
      for (int i = 0; i < spec.omega_steps; ++i) {
        const double omega =
            spec.omega_min + (spec.omega_max - spec.omega_min) * i /
                                 (spec.omega_steps - 1);
        tasks.push_back({d, ell, omega});
      }

  std::vector<SweepRow> rows(tasks.size());
  const unsigned n_threads =
      std::min<unsigned>(std::thread::hardware_concurrency(), 8u);
  if (n_threads <= 1 || tasks.size() < 32) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      rows[i] = evaluate_row(spec, tasks[i].d, tasks[i].ell, tasks[i].omega);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        rows[i] = evaluate_row(spec, tasks[i].d, tasks[i].ell, tasks[i].omega);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.d << ',' << format_double(r.ell) << ',' << format_double(r.R)
       << ',' << format_double(r.sigma) << ',' << format_double(r.lambda)
       << ',' << format_double(r.omega) << ',' << format_double(r.gamma)
       << ',' << format_double(r.q) << ',' << format_double(r.beta) << ','
       << format_double(r.delta) << ',' << format_double(r.mana) << ','
       << r.method << ',' << format_double(r.epsilon) << ',' << r.n_terms
       << ',' << format_double(r.trunc_err) << ',' << r.flag << '\n';
  }
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable parse_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = s.find(',', start);
      if (pos == std::string::npos) {
        out.push_back(s.substr(start));
        break;
      }
      out.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
    return out;
  };
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      table.header = split(line);
      first = false;
    } else {
      auto cells = split(line);
      if (cells.size() != table.header.size())
        throw UsageError("csv: row width does not match the header");
      table.cells.push_back(std::move(cells));
    }
  }
  return table;
}

std::vector<SweepRow> rows_from_csv(const CsvTable& table) {
  std::string want = kCsvHeader;
  std::string have;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) have += ',';
    have += table.header[i];
  }
  if (have != want) throw UsageError("csv: unexpected header: " + have);
  auto num = [](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
      throw UsageError("csv: bad numeric field '" + s + "'");
    return v;
  };
  std::vector<SweepRow> rows;
  rows.reserve(table.cells.size());
  for (const auto& c : table.cells) {
    SweepRow r;
    r.d = static_cast<int>(num(c[0]));
    r.ell = num(c[1]);
    r.R = num(c[2]);
    r.sigma = num(c[3]);
    r.lambda = num(c[4]);
    r.omega = num(c[5]);
    r.gamma = num(c[6]);
    r.q = num(c[7]);
    r.beta = num(c[8]);
    r.delta = num(c[9]);
    r.mana = num(c[10]);
    r.method = c[11];
    r.epsilon = num(c[12]);
    r.n_terms = static_cast<long long>(num(c[13]));
    r.trunc_err = num(c[14]);
    r.flag = c[15];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace adsmana
