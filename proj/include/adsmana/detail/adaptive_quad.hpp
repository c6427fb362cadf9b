#ifndef ADSMANA_DETAIL_ADAPTIVE_QUAD_HPP
#define ADSMANA_DETAIL_ADAPTIVE_QUAD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <vector>

// Adaptive bisection quadrature with a nested Gauss(7)/Kronrod(15) rule per
// panel. Works for real- and complex-valued integrands; the per-panel error
// is the magnitude of the difference between the embedded rules.

namespace adsmana {
namespace detail {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed abscissae.
inline constexpr double kGk15Nodes[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr double kGk15WeightsK[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr double kGk15WeightsG[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

template <typename Value>
struct PanelEstimate {
  Value integral{};
  double error = 0.0;
};

template <typename F>
auto gk15_panel(F&& f, double a, double b)
    -> PanelEstimate<decltype(f(0.0))> {
  using Value = decltype(f(0.0));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Value sk = kGk15WeightsK[7] * f(mid);
  Value sg = kGk15WeightsG[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGk15Nodes[i];
    const Value pair = f(mid - dx) + f(mid + dx);
    sk += kGk15WeightsK[i] * pair;
    if (i % 2 == 1) sg += kGk15WeightsG[i / 2] * pair;
  }
  PanelEstimate<Value> out;
  out.integral = half * sk;
  out.error = std::abs(half * (sk - sg));
  return out;
}

template <typename Value>
struct AdaptiveResult {
  Value integral{};
  double abs_error = 0.0;
  int panels = 0;
  bool converged = false;
};

// Integrates f over the panels defined by `edges` (sorted, at least two
// entries), repeatedly bisecting the worst panel until the summed error
// estimate drops below max(abs_tol, rel_tol * |integral|) or the panel cap
// is reached.
template <typename F>
auto adaptive_gk15(F&& f, std::vector<double> edges, double rel_tol,
                   double abs_tol, int max_panels)
    -> AdaptiveResult<decltype(f(0.0))> {
  using Value = decltype(f(0.0));
  struct Panel {
    double a, b, error;
    Value integral;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  std::priority_queue<Panel> queue;
  Value total{};
  double total_err = 0.0;
  int n_panels = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto est = gk15_panel(f, edges[i], edges[i + 1]);
    queue.push(Panel{edges[i], edges[i + 1], est.error, est.integral});
    total += est.integral;
    total_err += est.error;
    ++n_panels;
  }
  AdaptiveResult<Value> out;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         n_panels < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.integral;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (auto [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      auto est = gk15_panel(f, lo, hi);
      queue.push(Panel{lo, hi, est.error, est.integral});
      total += est.integral;
      total_err += est.error;
    }
    ++n_panels;
  }
  out.integral = total;
  out.abs_error = total_err;
  out.panels = n_panels;
  out.converged =
      total_err <= std::max(abs_tol, rel_tol * std::abs(total));
  return out;
}

inline std::vector<double> uniform_edges(double a, double b, int n) {
  std::vector<double> e(n + 1);
  for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * i / n;
  return e;
}

}  // namespace detail
}  // namespace adsmana

#endif
