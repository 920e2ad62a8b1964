#ifndef AVGK_ERROR_MODEL_HPP
#define AVGK_ERROR_MODEL_HPP

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avgk/kernels.hpp"

namespace avgk {

/// Double-quadrature values Q_{n,n} over a range of node counts together
/// with the successive differences eps_{n,n} = |Q_{n+1,n+1} - Q_{n,n}|,
/// the empirical error proxy driving the remainder extrapolation.
struct ConvergenceTrace {
  std::string kernel_id;
  std::vector<std::pair<int, double>> entries;   // (n, Q_{n,n}), unit step in n
  std::vector<std::pair<int, double>> epsilons;  // (n, eps_{n,n})
};

enum class FitMethod { TwoPoint, LeastSquares };

inline FitMethod fit_method_from_string(const std::string& s) {
  if (s == "two-point" || s == "two_point" || s == "tp") return FitMethod::TwoPoint;
  if (s == "lsq" || s == "least-squares" || s == "least_squares")
    return FitMethod::LeastSquares;
  throw std::invalid_argument("unknown fit method '" + s +
                              "' (expected two-point or lsq)");
}

/// Power-law tail extrapolation of the truncation error: fitted log-log
/// slope C, the anchoring (eps, n) pair, and the remainder magnitude R.
/// R is reported as a magnitude; intervals are Q +- R.
struct RemainderEstimate {
  double C = 0.0;
  double epsilon_n = 0.0;
  int n = 0;
  double R = 0.0;
  bool valid = false;
};

template <class F>
ConvergenceTrace build_trace(std::string kernel_id, F&& beta, int n_min, int n_max,
                             int cap = kDefaultNodeCap) {
  if (n_min < 1 || n_min >= n_max)
    throw std::invalid_argument("build_trace: need 1 <= n_min < n_max");
  if (n_max > cap)
    throw std::invalid_argument("build_trace: n_max = " + std::to_string(n_max) +
                                " exceeds the stability cap " + std::to_string(cap));
  ConvergenceTrace trace;
  trace.kernel_id = std::move(kernel_id);
  trace.entries.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    const QuadratureRule rule = gauss_laguerre_rule(n, cap);
    trace.entries.emplace_back(n, integrate_2d(rule, beta));
  }
  trace.epsilons.reserve(trace.entries.size() - 1);
  for (std::size_t i = 0; i + 1 < trace.entries.size(); ++i) {
    trace.epsilons.emplace_back(
        trace.entries[i].first,
        std::abs(trace.entries[i + 1].second - trace.entries[i].second));
  }
  return trace;
}

inline ConvergenceTrace build_trace(const Kernel& kernel, int n_min, int n_max,
                                    int cap = kDefaultNodeCap) {
  return build_trace(kernel.name, kernel.beta, n_min, n_max, cap);
}

namespace detail {

// Epsilon entries usable for fitting: strictly positive and above the
// round-off floor 100 * eps_machine * |Q| (the power-law model only holds
// while truncation error dominates).
inline std::vector<std::pair<int, double>> usable_epsilons(
    const ConvergenceTrace& trace) {
  std::vector<std::pair<int, double>> out;
  for (std::size_t i = 0; i < trace.epsilons.size(); ++i) {
    const double eps = trace.epsilons[i].second;
    const double floor =
        100.0 * std::numeric_limits<double>::epsilon() * std::abs(trace.entries[i].second);
    if (eps > 0.0 && eps >= floor) out.push_back(trace.epsilons[i]);
  }
  return out;
}

}  // namespace detail

/// Fits the log-log slope C of eps against n over the trailing `window`
/// usable epsilon entries. TwoPoint uses the first and last entries of the
/// window; LeastSquares fits ln(eps) against ln(n) by ordinary least squares.
inline double fit_slope(const ConvergenceTrace& trace, int window, FitMethod method) {
  if (window < 2) throw std::invalid_argument("fit_slope: window must be >= 2");
  const auto usable = detail::usable_epsilons(trace);
  if (static_cast<int>(usable.size()) < window)
    throw std::invalid_argument(
        "fit_slope: window of " + std::to_string(window) +
        " exceeds the " + std::to_string(usable.size()) +
        " usable (positive, non-round-off) epsilon entries");
  const std::size_t start = usable.size() - window;
  if (method == FitMethod::TwoPoint) {
    const auto& [n0, e0] = usable[start];
    const auto& [n1, e1] = usable.back();
    return (std::log(e1) - std::log(e0)) / (std::log(double(n1)) - std::log(double(n0)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = start; i < usable.size(); ++i) {
    const double x = std::log(static_cast<double>(usable[i].first));
    const double y = std::log(usable[i].second);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double m = static_cast<double>(window);
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/// Extrapolates the truncation remainder by integrating the fitted power-law
/// tail: R = eps_{n,n} * ((n+1)/n)^C * (n+1)/|C+1|, valid only for C < -1.
inline RemainderEstimate extrapolate_remainder(double epsilon_n, int n, double C) {
  if (n < 1) throw std::invalid_argument("extrapolate_remainder: n must be >= 1");
  RemainderEstimate est;
  est.C = C;
  est.epsilon_n = epsilon_n;
  est.n = n;
  if (C < -1.0) {
    est.R = epsilon_n * std::pow((n + 1.0) / n, C) * (n + 1.0) / std::abs(C + 1.0);
    est.valid = true;
  }
  return est;
}

/// Convenience: fit C on the trace and extrapolate from its last epsilon.
inline RemainderEstimate estimate_remainder(const ConvergenceTrace& trace, int window,
                                            FitMethod method) {
  if (trace.epsilons.empty())
    throw std::invalid_argument("estimate_remainder: trace has no epsilon entries");
  const double C = fit_slope(trace, window, method);
  const auto& [n, eps] = trace.epsilons.back();
  return extrapolate_remainder(eps, n, C);
}

/// CSV columns n,Q,epsilon; the last row has no epsilon (there is one fewer
/// successive difference than trace entries). Full-precision decimals.
inline void write_trace_csv(const ConvergenceTrace& trace, std::ostream& os) {
  os << "n,Q,epsilon\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    os << trace.entries[i].first << ',';
    std::snprintf(buf, sizeof buf, "%.17g", trace.entries[i].second);
    os << buf << ',';
    if (i < trace.epsilons.size()) {
      std::snprintf(buf, sizeof buf, "%.17g", trace.epsilons[i].second);
      os << buf;
    }
    os << '\n';
  }
}

inline ConvergenceTrace read_trace_csv(std::istream& is, std::string kernel_id = "") {
  ConvergenceTrace trace;
  trace.kernel_id = std::move(kernel_id);
  std::string line;
  if (!std::getline(is, line) || line.rfind("n,Q,epsilon", 0) != 0)
    throw std::runtime_error("read_trace_csv: missing 'n,Q,epsilon' header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    if (!std::getline(ss, field, ',')) break;
    const int n = std::stoi(field);
    if (!std::getline(ss, field, ','))
      throw std::runtime_error("read_trace_csv: missing Q in row n=" + std::to_string(n));
    trace.entries.emplace_back(n, std::stod(field));
    if (std::getline(ss, field, ',') && !field.empty())
      trace.epsilons.emplace_back(n, std::stod(field));
  }
  return trace;
}

}  // namespace avgk

#endif  // AVGK_ERROR_MODEL_HPP
