#ifndef AVGK_REPORT_HPP
#define AVGK_REPORT_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "avgk/error_model.hpp"
#include "avgk/exact_ref.hpp"
#include "avgk/kernels.hpp"

namespace avgk {

/// One comparison row: Gauss-Laguerre value with its extrapolated remainder
/// interval against the closed-form reference, plus the two pre-exponential
/// factors p_GL = Q/2 and p_DC = exact_II/2.
struct ReportRow {
  std::string kernel_id;
  double epsilon_nn = 0.0;
  double C = 0.0;
  double Q = 0.0;
  double R = 0.0;
  double II_interval_lo = 0.0;
  double II_interval_hi = 0.0;
  double exact = 0.0;
  double p_GL = 0.0;
  double p_DC = 0.0;
  std::string q;
};

struct ReportOptions {
  int n = 99;                  // node count of the reported rule
  int n_min = 2;               // trace start
  int window = 10;             // slope-fit window (usable epsilon entries)
  FitMethod fit = FitMethod::LeastSquares;
  int cap = kDefaultNodeCap;
};

inline ReportRow build_report_row(KernelId id, const ReportOptions& opt) {
  const Kernel kernel = builtin(id);
  const ConvergenceTrace trace = build_trace(kernel, opt.n_min, opt.n, opt.cap);
  const RemainderEstimate est = estimate_remainder(trace, opt.window, opt.fit);

  ReportRow row;
  row.kernel_id = kernel.name;
  row.Q = trace.entries.back().second;
  row.epsilon_nn = trace.epsilons.back().second;
  row.C = est.C;
  row.R = est.valid ? est.R : 0.0;
  row.II_interval_lo = row.Q - row.R;
  row.II_interval_hi = row.Q + row.R;
  row.exact = exact_II(id).II;
  row.p_GL = row.Q / 2.0;
  row.p_DC = row.exact / 2.0;
  row.q = q_string(kernel.q_num, kernel.q_den);
  return row;
}

inline std::vector<ReportRow> build_report(const ReportOptions& opt) {
  std::vector<ReportRow> rows;
  for (KernelId id : reference_kernels()) rows.push_back(build_report_row(id, opt));
  return rows;
}

namespace detail {

inline std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace detail

inline void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& os) {
  os << "kernel_id,epsilon_nn,C,Q,R,II_interval_lo,II_interval_hi,exact_II,p_GL,p_DC,q\n";
  for (const auto& r : rows) {
    os << r.kernel_id << ',' << detail::fmt_full(r.epsilon_nn) << ','
       << detail::fmt_full(r.C) << ',' << detail::fmt_full(r.Q) << ','
       << detail::fmt_full(r.R) << ',' << detail::fmt_full(r.II_interval_lo) << ','
       << detail::fmt_full(r.II_interval_hi) << ',' << detail::fmt_full(r.exact)
       << ',' << detail::fmt_full(r.p_GL) << ',' << detail::fmt_full(r.p_DC) << ','
       << r.q << '\n';
  }
}

inline void write_report_json(const std::vector<ReportRow>& rows, std::ostream& os) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"kernel_id\": \"" << r.kernel_id << "\""
       << ", \"epsilon_nn\": " << detail::fmt_full(r.epsilon_nn)
       << ", \"C\": " << detail::fmt_full(r.C)
       << ", \"Q\": " << detail::fmt_full(r.Q)
       << ", \"R\": " << detail::fmt_full(r.R)
       << ", \"II_interval_lo\": " << detail::fmt_full(r.II_interval_lo)
       << ", \"II_interval_hi\": " << detail::fmt_full(r.II_interval_hi)
       << ", \"exact_II\": " << detail::fmt_full(r.exact)
       << ", \"p_GL\": " << detail::fmt_full(r.p_GL)
       << ", \"p_DC\": " << detail::fmt_full(r.p_DC)
       << ", \"q\": \"" << r.q << "\"}" << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

/// Markdown table with 4-decimal formatting, matching the presentation of
/// the numeric tables this report mirrors.
inline void write_report_markdown(const std::vector<ReportRow>& rows, std::ostream& os) {
  os << "| kernel | eps_nn | C | Q | R | II interval | exact II | p_GL | p_DC | q |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    char eps[32];
    std::snprintf(eps, sizeof eps, "%.4E", r.epsilon_nn);
    os << "| " << r.kernel_id << " | " << eps << " | " << detail::fmt4(r.C) << " | "
       << detail::fmt4(r.Q) << " | " << detail::fmt4(r.R) << " | "
       << detail::fmt4(r.Q) << " +- " << detail::fmt4(r.R) << " | "
       << detail::fmt4(r.exact) << " | " << detail::fmt4(r.p_GL) << " | "
       << detail::fmt4(r.p_DC) << " | " << r.q << " |\n";
  }
}

}  // namespace avgk

#endif  // AVGK_REPORT_HPP
