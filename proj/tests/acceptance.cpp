// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Comparisons against the published table run at n = 300:
// its epsilon column is reproduced digit-for-digit by the n = 359 trace and
// its Q column by n ~ 300, so the table's node count is pinned there.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "avgk/error_model.hpp"
#include "avgk/exact_ref.hpp"
#include "avgk/kernels.hpp"
#include "avgk/laguerre.hpp"
#include "avgk/report.hpp"
#include "avgk/smoluchowski.hpp"
#include "oracles.hpp"

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct KernelRow {
  avgk::KernelId id;
  const char* name;
  double table_eps, table_C, table_Q, table_DC, exact;
};

const std::vector<KernelRow> kRows = {
    {avgk::KernelId::CR, "cr", 2.5865e-5, -1.6572, 4.4025, 2.2092, 4.41839915},
    {avgk::KernelId::SC, "sc", 9.3561e-7, -2.3733, 6.8371, 3.4184, 6.83679830},
    {avgk::KernelId::FM, "fm", 1.2344e-4, -1.5209, 6.9032, 3.4991, 6.99822397},
    {avgk::KernelId::SD, "sd", 7.4036e-6, -1.9750, 2.5861, 1.2947, 2.58940496},
};

constexpr int kTableN = 300;

}  // namespace

int main() {
  using namespace avgk;

  // shared traces to n = 301 (epsilon defined through n = 300)
  std::vector<ConvergenceTrace> traces;
  for (const KernelRow& row : kRows)
    traces.push_back(build_trace(builtin(row.id), 2, kTableN + 1, kMaxNodeCap));

  // 1. closed-form oracle values
  {
    bool ok = true;
    std::string detail;
    for (const KernelRow& row : kRows) {
      const double v = exact_II(row.id).II;
      if (std::abs(v - row.exact) >= 1e-7) ok = false;
      detail += std::string(row.name) + "=" + fmt(v) + " ";
    }
    report(1, "exact_II matches the four nine-digit values within 1e-7", ok, detail);
  }

  // 2. ten-point rule nodes and weights
  {
    const double nodes[] = {0.1377, 0.7294, 1.8083, 3.4014, 5.5524,
                            8.3301, 11.8437, 16.2792, 21.9965, 29.9206};
    const double weights[] = {0.3084, 0.4011, 0.2180, 0.0620, 0.0095,
                              0.0007, 2.8e-5, 4.2e-7, 1.8e-9, 9.9e-13};
    const QuadratureRule r = gauss_laguerre_rule(10);
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
      if (std::abs(r.nodes[i] - nodes[i]) >= 1e-4) ok = false;
      if (weights[i] >= 1e-4) {
        if (std::abs(r.weights[i] - weights[i]) >= 1e-4) ok = false;
      } else {
        if (std::abs(r.weights[i] - weights[i]) >= 0.05 * weights[i]) ok = false;
      }
    }
    report(2, "10-point rule reproduces all 20 tabulated values", ok);
  }

  // 3. tabulated Q column
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < kRows.size(); ++i) {
      double q = 0.0;
      for (const auto& [n, v] : traces[i].entries)
        if (n == kTableN) q = v;
      if (std::abs(q - kRows[i].table_Q) >= 5e-4) ok = false;
      detail += std::string(kRows[i].name) + "=" + fmt(q) + " ";
    }
    report(3, "Q at n=" + std::to_string(kTableN) + " within 5e-4 of the tabulated column",
           ok, detail);
  }

  // 4. tabulated epsilon column
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < kRows.size(); ++i) {
      const auto& [n, eps] = traces[i].epsilons.back();
      const double ratio = eps / kRows[i].table_eps;
      if (!(ratio > 1.0 / 3.0 && ratio < 3.0)) ok = false;
      detail += std::string(kRows[i].name) + "=" + fmt(eps) + " ";
    }
    report(4, "epsilon at n=" + std::to_string(kTableN) + " within a factor of 3 of the table",
           ok, detail);
  }

  // 5. prefactor consistency
  {
    bool ok = true;
    for (std::size_t i = 0; i < kRows.size(); ++i) {
      const QuadratureRule rule = gauss_laguerre_rule(kTableN, kMaxNodeCap);
      const double Q = integrate_2d(rule, builtin(kRows[i].id).beta);
      if (prefactor(rule, builtin(kRows[i].id)) != Q / 2.0) ok = false;  // exact
      if (std::abs(exact_II(kRows[i].id).II / 2.0 - kRows[i].table_DC) >= 5e-4) ok = false;
    }
    report(5, "p_GL = Q/2 exactly and p_DC matches the tabulated DC column within 5e-4", ok);
  }

  // 6. slope fits
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < kRows.size(); ++i) {
      const double C = fit_slope(traces[i], 151, FitMethod::TwoPoint);
      if (!(C < -1.0)) ok = false;
      if (std::abs(C - kRows[i].table_C) >= 0.3) ok = false;
      detail += std::string(kRows[i].name) + "=" + fmt(C) + " ";
    }
    // exact recovery on a synthetic power law
    ConvergenceTrace synth;
    synth.kernel_id = "synthetic";
    for (int n = 2; n <= 60; ++n) synth.entries.emplace_back(n, 1.0);
    for (int n = 2; n < 60; ++n)
      synth.epsilons.emplace_back(n, std::pow(double(n), -1.75));
    if (std::abs(fit_slope(synth, 20, FitMethod::TwoPoint) + 1.75) >= 1e-9) ok = false;
    if (std::abs(fit_slope(synth, 20, FitMethod::LeastSquares) + 1.75) >= 1e-9) ok = false;
    report(6, "fitted C < -1, two-point tails within 0.3 of the table, exact on synthetic",
           ok, detail);
  }

  // 7. polynomial exactness
  {
    bool ok = true;
    for (int n : {2, 5, 10, 20, 40}) {
      const QuadratureRule r = gauss_laguerre_rule(n);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double q = 0.0;
        for (int i = 0; i < n; ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
        double factorial = 1.0;
        for (int j = 2; j <= k; ++j) factorial *= j;
        if (std::abs(q / factorial - 1.0) >= 1e-10) ok = false;
      }
    }
    report(7, "monomials up to degree 2n-1 integrate to k! within 1e-10 relative", ok);
  }

  // 8. trivial-kernel identities
  {
    const QuadratureRule r = gauss_laguerre_rule(5);
    const bool ok = std::abs(prefactor(r, builtin(KernelId::Const)) - 0.5) < 1e-11 &&
                    std::abs(prefactor(r, builtin(KernelId::Add)) - 1.0) < 1e-11 &&
                    std::abs(prefactor(r, builtin(KernelId::Mul)) - 0.5) < 1e-11;
    report(8, "constant/additive/multiplicative prefactors are 1/2, 1, 1/2", ok);
  }

  // 9. population-average equivalence
  {
    const QuadratureRule rule = gauss_laguerre_rule(20);
    bool ok = true;
    for (KernelId id : {KernelId::CR, KernelId::SC, KernelId::FM, KernelId::SD,
                        KernelId::Const, KernelId::Add, KernelId::Mul}) {
      const Kernel kernel = builtin(id);
      for (double u : {0.5, 1.0, 2.0}) {
        const MomentState state{1.0 / u, 1.0};
        const double pop = population_average(kernel, state, rule);
        const double direct = 2.0 * prefactor(rule, kernel) * std::pow(u, kernel.q());
        if (pop != direct) ok = false;  // bit-identical through the same rule
      }
    }
    report(9, "population average equals 2*prefactor*u^q bit-identically", ok);
  }

  // 10. moment-evolution properties
  {
    bool ok = true;
    struct Case { double p; int qn, qd; };
    for (const Case& c : {Case{2.2, 0, 1}, Case{3.45, 1, 6}, Case{3.42, 1, 1},
                          Case{0.1, 4, 3}}) {
      const AverageKernel ak{c.p, c.qn, c.qd};
      const MomentState init{1.0, 1.0};
      for (double t = 0.5; t <= 10.0; t += 0.5) {
        const double closed = evolve_M0(ak, init, t).M0;
        const double rk4 = oracles::rk4_M0(c.p, ak.q(), init.M0, init.M1, t);
        if (std::abs(closed / rk4 - 1.0) >= 1e-7) ok = false;
      }
      const MomentState split = evolve_M0(ak, evolve_M0(ak, init, 1.9), 3.3);
      const MomentState whole = evolve_M0(ak, init, 5.2);
      if (std::abs(split.M0 / whole.M0 - 1.0) >= 1e-12) ok = false;
      if (split.M1 != init.M1) ok = false;
    }
    report(10, "closed-form M0 matches RK4 within 1e-7; semigroup and M1 conservation hold",
           ok);
  }

  // 11. sedimentation substitution chain
  {
    const double xy = oracles::sd_integral_xy();
    const double theta = oracles::sd_integral_theta();
    const double t = oracles::sd_integral_t();
    const double exact = exact_II(KernelId::SD).II;
    const bool ok = std::abs(xy - theta) < 1e-6 && std::abs(theta - t) < 1e-6 &&
                    std::abs(xy - t) < 1e-6 && std::abs(t - exact) < 1e-7;
    report(11, "the three sedimentation integral forms agree pairwise and with exact_II",
           ok, "xy=" + fmt(xy) + " theta=" + fmt(theta) + " t=" + fmt(t));
  }

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
