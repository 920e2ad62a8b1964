#ifndef AVGK_LAGUERRE_HPP
#define AVGK_LAGUERRE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace avgk {

/// Default node-count cap. Rules remain well behaved in double precision up
/// to kMaxNodeCap, but above ~180 the smallest weights begin to flush to
/// zero (they multiply bounded integrand values, so leading digits of the
/// quadrature sum are unaffected).
inline constexpr int kDefaultNodeCap = 180;
inline constexpr int kMaxNodeCap = 360;

struct LaguerrePair {
  double Ln;         // L_n(x)
  double Ln_plus_1;  // L_{n+1}(x)
};

namespace detail {

/// Three-term recurrence with periodic power-of-two rescaling.
/// Returns mantissas; the true values are {Ln, Ln_plus_1} * 2^exp2.
inline LaguerrePair laguerre_eval_scaled(int n, double x, int& exp2) {
  if (n < 0) throw std::invalid_argument("laguerre_eval: n must be >= 0");
  if (x < 0.0) throw std::invalid_argument("laguerre_eval: x must be >= 0");
  exp2 = 0;
  double lkm1 = 1.0;       // L_0
  double lk = 1.0 - x;     // L_1
  for (int k = 1; k <= n; ++k) {
    const double lk1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lk1;
    if (std::abs(lk) > 1e150 || std::abs(lkm1) > 1e150) {
      lkm1 = std::ldexp(lkm1, -512);
      lk = std::ldexp(lk, -512);
      exp2 += 512;
    }
  }
  return {lkm1, lk};
}

}  // namespace detail

/// Evaluates L_n(x) and L_{n+1}(x) by the three-term recurrence
/// L_{k+1}(x) = ((2k+1-x) L_k(x) - k L_{k-1}(x)) / (k+1), L_0 = 1, L_1 = 1-x.
/// For large n and x the raw values can exceed the double range; relative
/// accuracy is preserved internally and the result saturates to +-inf.
inline LaguerrePair laguerre_eval(int n, double x) {
  int e = 0;
  LaguerrePair p = detail::laguerre_eval_scaled(n, x, e);
  return {std::ldexp(p.Ln, e), std::ldexp(p.Ln_plus_1, e)};
}

/// n-point Gauss-Laguerre rule: nodes are the zeros of L_n, weights
/// w_i = x_i / ((n+1)^2 [L_{n+1}(x_i)]^2). Exact for polynomials of degree
/// <= 2n-1 against the weight e^{-x} on [0, inf).
struct QuadratureRule {
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline QuadratureRule gauss_laguerre_rule(int n, int cap = kDefaultNodeCap) {
  if (cap < 1 || cap > kMaxNodeCap)
    throw std::invalid_argument("gauss_laguerre_rule: cap must be in [1, " +
                                std::to_string(kMaxNodeCap) + "]");
  if (n < 1)
    throw std::invalid_argument("gauss_laguerre_rule: n must be >= 1, got " +
                                std::to_string(n));
  if (n > cap)
    throw std::invalid_argument("gauss_laguerre_rule: n = " + std::to_string(n) +
                                " exceeds the stability cap " + std::to_string(cap));

  QuadratureRule rule;
  rule.n = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Golub-Welsch: the nodes are the eigenvalues of the symmetric tridiagonal
  // Jacobi matrix with diagonal 2i+1 (i = 0..n-1) and off-diagonal i
  // (i = 1..n-1).
  Eigen::VectorXd diag(n), subdiag(n > 1 ? n - 1 : 1);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) subdiag[i - 1] = static_cast<double>(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag.head(std::max(n - 1, 0)),
                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre_rule: tridiagonal eigensolve failed");

  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    // Newton polish against the recurrence; L_n'(x) = n (L_n(x) - L_{n-1}(x)) / x.
    for (int iter = 0; iter < 2; ++iter) {
      int e = 0;
      const LaguerrePair p = detail::laguerre_eval_scaled(n - 1, x, e);
      const double deriv = n * (p.Ln_plus_1 - p.Ln) / x;
      if (deriv == 0.0) break;
      const double dx = p.Ln_plus_1 / deriv;
      if (!std::isfinite(dx)) break;
      x -= dx;
    }
    int e = 0;
    const LaguerrePair p = detail::laguerre_eval_scaled(n, x, e);
    const double np1 = n + 1.0;
    const double w =
        std::ldexp(x / (np1 * np1 * p.Ln_plus_1 * p.Ln_plus_1), -2 * e);
    rule.nodes[i] = x;
    rule.weights[i] = w;
  }

  for (int i = 0; i < n; ++i) {
    if (!(rule.nodes[i] > 0.0) || !std::isfinite(rule.nodes[i]))
      throw std::runtime_error("gauss_laguerre_rule: non-positive node");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::runtime_error("gauss_laguerre_rule: nodes not strictly increasing");
    if (!(rule.weights[i] >= 0.0) || !std::isfinite(rule.weights[i]))
      throw std::runtime_error("gauss_laguerre_rule: invalid weight");
  }
  return rule;
}

}  // namespace avgk

#endif  // AVGK_LAGUERRE_HPP
