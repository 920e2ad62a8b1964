#ifndef AVGK_QUADRATURE_HPP
#define AVGK_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "avgk/laguerre.hpp"

namespace avgk {

namespace detail {

[[noreturn]] inline void throw_nonfinite(double x, double y, bool two_d) {
  std::string msg = "integrand not finite at node x = " + std::to_string(x);
  if (two_d) msg += ", x1 = " + std::to_string(y);
  throw std::runtime_error(msg);
}

}  // namespace detail

/// Approximates int_0^inf e^{-x} f(x) dx as sum_i w_i f(x_i).
/// Nodes are strictly positive, so integrable singularities of f at 0 are
/// fine without special handling.
template <class F>
double integrate_1d(const QuadratureRule& rule, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    const double fi = f(rule.nodes[i]);
    if (!std::isfinite(fi)) detail::throw_nonfinite(rule.nodes[i], 0.0, false);
    acc += rule.weights[i] * fi;
  }
  return acc;
}

/// Approximates int_0^inf int_0^inf e^{-x-x1} f(x, x1) dx1 dx as the
/// tensor-product double sum. Rows are accumulated in ascending node order;
/// set `compensated` to use Kahan summation instead (verification aid, the
/// dominant error is quadrature truncation at these node counts).
template <class F>
double integrate_2d(const QuadratureRule& rule, F&& f, bool compensated = false) {
  double acc = 0.0;
  double carry = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    const double xi = rule.nodes[i];
    const double wi = rule.weights[i];
    for (int j = 0; j < rule.n; ++j) {
      const double fij = f(xi, rule.nodes[j]);
      if (!std::isfinite(fij)) detail::throw_nonfinite(xi, rule.nodes[j], true);
      const double term = wi * rule.weights[j] * fij;
      if (compensated) {
        const double y = term - carry;
        const double t = acc + y;
        carry = (t - acc) - y;
        acc = t;
      } else {
        acc += term;
      }
    }
  }
  return acc;
}

}  // namespace avgk

#endif  // AVGK_QUADRATURE_HPP
