#ifndef AVGK_SMOLUCHOWSKI_HPP
#define AVGK_SMOLUCHOWSKI_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "avgk/kernels.hpp"

namespace avgk {

/// Particle population at one instant: total number concentration M0 and
/// total volume concentration M1 (conserved along trajectories).
struct MomentState {
  double M0 = 1.0;
  double M1 = 1.0;
  double t = 0.0;
};

/// Algebraic mean volume u = M1 / M0.
inline double mean_volume(const MomentState& state) {
  if (!(state.M0 > 0.0)) throw std::invalid_argument("mean_volume: M0 must be > 0");
  return state.M1 / state.M0;
}

/// Time at which M0 reaches zero under dM0/dt = -(p/2) M1^q M0^{2-q}.
/// Finite only for q > 1; +inf otherwise.
inline double extinction_time(const AverageKernel& ak, const MomentState& initial) {
  const double q = ak.q();
  if (q <= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(initial.M0, q - 1.0) /
         ((q - 1.0) * (ak.p / 2.0) * std::pow(initial.M1, q));
}

/// Closed-form evolution of M0 over an elapsed time dt, with M1 held fixed:
///   q = 1:  M0(t) = M0(0) exp(-(p/2) M1 t)
///   q != 1: M0(t) = [M0(0)^{q-1} + (1-q)(p/2) M1^q t]^{1/(q-1)}
/// For q > 1 the bracket reaches zero at a finite time (see extinction_time);
/// past that point M0 is clamped to zero.
inline MomentState evolve_M0(const AverageKernel& ak, const MomentState& initial,
                             double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("evolve_M0: elapsed time must be finite and >= 0");
  if (!(initial.M0 > 0.0) || !(initial.M1 > 0.0) || !std::isfinite(initial.M0) ||
      !std::isfinite(initial.M1))
    throw std::invalid_argument("evolve_M0: M0 and M1 must be finite and > 0");
  const double q = ak.q();
  MomentState out = initial;
  out.t = initial.t + dt;
  if (q == 1.0) {
    out.M0 = initial.M0 * std::exp(-(ak.p / 2.0) * initial.M1 * dt);
    return out;
  }
  const double bracket = std::pow(initial.M0, q - 1.0) +
                         (1.0 - q) * (ak.p / 2.0) * std::pow(initial.M1, q) * dt;
  if (q > 1.0 && bracket <= 0.0) {
    out.M0 = 0.0;
    return out;
  }
  out.M0 = std::pow(bracket, 1.0 / (q - 1.0));
  return out;
}

/// Exponential particle size distribution n(v) = (M0^2 / M1) exp(-(M0/M1) v);
/// in dimensionless form psi(eta) = e^{-eta} with eta = v / u.
inline double psd(const MomentState& state, double v) {
  if (!(state.M0 > 0.0) || !(state.M1 > 0.0))
    throw std::invalid_argument("psd: M0 and M1 must be > 0");
  if (v < 0.0) throw std::invalid_argument("psd: v must be >= 0");
  return state.M0 * state.M0 / state.M1 * std::exp(-state.M0 / state.M1 * v);
}

/// Population-averaged kernel against the exponential PSD. After the change
/// of variables eta = v/u this is the exponentially weighted double
/// quadrature of beta scaled by u^q, i.e. exactly 2 * prefactor * u^q when
/// computed through the same rule.
inline double population_average(const Kernel& kernel, const MomentState& state,
                                 const QuadratureRule& rule) {
  const double u = mean_volume(state);
  return integrate_2d(rule, kernel.beta) * std::pow(u, kernel.q());
}

}  // namespace avgk

#endif  // AVGK_SMOLUCHOWSKI_HPP
