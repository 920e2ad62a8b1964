#ifndef AVGK_KERNELS_HPP
#define AVGK_KERNELS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avgk/quadrature.hpp"

namespace avgk {

enum class KernelId { CR, SC, FM, SD, Const, Add, Mul, Custom };

/// Symmetric homogeneous collision-rate function beta(eta, eta1) with its
/// homogeneity degree q (beta(a*x, a*y) = a^q beta(x, y)), stored as an
/// exact fraction q_num/q_den.
struct Kernel {
  KernelId id = KernelId::Custom;
  std::string name;
  std::function<double(double, double)> beta;
  int q_num = 0;
  int q_den = 1;

  double q() const { return static_cast<double>(q_num) / q_den; }
};

/// Average kernel beta_bar(u) = p * u^q.
struct AverageKernel {
  double p = 0.0;
  int q_num = 0;
  int q_den = 1;

  double q() const { return static_cast<double>(q_num) / q_den; }
};

inline std::string kernel_name(KernelId id) {
  switch (id) {
    case KernelId::CR: return "cr";
    case KernelId::SC: return "sc";
    case KernelId::FM: return "fm";
    case KernelId::SD: return "sd";
    case KernelId::Const: return "const";
    case KernelId::Add: return "add";
    case KernelId::Mul: return "mul";
    case KernelId::Custom: return "custom";
  }
  return "?";
}

/// Formats the homogeneity degree as "0", "1", "1/6", "4/3", ...
inline std::string q_string(int q_num, int q_den) {
  if (q_den == 1) return std::to_string(q_num);
  return std::to_string(q_num) + "/" + std::to_string(q_den);
}

inline Kernel builtin(KernelId id) {
  Kernel k;
  k.id = id;
  k.name = kernel_name(id);
  switch (id) {
    case KernelId::CR:  // Brownian coagulation, continuum regime
      k.beta = [](double a, double b) {
        return (std::pow(b, -1.0 / 3.0) + std::pow(a, -1.0 / 3.0)) *
               (std::cbrt(b) + std::cbrt(a));
      };
      k.q_num = 0; k.q_den = 1;
      break;
    case KernelId::SC: {  // shear coagulation
      k.beta = [](double a, double b) {
        const double s = std::cbrt(b) + std::cbrt(a);
        return s * s * s;
      };
      k.q_num = 1; k.q_den = 1;
      break;
    }
    case KernelId::FM: {  // Brownian coagulation, free molecule regime
      k.beta = [](double a, double b) {
        const double s = std::cbrt(b) + std::cbrt(a);
        return std::sqrt(1.0 / b + 1.0 / a) * s * s;
      };
      k.q_num = 1; k.q_den = 6;
      break;
    }
    case KernelId::SD: {  // sedimentary coagulation under gravity
      k.beta = [](double a, double b) {
        const double ca = std::cbrt(a), cb = std::cbrt(b);
        const double s = ca + cb;
        return s * s * s * std::abs(ca - cb);
      };
      k.q_num = 4; k.q_den = 3;
      break;
    }
    case KernelId::Const:
      k.beta = [](double, double) { return 1.0; };
      k.q_num = 0; k.q_den = 1;
      break;
    case KernelId::Add:
      k.beta = [](double a, double b) { return a + b; };
      k.q_num = 1; k.q_den = 1;
      break;
    case KernelId::Mul:
      k.beta = [](double a, double b) { return a * b; };
      k.q_num = 2; k.q_den = 1;
      break;
    case KernelId::Custom:
      throw std::invalid_argument("builtin: 'custom' is not a built-in kernel");
  }
  return k;
}

inline Kernel builtin(std::string_view name) {
  for (KernelId id : {KernelId::CR, KernelId::SC, KernelId::FM, KernelId::SD,
                      KernelId::Const, KernelId::Add, KernelId::Mul}) {
    if (name == kernel_name(id)) return builtin(id);
  }
  throw std::invalid_argument("unknown kernel id '" + std::string(name) +
                              "' (expected cr, sc, fm, sd, const, add, mul)");
}

/// The four kernels with closed-form references: CR, SC, FM, SD.
inline std::vector<KernelId> reference_kernels() {
  return {KernelId::CR, KernelId::SC, KernelId::FM, KernelId::SD};
}

namespace detail {

// xorshift64*, deterministic sampling for the registration checks.
inline double sample_unit(std::uint64_t& s) {
  s ^= s >> 12; s ^= s << 25; s ^= s >> 27;
  return static_cast<double>((s * 0x2545F4914F6CDD1Dull) >> 11) / 9007199254740992.0;
}

inline double sample_log(std::uint64_t& s, double lo, double hi) {
  return lo * std::pow(hi / lo, sample_unit(s));
}

}  // namespace detail

/// Registers a user kernel. The declared homogeneity degree and symmetry are
/// verified by deterministic sampling; a declaration that fails at relative
/// tolerance 1e-6 is rejected.
inline Kernel make_custom(std::string name, std::function<double(double, double)> beta,
                          int q_num, int q_den, int samples = 256) {
  if (q_den == 0) throw std::invalid_argument("make_custom: q_den must be nonzero");
  Kernel k;
  k.id = KernelId::Custom;
  k.name = std::move(name);
  k.beta = std::move(beta);
  k.q_num = q_num;
  k.q_den = q_den;

  std::uint64_t s = 0x9E3779B97F4A7C15ull;
  const double q = k.q();
  for (int i = 0; i < samples; ++i) {
    const double a = detail::sample_log(s, 1e-3, 1e3);
    const double b = detail::sample_log(s, 1e-3, 1e3);
    const double alpha = detail::sample_log(s, 1e-2, 1e2);
    const double base = k.beta(a, b);
    if (!(base >= 0.0))
      throw std::invalid_argument("make_custom: kernel is negative at (" +
                                  std::to_string(a) + ", " + std::to_string(b) + ")");
    const double swapped = k.beta(b, a);
    const double scaled = k.beta(alpha * a, alpha * b);
    const double expect = std::pow(alpha, q) * base;
    const double scale = std::max({std::abs(base), std::abs(swapped), 1e-300});
    if (std::abs(base - swapped) > 1e-6 * scale)
      throw std::invalid_argument("make_custom: kernel is not symmetric");
    if (std::abs(scaled - expect) > 1e-6 * std::max(std::abs(expect), 1e-300))
      throw std::invalid_argument("make_custom: declared homogeneity degree " +
                                  q_string(q_num, q_den) + " fails the sampling check");
  }
  return k;
}

/// Pre-exponential factor p = (1/2) * II, with II the exponentially weighted
/// double integral of the dimensionless kernel.
inline double prefactor(const QuadratureRule& rule, const Kernel& kernel) {
  return integrate_2d(rule, kernel.beta) / 2.0;
}

inline AverageKernel average_kernel(const Kernel& kernel, const QuadratureRule& rule) {
  return AverageKernel{prefactor(rule, kernel), kernel.q_num, kernel.q_den};
}

/// beta_bar = p * u^q for mean volume u > 0.
inline double evaluate_average(const AverageKernel& ak, double u) {
  if (!(u > 0.0)) throw std::invalid_argument("evaluate_average: u must be > 0");
  return ak.p * std::pow(u, ak.q());
}

}  // namespace avgk

#endif  // AVGK_KERNELS_HPP
