#ifndef THETAMON_KERNELS_HPP
#define THETAMON_KERNELS_HPP

#include <string>

#include "thetamon/types.hpp"

namespace thetamon {

/// Which Laplace kernel an integral representation uses.
struct KernelId {
  enum class Tag {
    binet_h,        // h(t) = 1/t - 1/(e^t - 1)
    binet_h_prime,  // h'(t)
    rho,            // rho(t) = 1/(1 - e^-t) - 1/t = 1 - h(t)
    rho_prime,      // rho'(t) = -h'(t) on (0, inf)
    polygamma,      // t^i / (1 - e^-t), 1 <= i <= k_max
    log_ratio,      // (e^-at - e^-bt)/t, a > 0, b > 0; integrates to ln(b/a)
  };

  Tag tag;
  int order = 0;            // polygamma only
  double a = 0.0, b = 0.0;  // log_ratio only

  static KernelId binet_h() { return {Tag::binet_h}; }
  static KernelId binet_h_prime() { return {Tag::binet_h_prime}; }
  static KernelId rho() { return {Tag::rho}; }
  static KernelId rho_prime() { return {Tag::rho_prime}; }
  static KernelId polygamma_kernel(int order);
  static KernelId log_ratio(double a, double b);

  std::string name() const;
};

/// Tolerances and truncation policy for the semi-infinite quadrature.
/// The upper limit T is chosen so that the documented tail bound for the
/// kernel falls below abs_tol/10, then clamped to T > small_t_cutoff.
struct QuadratureConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  double small_t_cutoff = 1e-2;  // kernels switch to their small-t series here
  int max_subdivisions = 60;

  void validate() const;
};

/// Series/direct switch point shared by the four kernels below. The Taylor
/// pieces keep ~1e-17 absolute accuracy up to here, while the direct forms
/// (whose 1/t magnifies rounding) only reach ~1e-14 at t = 1e-2; the wider
/// series region keeps the complement identity h + rho = 1 inside 1e-14.
inline constexpr double kernel_series_cutoff = 0.09;

/// h(t) = 1/t - 1/(e^t - 1), extended by h(0) = 1/2. Decreasing on the whole
/// line, from 1 at -inf to 0 at +inf; h(-t) = 1 - h(t).
/// Below the cutoff the Taylor series 1/2 - t/12 + t^3/720 - t^5/30240 + ...
/// replaces the catastrophically cancelling direct form.
double kernel_h(double t);

/// h'(t); h'(0) = -1/12 (series value). Even in t, strictly negative.
double kernel_h_prime(double t);

/// rho(t) = 1/(1 - e^-t) - 1/t for t > 0; rho(0) = 1/2 (series limit).
double kernel_rho(double t);

/// rho'(t) = 1/t^2 - e^-t/(1 - e^-t)^2 for t > 0; rho'(0) = 1/12.
/// Strictly positive. Evaluated through the factored form
///   2 e^-t (cosh t - 1 - t^2/2) / (t^2 (1 - e^-t)^2),
/// whose parenthesised factor is an all-positive power series
/// t^4/24 + t^6/720 + ... summed to convergence below t = 1.
double kernel_rho_prime(double t);

/// integral_0^inf kernel(t) e^{-x t} dt by adaptive bisection with a 15-point
/// Gauss-Kronrod rule per panel (error from the embedded 7-point rule).
/// The log_ratio kernel carries its own exponential decay and ignores the
/// e^{-x t} weight, so its value is ln(b/a) independent of x.
/// Throws NonConvergenceError when the subdivision budget is exhausted.
double laplace_integral(const KernelId& kernel, EvalPoint x,
                        const QuadratureConfig& cfg = {});

/// theta_1(x) by the Laplace route: 1/2 + integral_0^inf rho'(t) e^{-x t} dt.
double theta1_via_kernel(EvalPoint x, const QuadratureConfig& cfg = {});

}  // namespace thetamon

#endif  // THETAMON_KERNELS_HPP
