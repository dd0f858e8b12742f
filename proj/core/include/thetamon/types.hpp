#ifndef THETAMON_TYPES_HPP
#define THETAMON_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace thetamon {

/// Highest polygamma order the library evaluates. Orders beyond this erode
/// double precision through factorial growth, and nothing downstream needs them.
inline constexpr int k_max = 12;

/// A strictly positive, finite abscissa on (0, inf).
class EvalPoint {
 public:
  explicit EvalPoint(double x) : x_(x) {
    if (!std::isfinite(x) || x <= 0.0)
      throw std::domain_error("EvalPoint: x must be finite and > 0, got " +
                              std::to_string(x));
  }
  double value() const { return x_; }

 private:
  double x_;
};

/// Derivative order k for the psi family; k = 0 means psi itself.
class DerivOrder {
 public:
  explicit DerivOrder(int k) : k_(k) {
    if (k < 0 || k > k_max)
      throw std::out_of_range("DerivOrder: k must be in [0, " +
                              std::to_string(k_max) + "], got " +
                              std::to_string(k));
  }
  int value() const { return k_; }

 private:
  int k_;
};

/// Exponent alpha of the theta family. Any finite real; alpha = 1 is the
/// complete-monotonicity boundary.
class AlphaExponent {
 public:
  explicit AlphaExponent(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha))
      throw std::domain_error("AlphaExponent: alpha must be finite");
  }
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Adaptive quadrature ran out of its subdivision budget.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::string kernel, double x, double lo, double hi,
                      double achieved)
      : std::runtime_error("quadrature did not converge for kernel " + kernel +
                           " at x = " + std::to_string(x) +
                           ": worst interval [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "], achieved error estimate " +
                           std::to_string(achieved)),
        kernel_name(std::move(kernel)),
        x(x),
        interval_lo(lo),
        interval_hi(hi),
        achieved_error(achieved) {}

  std::string kernel_name;
  double x;
  double interval_lo;
  double interval_hi;
  double achieved_error;
};

/// identric_mean(a, a) is undefined.
class DegenerateMeanError : public std::invalid_argument {
 public:
  explicit DegenerateMeanError(double a)
      : std::invalid_argument("identric_mean requires a != b, got a = b = " +
                              std::to_string(a)) {}
};

/// A log-CM sweep met a non-positive function value.
class NonPositiveValueError : public std::domain_error {
 public:
  NonPositiveValueError(double x, double value)
      : std::domain_error("certify_lcm: evaluator must be positive, got " +
                          std::to_string(value) + " at x = " +
                          std::to_string(x)),
        x(x),
        value(value) {}

  double x;
  double value;
};

}  // namespace thetamon

#endif  // THETAMON_TYPES_HPP
