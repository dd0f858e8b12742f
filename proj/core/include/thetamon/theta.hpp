#ifndef THETAMON_THETA_HPP
#define THETAMON_THETA_HPP

#include "thetamon/types.hpp"

namespace thetamon {

/// theta_alpha(x) = x^alpha [ln x - psi(x)]. Strictly positive for all x > 0.
/// When the direct product x^(alpha-1) * theta_1(x) would overflow it is
/// re-evaluated as exp((alpha-1) ln x + ln theta_1(x)).
double theta(AlphaExponent alpha, EvalPoint x);

/// theta_1(x) = x [ln x - psi(x)]. Lies strictly in (1/2, 1) with limits 1 at
/// 0+ and 1/2 at infinity. Below x = 1 the identity
/// theta_1(x) = x ln x - x psi(x+1) + 1 sidesteps the psi pole at 0.
double theta1(EvalPoint x);

/// Closed-form i-th derivative of theta_1 via the polygammas:
///   i = 1:  ln x - psi(x) - x psi'(x) + 1
///   i >= 2: (-1)^i (i-2)!/x^(i-1) - i psi^(i-1)(x) - x psi^(i)(x)
/// Satisfies (-1)^i theta1_deriv(i, x) >= 0. Requires 0 <= i <= k_max - 1.
double theta1_deriv(DerivOrder i, EvalPoint x);

/// i-th derivative of theta_alpha by the Leibniz rule over
/// x^(alpha-1) * theta_1(x). Requires 0 <= i <= 8.
double theta_alpha_deriv(AlphaExponent alpha, DerivOrder i, EvalPoint x);

/// The remainder 1/2 + 1/(12x) - theta_1(x), which lies in (0, 1/(120 x^3))
/// for every x > 0. For large x it is summed from the asymptotic tail
/// directly, so the invariant survives floating point even where the literal
/// subtraction would be pure rounding noise.
struct AsymptoticRemainder {
  double x;
  double value;

  static AsymptoticRemainder at(EvalPoint x);
};

/// e^x Gamma(x) / x^(x - theta_1(x)), evaluated in log space. Has a unique
/// maximum e at x = 1 and limits 1 at 0+ and sqrt(2 pi) at infinity.
double gamma_shape(EvalPoint x);

/// Identric (exponential) mean (1/e) (b^b/a^a)^(1/(b-a)) for distinct
/// positive a, b, in log space. Symmetric; throws DegenerateMeanError for a == b.
double identric_mean(double a, double b);

namespace detail {

/// Closed-form derivative value together with the sum of absolute term
/// magnitudes, which the analytic CM certifier uses to scale its slack.
struct DerivTerms {
  double value;
  double abs_sum;
};

DerivTerms theta1_deriv_terms(int i, double x);
DerivTerms theta_alpha_deriv_terms(double alpha, int i, double x);

}  // namespace detail

}  // namespace thetamon

#endif  // THETAMON_THETA_HPP
