#ifndef THETAMON_SPECFUN_HPP
#define THETAMON_SPECFUN_HPP

#include <array>
#include <cstdint>

#include "thetamon/types.hpp"

namespace thetamon {

/// Even-index Bernoulli numbers B_2 .. B_20 as exact rationals. These drive
/// the asymptotic tails of lgamma, digamma and the polygammas; the Lemma-style
/// two-sided psi bounds in the test suite cross-check them independently.
struct BernoulliTable {
  struct Entry {
    std::int64_t num;
    std::int64_t den;
  };

  static const std::array<Entry, 10>& entries();

  /// B_{2n} as a double, 1 <= n <= 10.
  static double value(int n);
};

/// ln Gamma(x) for real x > 0.
/// Relative error <= 1e-12 on [1e-4, 1e6] (absolute ~1e-13 near the zeros at
/// x = 1, 2). Upward recurrence to x >= 16, then the Stirling series with ten
/// Bernoulli terms (truncation < 1e-24 relative at the threshold).
double lgamma(EvalPoint x);

/// psi(x) = Gamma'(x)/Gamma(x) for real x > 0.
/// Relative error <= 1e-12 on [1e-4, 1e6]; recurrence to x >= 16 then the
/// asymptotic series.
double digamma(EvalPoint x);

/// ln x - psi(x), evaluated without the cancellation of the literal
/// subtraction (which loses ~half the digits for x >~ 1e3). Strictly positive.
double log_minus_digamma(EvalPoint x);

/// psi^(k)(x) for 1 <= k <= k_max, x > 0. Sign is (-1)^(k+1).
/// Relative error <= 1e-11 on [1e-3, 1e5].
double polygamma(DerivOrder k, EvalPoint x);

/// The Euler-Mascheroni constant gamma = -psi(1).
double euler_gamma();

/// Slow independent oracle: -gamma0 + sum_{n=0}^{terms-1} (1/(n+1) - 1/(n+x))
/// with the O(1/terms) tail corrected by (x-1)/terms, where gamma0 is an
/// audited literal. Residual error is O((x-1)(x+1)/terms^2). Test use only;
/// intentionally shares no code with digamma().
double digamma_series_oracle(EvalPoint x, long long terms);

}  // namespace thetamon

#endif  // THETAMON_SPECFUN_HPP
