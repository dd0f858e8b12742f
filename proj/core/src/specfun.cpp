#include "thetamon/specfun.hpp"

#include <cmath>

namespace thetamon {

namespace {

// Shift threshold before switching to the asymptotic series. With ten
// Bernoulli terms the first omitted term at x = 16 is below 1e-24 relative
// for every function in this file.
constexpr double kAsymptoticThreshold = 16.0;

// Euler-Mascheroni to 21 significant digits.
constexpr double kEulerGamma = 0.577215664901532860607;

constexpr double kHalfLogTwoPi = 0.918938533204672741781;  // ln(2 pi)/2

// B_{2n}/(2n), n = 1..10: the digamma tail  psi(x) ~ ln x - 1/(2x) - sum c_n x^{-2n}.
constexpr double kDigammaTail[10] = {
    1.0 / 12.0,         -1.0 / 120.0,        1.0 / 252.0,
    -1.0 / 240.0,       1.0 / 132.0,         -691.0 / 32760.0,
    1.0 / 12.0,         -3617.0 / 8160.0,    43867.0 / 14364.0,
    -174611.0 / 6600.0,
};

// B_{2n}/((2n)(2n-1)), n = 1..10: the Stirling tail of ln Gamma.
constexpr double kLgammaTail[10] = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

double factorial(int n) {
  static constexpr double table[14] = {
      1.0,      1.0,       2.0,        6.0,        24.0,
      120.0,    720.0,     5040.0,     40320.0,    362880.0,
      3628800.0, 39916800.0, 479001600.0, 6227020800.0};
  return table[n];
}

// Asymptotic series for ln x - psi(x), valid for x >= kAsymptoticThreshold.
// All the work happens at the scale of the answer, so no cancellation.
double log_minus_digamma_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double p = inv2;
  double sum = 0.5 / x;
  for (double c : kDigammaTail) {
    sum += c * p;
    p *= inv2;
  }
  return sum;
}

}  // namespace

const std::array<BernoulliTable::Entry, 10>& BernoulliTable::entries() {
  static const std::array<Entry, 10> table = {{
      {1, 6},          // B2
      {-1, 30},        // B4
      {1, 42},         // B6
      {-1, 30},        // B8
      {5, 66},         // B10
      {-691, 2730},    // B12
      {7, 6},          // B14
      {-3617, 510},    // B16
      {43867, 798},    // B18
      {-174611, 330},  // B20
  }};
  return table;
}

double BernoulliTable::value(int n) {
  if (n < 1 || n > 10)
    throw std::out_of_range("BernoulliTable: B_{2n} stored for 1 <= n <= 10");
  const Entry& e = entries()[n - 1];
  return static_cast<double>(e.num) / static_cast<double>(e.den);
}

double lgamma(EvalPoint xp) {
  double x = xp.value();
  // Recurrence ln Gamma(x) = ln Gamma(x + m) - sum ln(x + k).
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += std::log(x);
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double p = 1.0 / x;
  double tail = 0.0;
  for (double c : kLgammaTail) {
    tail += c * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + tail - shift;
}

double digamma(EvalPoint xp) {
  double x = xp.value();
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return std::log(x) - log_minus_digamma_asymptotic(x) - shift;
}

double log_minus_digamma(EvalPoint xp) {
  double x = xp.value();
  if (x >= kAsymptoticThreshold) return log_minus_digamma_asymptotic(x);
  // ln x - psi(x) = [ln(x+m) - psi(x+m)] + sum_{k<m} 1/(x+k) - ln((x+m)/x).
  // The reciprocal sum dominates, so the subtraction stays benign.
  double m = 0.0;
  double recip = 0.0;
  double y = x;
  while (y < kAsymptoticThreshold) {
    recip += 1.0 / y;
    y += 1.0;
    m += 1.0;
  }
  return log_minus_digamma_asymptotic(y) + recip - std::log1p(m / x);
}

double polygamma(DerivOrder kd, EvalPoint xp) {
  const int k = kd.value();
  if (k < 1)
    throw std::out_of_range("polygamma: order must satisfy 1 <= k <= k_max");
  double x = xp.value();

  // Work with g_k(x) = (-1)^(k+1) psi^(k)(x) = k! sum_{j>=0} (x+j)^-(k+1),
  // which is positive, so recurrence and series terms never cancel.
  const double kfact = factorial(k);
  double g = 0.0;
  while (x < kAsymptoticThreshold) {
    g += kfact / std::pow(x, k + 1);
    x += 1.0;
  }

  // g_k(x) ~ (k-1)!/x^k + k!/(2 x^(k+1)) + sum_n B_{2n} (2n+k-1)!/((2n)! x^(2n+k)).
  const double invx = 1.0 / x;
  double xpow = std::pow(invx, k);  // x^-(k)
  double series = factorial(k - 1) * xpow + 0.5 * kfact * xpow * invx;
  const double inv2 = invx * invx;
  double p = xpow * inv2;  // x^-(2n+k), n = 1
  for (int n = 1; n <= 10; ++n) {
    // ratio (2n+k-1)!/(2n)! = prod_{j=2n+1}^{2n+k-1} j
    double r = 1.0;
    for (int j = 2 * n + 1; j <= 2 * n + k - 1; ++j) r *= j;
    series += BernoulliTable::value(n) * r * p;
    p *= inv2;
  }
  g += series;

  return (k % 2 == 1) ? g : -g;
}

double euler_gamma() { return kEulerGamma; }

double digamma_series_oracle(EvalPoint xp, long long terms) {
  if (terms < 1)
    throw std::domain_error("digamma_series_oracle: terms must be >= 1");
  const double x = xp.value();
  // Audited literal, deliberately separate from euler_gamma().
  constexpr double gamma0 = 0.57721566490153286;
  // Summands combined as (x-1)/((n+1)(n+x)) to avoid cancellation; smallest first.
  double s = 0.0;
  for (long long n = terms - 1; n >= 0; --n) {
    const double nd = static_cast<double>(n);
    s += (x - 1.0) / ((nd + 1.0) * (nd + x));
  }
  return -gamma0 + s + (x - 1.0) / static_cast<double>(terms);
}

}  // namespace thetamon
