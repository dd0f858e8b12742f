#include "thetamon/theta.hpp"

#include <cmath>

#include "thetamon/specfun.hpp"

namespace thetamon {

namespace {

constexpr double kAsymptoticThreshold = 16.0;  // matches specfun's shift point

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

}  // namespace

double theta1(EvalPoint xp) {
  const double x = xp.value();
  if (x < 1.0)
    return 1.0 + x * std::log(x) - x * digamma(EvalPoint(x + 1.0));
  return x * log_minus_digamma(xp);
}

double theta(AlphaExponent alpha, EvalPoint xp) {
  const double x = xp.value();
  const double t1 = theta1(xp);
  const double p = std::pow(x, alpha.value() - 1.0);
  const double v = p * t1;
  if (std::isfinite(v)) return v;
  return std::exp((alpha.value() - 1.0) * std::log(x) + std::log(t1));
}

namespace detail {

DerivTerms theta1_deriv_terms(int i, double x) {
  const EvalPoint xp(x);
  if (i == 0) {
    const double v = theta1(xp);
    return {v, std::fabs(v)};
  }
  if (i == 1) {
    const double a = log_minus_digamma(xp);
    const double b = x * polygamma(DerivOrder(1), xp);
    return {a - b + 1.0, std::fabs(a) + std::fabs(b) + 1.0};
  }
  const double sign = (i % 2 == 0) ? 1.0 : -1.0;
  const double a = sign * factorial(i - 2) / std::pow(x, i - 1);
  const double b = i * polygamma(DerivOrder(i - 1), xp);
  const double c = x * polygamma(DerivOrder(i), xp);
  return {a - b - c, std::fabs(a) + std::fabs(b) + std::fabs(c)};
}

DerivTerms theta_alpha_deriv_terms(double alpha, int i, double x) {
  // Leibniz over x^(alpha-1) * theta_1(x):
  //   sum_j C(i,j) (alpha-1)(alpha-2)...(alpha-j) x^(alpha-1-j) theta_1^(i-j)(x)
  double value = 0.0;
  double abs_sum = 0.0;
  double poch = 1.0;
  for (int j = 0; j <= i; ++j) {
    const double coeff = binomial(i, j) * poch * std::pow(x, alpha - 1.0 - j);
    const DerivTerms t = theta1_deriv_terms(i - j, x);
    value += coeff * t.value;
    abs_sum += std::fabs(coeff) * t.abs_sum;
    poch *= alpha - (j + 1.0);
  }
  return {value, abs_sum};
}

}  // namespace detail

double theta1_deriv(DerivOrder id, EvalPoint x) {
  const int i = id.value();
  if (i > k_max - 1)
    throw std::out_of_range("theta1_deriv: order must be <= k_max - 1");
  return detail::theta1_deriv_terms(i, x.value()).value;
}

double theta_alpha_deriv(AlphaExponent alpha, DerivOrder id, EvalPoint x) {
  const int i = id.value();
  if (i > 8) throw std::out_of_range("theta_alpha_deriv: order must be <= 8");
  return detail::theta_alpha_deriv_terms(alpha.value(), i, x.value()).value;
}

AsymptoticRemainder AsymptoticRemainder::at(EvalPoint xp) {
  const double x = xp.value();
  if (x < kAsymptoticThreshold)
    return {x, 0.5 + 1.0 / (12.0 * x) - theta1(xp)};
  // remainder = -sum_{n>=2} B_{2n}/(2n) x^{-(2n-1)} = 1/(120 x^3) - 1/(252 x^5) + ...
  const double inv2 = 1.0 / (x * x);
  double p = inv2 / x;  // x^-3
  double sum = 0.0;
  for (int n = 2; n <= 10; ++n) {
    sum -= BernoulliTable::value(n) / (2.0 * n) * p;
    p *= inv2;
  }
  return {x, sum};
}

double gamma_shape(EvalPoint xp) {
  const double x = xp.value();
  return std::exp(x + lgamma(xp) - (x - theta1(xp)) * std::log(x));
}

double identric_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("identric_mean: arguments must be finite and > 0");
  if (a == b) throw DegenerateMeanError(a);
  return std::exp((b * std::log(b) - a * std::log(a)) / (b - a) - 1.0);
}

}  // namespace thetamon
