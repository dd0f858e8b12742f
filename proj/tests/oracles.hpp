// Test-only oracles, deliberately independent of the library's evaluation
// paths: plain zeta partial sums with Euler-Maclaurin tails, and central
// finite differences with one step of Richardson extrapolation.
#ifndef THETAMON_TESTS_ORACLES_HPP
#define THETAMON_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracles {

// Tiny deterministic generator for hand-rolled property tests (numerical
// recipes LCG); seeded per test so failures replay exactly.
class Lcg {
 public:
  explicit Lcg(std::uint32_t seed) : state_(seed) {}

  double next() {  // in [0, 1)
    state_ = 1664525u * state_ + 1013904223u;
    return state_ * (1.0 / 4294967296.0);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
  double log_uniform(double lo, double hi) {
    return lo * std::exp(next() * std::log(hi / lo));
  }

 private:
  std::uint32_t state_;
};

// sum_{n>=1} n^-2 via partial sum + tail 1/N - 1/(2N^2) + 1/(6N^3); the next
// Euler-Maclaurin term is -1/(30 N^5), so N = 1e4 leaves error < 4e-22.
inline double zeta2(long n_terms = 10000) {
  double s = 0.0;
  for (long n = n_terms; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * n);
  const double N = static_cast<double>(n_terms);
  return s + 1.0 / N - 0.5 / (N * N) + 1.0 / (6.0 * N * N * N);
}

// sum_{n>=1} n^-3, tail 1/(2N^2) - 1/(2N^3) + 1/(4N^4); error O(N^-6).
inline double zeta3(long n_terms = 10000) {
  double s = 0.0;
  for (long n = n_terms; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    s += 1.0 / (nd * nd * nd);
  }
  const double N = static_cast<double>(n_terms);
  return s + 0.5 / (N * N) - 0.5 / (N * N * N) + 0.25 / (N * N * N * N);
}

// i-th central finite difference of f at x with step h.
inline double central_difference(const std::function<double(double)>& f, int i,
                                 double x, double h) {
  // sum_j (-1)^j C(i,j) f(x + (i/2 - j) h), nodes symmetric about x.
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= i; ++j) {
    if (j > 0) binom = binom * (i - j + 1) / j;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * f(x + (0.5 * i - j) * h);
  }
  return sum / std::pow(h, i);
}

// Richardson-extrapolated derivative: three step levels h, h/2, h/4 cancel
// the O(h^2) and O(h^4) errors of the central stencil, leaving O(h^6).
inline double derivative(const std::function<double(double)>& f, int i,
                         double x, double h) {
  const double d1 = central_difference(f, i, x, h);
  const double d2 = central_difference(f, i, x, 0.5 * h);
  const double d3 = central_difference(f, i, x, 0.25 * h);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace oracles

#endif  // THETAMON_TESTS_ORACLES_HPP
