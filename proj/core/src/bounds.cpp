#include "thetamon/bounds.hpp"

#include <cmath>
#include <limits>

#include "thetamon/grid.hpp"
#include "thetamon/specfun.hpp"
#include "thetamon/theta.hpp"

namespace thetamon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfLogTwoPi = 0.918938533204672741781;

double lgamma_at(double x) { return lgamma(EvalPoint(x)); }
double theta1_at(double x) { return theta1(EvalPoint(x)); }
double lmd(double x) { return log_minus_digamma(EvalPoint(x)); }

// ln of {x^theta(x) Gamma(x) / (y^theta(y) Gamma(y))}^(1/(x-y)).
double log_identric_bound(double x, double y) {
  return (theta1_at(x) * std::log(x) + lgamma_at(x) -
          theta1_at(y) * std::log(y) - lgamma_at(y)) /
         (x - y);
}

double log_identric_mean(double x, double y) {
  return (y * std::log(y) - x * std::log(x)) / (y - x) - 1.0;
}

Evaluator unbounded_below() {
  return [](double) { return -kInf; };
}
Evaluator unbounded_above() {
  return [](double) { return kInf; };
}

}  // namespace

// Catalog notes (anchors refer to the bounds write-up in the README):
//   eq4    1/(2x) < ln x - psi(x) < 1/x on (0, inf).
//   eq11   x^(x-g) e^(1-x) < Gamma(x) < x^(x-1/2) e^(1-x) on (1, inf),
//          g the Euler-Mascheroni constant; both constants sharp.
//   eq11r  on (0, 1) the left bound still holds and the right one reverses,
//          so Gamma dominates the larger of the two forms there.
//   eq12   x^(x-theta1) e^-x < Gamma(x) <= x^(x-theta1) e^(1-x) on (0, 1],
//          equality on the right at x = 1.
//   eq13   sqrt(2 pi) x^(x-theta1) e^-x < Gamma(x) <= x^(x-theta1) e^(1-x)
//          on [1, inf), equality on the right at x = 1.
//   eq14   the identric mean I(x, y) against the theta-weighted Gamma-ratio
//          mean: I dominates on [1, inf)^2 and is dominated on (0, 1]^2
//          (pairs (x, x+1) and (x, x/2); pair separation >= ~1e-3 to keep the
//          1/(x-y) exponent well conditioned).
//   eq15   ln x - 1/x <= psi(x) <= ln x - 1/(2x) on (0, inf).
//   eq16   1/(2x) - 1/(12x^2) < psi(x+1) - ln x < 1/(2x) on (0, inf).
//   eq17   1/(2x^2) - 1/(6x^3) < 1/x - psi'(x+1)
//                               < 1/(2x^2) - 1/(6x^3) + 1/(30x^5) on (0, inf).
//   eq18   (k-1)!/x^k + k!/(2x^(k+1)) <= (-1)^(k+1) psi^(k)(x)
//                                      <= (k-1)!/x^k + k!/x^(k+1); k = 1 here
//          (the unit tests sweep k = 1..5).
//   eq23   1/(2x) < ln x - psi(x) < 1/(2x) + 1/(12x^2) on (0, inf).
//   eq24   1/(2x^(1-a)) < theta_a(x) < 1/(2x^(1-a)) + 1/(12x^(2-a));
//          representative a = 1/2.
std::vector<BoundSpec> standard_catalog() {
  const double g = euler_gamma();
  std::vector<BoundSpec> cat;

  cat.push_back({"lnx-psi", "eq4",
                 [](double x) { return 0.5 / x; },
                 [](double x) { return 1.0 / x; },
                 [](double x) { return lmd(x); },
                 0.0, kInf, true, 1e-3, 1e3});

  cat.push_back({"gamma-sandwich", "eq11",
                 [g](double x) { return (x - g) * std::log(x) - (x - 1.0); },
                 [](double x) { return (x - 0.5) * std::log(x) - (x - 1.0); },
                 [](double x) { return lgamma_at(x); },
                 1.0, kInf, true, 1.0, 1e3});

  cat.push_back({"gamma-sandwich-smallx", "eq11r",
                 [g](double x) {
                   const double lx = std::log(x);
                   return std::max((x - g) * lx, (x - 0.5) * lx) - (x - 1.0);
                 },
                 unbounded_above(),
                 [](double x) { return lgamma_at(x); },
                 0.0, 1.0, true, 1e-3, 1.0});

  cat.push_back({"gamma-theta-smallx", "eq12",
                 [](double x) { return (x - theta1_at(x)) * std::log(x) - x; },
                 [](double x) {
                   return (x - theta1_at(x)) * std::log(x) - (x - 1.0);
                 },
                 [](double x) { return lgamma_at(x); },
                 0.0, 1.0, false, 1e-3, 1.0});

  cat.push_back({"gamma-theta-large", "eq13",
                 [](double x) {
                   return kHalfLogTwoPi + (x - theta1_at(x)) * std::log(x) - x;
                 },
                 [](double x) {
                   return (x - theta1_at(x)) * std::log(x) - (x - 1.0);
                 },
                 [](double x) { return lgamma_at(x); },
                 1.0, kInf, false, 1.0, 1e3});

  cat.push_back({"identric-theta-large", "eq14",
                 [](double x) { return log_identric_bound(x, x + 1.0); },
                 unbounded_above(),
                 [](double x) { return log_identric_mean(x, x + 1.0); },
                 1.0, kInf, true, 1.0, 1e3});

  cat.push_back({"identric-theta-smallx", "eq14r",
                 unbounded_below(),
                 [](double x) { return log_identric_bound(x, 0.5 * x); },
                 [](double x) { return log_identric_mean(x, 0.5 * x); },
                 0.0, 1.0, true, 2.5e-3, 1.0});

  cat.push_back({"psi-shift-lnx", "eq16",
                 [](double x) { return 0.5 / x - 1.0 / (12.0 * x * x); },
                 [](double x) { return 0.5 / x; },
                 // psi(x+1) - ln x, with the subtraction folded into
                 // log1p(1/x) - [ln(x+1) - psi(x+1)] so it stays exact at
                 // large x where the margin is ~1/(120 x^4).
                 [](double x) { return std::log1p(1.0 / x) - lmd(x + 1.0); },
                 0.0, kInf, true, 1e-3, 1e3});

  cat.push_back({"trigamma-shift", "eq17",
                 [](double x) {
                   const double x2 = x * x;
                   return 0.5 / x2 - 1.0 / (6.0 * x2 * x);
                 },
                 [](double x) {
                   const double x2 = x * x;
                   return 0.5 / x2 - 1.0 / (6.0 * x2 * x) +
                          1.0 / (30.0 * x2 * x2 * x);
                 },
                 [](double x) {
                   return 1.0 / x -
                          polygamma(DerivOrder(1), EvalPoint(x + 1.0));
                 },
                 0.0, kInf, true, 1e-3, 1e2});

  cat.push_back({"psi-log-sandwich", "eq15",
                 [](double x) { return std::log(x) - 1.0 / x; },
                 [](double x) { return std::log(x) - 0.5 / x; },
                 [](double x) { return digamma(EvalPoint(x)); },
                 0.0, kInf, false, 1e-3, 1e3});

  cat.push_back({"trigamma-sandwich", "eq18",
                 [](double x) { return 1.0 / x + 0.5 / (x * x); },
                 [](double x) { return 1.0 / x + 1.0 / (x * x); },
                 [](double x) { return polygamma(DerivOrder(1), EvalPoint(x)); },
                 0.0, kInf, false, 1e-3, 1e3});

  cat.push_back({"lnx-psi-refined", "eq23",
                 [](double x) { return 0.5 / x; },
                 [](double x) { return 0.5 / x + 1.0 / (12.0 * x * x); },
                 [](double x) { return lmd(x); },
                 0.0, kInf, true, 1e-3, 1e3});

  cat.push_back({"theta-half-sandwich", "eq24",
                 [](double x) { return 0.5 / std::sqrt(x); },
                 [](double x) {
                   return 0.5 / std::sqrt(x) + 1.0 / (12.0 * x * std::sqrt(x));
                 },
                 [](double x) { return theta(AlphaExponent(0.5), EvalPoint(x)); },
                 0.0, kInf, true, 1e-3, 1e3});

  return cat;
}

std::vector<BoundResult> verify_bounds(const std::vector<BoundSpec>& catalog,
                                       const std::vector<double>& grid) {
  std::vector<BoundResult> results;
  results.reserve(catalog.size());
  for (const BoundSpec& spec : catalog) {
    BoundResult r;
    r.name = spec.name;
    r.anchor = spec.anchor;
    r.worst_margin = kInf;
    for (double x : grid) {
      // Membership is open-interval: the non-strict entries attain equality
      // exactly at an endpoint (x = 1), so endpoints are never probed.
      if (!(x > spec.domain_lo && x < spec.domain_hi)) {
        ++r.points_skipped;
        continue;
      }
      const double t = spec.target(x);
      const double margin = std::min(t - spec.lower(x), spec.upper(x) - t);
      if (margin < r.worst_margin) {
        r.worst_margin = margin;
        r.worst_x = x;
      }
      ++r.points_used;
    }
    r.pass = spec.strict ? (r.worst_margin > 0.0) : (r.worst_margin >= 0.0);
    if (r.points_used == 0) r.pass = false;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<BoundResult> verify_catalog(const std::vector<BoundSpec>& catalog,
                                        int points) {
  std::vector<BoundResult> results;
  results.reserve(catalog.size());
  for (const BoundSpec& spec : catalog) {
    const std::vector<BoundSpec> one{spec};
    auto r = verify_bounds(one, log_grid_interior(spec.sample_lo,
                                                  spec.sample_hi, points));
    results.push_back(std::move(r.front()));
  }
  return results;
}

}  // namespace thetamon
