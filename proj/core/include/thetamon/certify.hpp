#ifndef THETAMON_CERTIFY_HPP
#define THETAMON_CERTIFY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "thetamon/types.hpp"

namespace thetamon {

using Evaluator = std::function<double(double)>;

/// (-1)^n Delta_h^n f(x) = (-1)^n sum_j (-1)^j C(n,j) f(x + (n-j) h), summed
/// pairwise. Nonnegative for every (n, h, x) when f is completely monotonic.
double alternating_difference(const Evaluator& f, int n, double h, double x);

/// Outcome of a complete-monotonicity sweep.
struct CMReport {
  enum class Verdict { consistent_cm, violation };

  struct Witness {
    int n;
    double h;  // 0 for the analytic (derivative-based) sweep
    double x;
    double value;
  };

  std::string function_id;
  std::vector<double> grid;
  int max_order = 0;
  std::vector<double> steps;

  /// Minimum signed value over the sweep, its location, and the slack that
  /// applied there. verdict == violation iff some value fell below -slack at
  /// its own (n, h, x); every witness is reproducible by re-running
  /// alternating_difference at the recorded point.
  double min_signed = 0.0;
  Witness min_location{};
  double slack_at_min = 0.0;
  Verdict verdict = Verdict::consistent_cm;
  std::vector<Witness> witnesses;

  /// Evaluator failures (exceptions or non-finite values), excluded and counted.
  long long failed_points = 0;
};

std::string to_string(CMReport::Verdict v);

/// Sweep (-1)^n Delta_h^n f over the grid for n = 0..max_order and each step.
/// A point is flagged when its value drops below
///   -slack,  slack = 64 * eps * n! * max|f over the stencil|,
/// which covers the 2^n * eps binomial cancellation with n!-sized headroom
/// for step scaling.
CMReport certify_cm(const Evaluator& f, std::string_view function_id,
                    const std::vector<double>& grid, int max_order,
                    const std::vector<double>& steps);

/// Same report, but from the closed-form derivatives of theta_alpha: checks
/// (-1)^i theta_alpha^(i)(x) >= -slack with slack = 1e-10 * (sum of absolute
/// term magnitudes), absorbing the 1e-11 relative-error contract of the
/// polygammas with headroom. max_order <= 8.
CMReport certify_cm_analytic(AlphaExponent alpha,
                             const std::vector<double>& grid, int max_order);

/// Logarithmic CM sweep: alternating differences of ln(g) for orders
/// 1..max_order (order 0 is excluded by the definition). Throws
/// NonPositiveValueError as soon as g(x) <= 0 is met.
CMReport certify_lcm(const Evaluator& g, std::string_view function_id,
                     const std::vector<double>& grid, int max_order);

/// CSV rows  function_id,n,h,x,value,verdict  (header included): the witness
/// rows for a violation, otherwise the single min-signed row. 17 significant
/// digits, byte-stable across runs.
std::string report_csv(const CMReport& report);

/// House defaults: 60 log-spaced points on [1e-3, 1e3], steps {0.25, 1.0},
/// max order 10.
std::vector<double> default_cm_grid();
std::vector<double> default_cm_steps();
inline constexpr int default_cm_max_order = 10;

}  // namespace thetamon

#endif  // THETAMON_CERTIFY_HPP
