#include "thetamon/certify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "thetamon/grid.hpp"
#include "thetamon/theta.hpp"

namespace thetamon {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

double pairwise_sum(const double* v, int n) {
  if (n <= 4) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const int half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

struct AltDiff {
  double value;
  double max_abs_f;  // over the stencil, for the slack formula
};

AltDiff alt_diff(const Evaluator& f, int n, double h, double x) {
  // terms[j] = (-1)^(n+j) C(n,j) f(x + (n-j) h)
  double terms[k_max + 1];
  double binom = 1.0;
  double max_abs = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) binom = binom * (n - j + 1) / j;
    const double fv = f(x + (n - j) * h);
    if (!std::isfinite(fv)) return {fv, fv};
    max_abs = std::max(max_abs, std::fabs(fv));
    const double sign = ((n + j) % 2 == 0) ? 1.0 : -1.0;
    terms[j] = sign * binom * fv;
  }
  return {pairwise_sum(terms, n + 1), max_abs};
}

CMReport run_sweep(const Evaluator& f, std::string_view function_id,
                   const std::vector<double>& grid, int min_order,
                   int max_order, const std::vector<double>& steps,
                   bool rethrow_nonpositive) {
  if (max_order < 0 || max_order > k_max)
    throw std::out_of_range("certify: max_order must be in [0, k_max]");
  for (double x : grid)
    if (!(x > 0.0)) throw std::domain_error("certify: grid points must be > 0");
  for (double h : steps)
    if (!(h > 0.0)) throw std::domain_error("certify: steps must be > 0");

  constexpr double eps = std::numeric_limits<double>::epsilon();

  CMReport rep;
  rep.function_id = std::string(function_id);
  rep.grid = grid;
  rep.max_order = max_order;
  rep.steps = steps;
  rep.min_signed = std::numeric_limits<double>::infinity();

  for (int n = min_order; n <= max_order; ++n) {
    for (double h : steps) {
      for (double x : grid) {
        AltDiff d;
        try {
          d = alt_diff(f, n, h, x);
        } catch (const NonPositiveValueError&) {
          if (rethrow_nonpositive) throw;
          ++rep.failed_points;
          continue;
        } catch (const std::exception&) {
          ++rep.failed_points;
          continue;
        }
        if (!std::isfinite(d.value)) {
          ++rep.failed_points;
          continue;
        }
        const double slack = 64.0 * eps * factorial(n) * d.max_abs_f;
        if (d.value < rep.min_signed) {
          rep.min_signed = d.value;
          rep.min_location = {n, h, x, d.value};
          rep.slack_at_min = slack;
        }
        if (d.value < -slack) rep.witnesses.push_back({n, h, x, d.value});
      }
    }
  }
  rep.verdict = rep.witnesses.empty() ? CMReport::Verdict::consistent_cm
                                      : CMReport::Verdict::violation;
  return rep;
}

}  // namespace

double alternating_difference(const Evaluator& f, int n, double h, double x) {
  if (n < 0) throw std::out_of_range("alternating_difference: n must be >= 0");
  if (n > k_max)
    throw std::out_of_range("alternating_difference: n must be <= k_max");
  if (!(h > 0.0)) throw std::domain_error("alternating_difference: h must be > 0");
  if (!(x > 0.0)) throw std::domain_error("alternating_difference: x must be > 0");
  return alt_diff(f, n, h, x).value;
}

std::string to_string(CMReport::Verdict v) {
  return v == CMReport::Verdict::consistent_cm ? "CONSISTENT_CM" : "VIOLATION";
}

CMReport certify_cm(const Evaluator& f, std::string_view function_id,
                    const std::vector<double>& grid, int max_order,
                    const std::vector<double>& steps) {
  return run_sweep(f, function_id, grid, 0, max_order, steps,
                   /*rethrow_nonpositive=*/false);
}

CMReport certify_lcm(const Evaluator& g, std::string_view function_id,
                     const std::vector<double>& grid, int max_order) {
  Evaluator log_g = [&g](double x) {
    const double v = g(x);
    if (!(v > 0.0)) throw NonPositiveValueError(x, v);
    return std::log(v);
  };
  return run_sweep(log_g, std::string("log[") + std::string(function_id) + "]",
                   grid, 1, max_order, default_cm_steps(),
                   /*rethrow_nonpositive=*/true);
}

CMReport certify_cm_analytic(AlphaExponent alpha,
                             const std::vector<double>& grid, int max_order) {
  if (max_order < 0 || max_order > 8)
    throw std::out_of_range("certify_cm_analytic: max_order must be in [0, 8]");
  for (double x : grid)
    if (!(x > 0.0))
      throw std::domain_error("certify_cm_analytic: grid points must be > 0");

  CMReport rep;
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta[alpha=%.17g]", alpha.value());
  rep.function_id = buf;
  rep.grid = grid;
  rep.max_order = max_order;
  rep.min_signed = std::numeric_limits<double>::infinity();

  for (int i = 0; i <= max_order; ++i) {
    for (double x : grid) {
      detail::DerivTerms t;
      try {
        t = detail::theta_alpha_deriv_terms(alpha.value(), i, x);
      } catch (const std::exception&) {
        ++rep.failed_points;
        continue;
      }
      if (!std::isfinite(t.value)) {
        ++rep.failed_points;
        continue;
      }
      const double signed_value = (i % 2 == 0) ? t.value : -t.value;
      const double slack = 1e-10 * t.abs_sum;
      if (signed_value < rep.min_signed) {
        rep.min_signed = signed_value;
        rep.min_location = {i, 0.0, x, signed_value};
        rep.slack_at_min = slack;
      }
      if (signed_value < -slack)
        rep.witnesses.push_back({i, 0.0, x, signed_value});
    }
  }
  rep.verdict = rep.witnesses.empty() ? CMReport::Verdict::consistent_cm
                                      : CMReport::Verdict::violation;
  return rep;
}

std::string report_csv(const CMReport& rep) {
  auto row = [&rep](const CMReport::Witness& w) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%.17g,%.17g,%s\n",
                  rep.function_id.c_str(), w.n, w.h, w.x, w.value,
                  to_string(rep.verdict).c_str());
    return std::string(buf);
  };
  std::string out = "function_id,n,h,x,value,verdict\n";
  if (rep.verdict == CMReport::Verdict::violation) {
    for (const auto& w : rep.witnesses) out += row(w);
  } else {
    out += row(rep.min_location);
  }
  return out;
}

std::vector<double> default_cm_grid() { return log_grid(1e-3, 1e3, 60); }

std::vector<double> default_cm_steps() { return {0.25, 1.0}; }

}  // namespace thetamon
