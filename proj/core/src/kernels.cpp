#include "thetamon/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace thetamon {

namespace {

constexpr double kSeriesCutoff = kernel_series_cutoff;

// Taylor pieces around t = 0. Coefficients are -B_{2n}/(2n)! from the
// generating function t/(e^t - 1); with the series kept through t^9 (h) and
// t^8 (h'), the first omitted term at the cutoff is below 1e-20.
double h_series(double t) {
  const double t2 = t * t;
  return 0.5 +
         t * (-1.0 / 12.0 +
              t2 * (1.0 / 720.0 +
                    t2 * (-1.0 / 30240.0 +
                          t2 * (1.0 / 1209600.0 +
                                t2 * (-1.0 / 47900160.0)))));
}

double h_prime_series(double t) {
  const double t2 = t * t;
  return -1.0 / 12.0 +
         t2 * (1.0 / 240.0 +
               t2 * (-1.0 / 6048.0 +
                     t2 * (1.0 / 172800.0 + t2 * (-1.0 / 5322240.0))));
}

// cosh t - 1 - t^2/2. All series terms are positive, so the sum is stable for
// any t; below |t| = 1 the direct form loses most of its digits.
double cosh_remainder(double t) {
  const double t2 = t * t;
  if (std::fabs(t) < 1.0) {
    double term = t2 * t2 / 24.0;
    double sum = term;
    int n = 2;
    while (term > sum * 1e-18) {
      term *= t2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
      sum += term;
      ++n;
    }
    return sum;
  }
  return std::cosh(t) - 1.0 - 0.5 * t2;
}

// rho'(t) for t > 0 via the factored form. Past t = 35 the subtracted term is
// below 1e-15 of 1/t^2 and the direct difference is cheaper and exact enough.
double rho_prime_positive(double t) {
  if (t >= 35.0) {
    const double q = std::exp(-t);
    const double om = -std::expm1(-t);  // 1 - e^-t
    return 1.0 / (t * t) - q / (om * om);
  }
  const double om = -std::expm1(-t);
  return 2.0 * std::exp(-t) * cosh_remainder(t) / (t * t * om * om);
}

}  // namespace

KernelId KernelId::polygamma_kernel(int order) {
  if (order < 1 || order > k_max)
    throw std::out_of_range("KernelId: polygamma kernel order must be in [1, " +
                            std::to_string(k_max) + "]");
  KernelId id{Tag::polygamma};
  id.order = order;
  return id;
}

KernelId KernelId::log_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("KernelId: log_ratio requires a > 0 and b > 0");
  KernelId id{Tag::log_ratio};
  id.a = a;
  id.b = b;
  return id;
}

std::string KernelId::name() const {
  switch (tag) {
    case Tag::binet_h:
      return "binet_h";
    case Tag::binet_h_prime:
      return "binet_h_prime";
    case Tag::rho:
      return "rho";
    case Tag::rho_prime:
      return "rho_prime";
    case Tag::polygamma:
      return "polygamma_kernel(" + std::to_string(order) + ")";
    case Tag::log_ratio:
      return "log_ratio(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "unknown";
}

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw std::domain_error("QuadratureConfig: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureConfig: rel_tol must be > 0");
  if (!(small_t_cutoff > 0.0 && small_t_cutoff < 1.0))
    throw std::domain_error("QuadratureConfig: small_t_cutoff must be in (0, 1)");
  if (max_subdivisions < 0)
    throw std::domain_error("QuadratureConfig: max_subdivisions must be >= 0");
}

double kernel_h(double t) {
  if (std::isnan(t)) throw std::domain_error("kernel_h: t must not be NaN");
  if (std::fabs(t) < kSeriesCutoff) return h_series(t);
  return 1.0 / t - 1.0 / std::expm1(t);
}

double kernel_h_prime(double t) {
  if (std::isnan(t)) throw std::domain_error("kernel_h_prime: t must not be NaN");
  const double at = std::fabs(t);  // h' is even: h(-t) = 1 - h(t)
  if (at < kSeriesCutoff) return h_prime_series(t);
  return -rho_prime_positive(at);
}

double kernel_rho(double t) {
  if (!(t >= 0.0)) throw std::domain_error("kernel_rho: t must be >= 0");
  if (t < kSeriesCutoff) return 1.0 - h_series(t);
  return 1.0 / -std::expm1(-t) - 1.0 / t;
}

double kernel_rho_prime(double t) {
  if (!(t >= 0.0)) throw std::domain_error("kernel_rho_prime: t must be >= 0");
  if (t < kSeriesCutoff) return -h_prime_series(t);
  return rho_prime_positive(t);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half), as in QUADPACK's dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

double integrand(const KernelId& id, double x, double t) {
  switch (id.tag) {
    case KernelId::Tag::binet_h:
      return kernel_h(t) * std::exp(-x * t);
    case KernelId::Tag::binet_h_prime:
      return kernel_h_prime(t) * std::exp(-x * t);
    case KernelId::Tag::rho:
      return kernel_rho(t) * std::exp(-x * t);
    case KernelId::Tag::rho_prime:
      return kernel_rho_prime(t) * std::exp(-x * t);
    case KernelId::Tag::polygamma:
      // t^i / (1 - e^-t) * e^-xt; finite at t -> 0 for i >= 1.
      return std::pow(t, id.order) / -std::expm1(-t) * std::exp(-x * t);
    case KernelId::Tag::log_ratio:
      // e^-at (1 - e^-(b-a)t)/t, cancellation-free for either sign of b - a.
      // Carries its own decay; the e^-xt weight does not apply.
      return std::exp(-id.a * t) * -std::expm1(-(id.b - id.a) * t) / t;
  }
  return 0.0;
}

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const KernelId& id, double x, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f0 = integrand(id, x, mid);
  double k15 = kWgk[7] * f0;
  double g7 = kWg[3] * f0;
  for (int i = 0; i < 7; ++i) {
    const double dt = half * kXgk[i];
    const double fi = integrand(id, x, mid + dt) + integrand(id, x, mid - dt);
    k15 += kWgk[i] * fi;
    if (i % 2 == 1) g7 += kWg[i / 2] * fi;
  }
  k15 *= half;
  g7 *= half;
  return {k15, std::fabs(k15 - g7)};
}

// Documented tail bounds: |integral_T^inf kernel(t) e^{-xt} dt| <= bound(T).
// Bounded kernels use a constant envelope M (|h| <= 1/2 and |rho| <= 1 on
// (0, inf), |h'| = |rho'| <= 1/12), giving M e^{-xT} / x. The polygamma
// kernel uses t^i/(1-e^-t) <= t^i/(1-e^-1) for t >= 1 together with
// integral_T^inf t^i e^{-xt} dt <= 2 T^i e^{-xT}/x once xT >= 2i. The
// log-ratio kernel is bounded by e^{-min(a,b) t}/t.
double tail_bound(const KernelId& id, double x, double T) {
  switch (id.tag) {
    case KernelId::Tag::binet_h:
      return 0.5 * std::exp(-x * T) / x;
    case KernelId::Tag::binet_h_prime:
    case KernelId::Tag::rho_prime:
      return (1.0 / 12.0) * std::exp(-x * T) / x;
    case KernelId::Tag::rho:
      return std::exp(-x * T) / x;
    case KernelId::Tag::polygamma: {
      if (x * T < 2.0 * id.order || T < 1.0)
        return std::numeric_limits<double>::infinity();
      const double c = 1.0 / -std::expm1(-1.0);  // 1/(1 - e^-1)
      return 2.0 * c * std::pow(T, id.order) * std::exp(-x * T) / x;
    }
    case KernelId::Tag::log_ratio: {
      const double m = std::min(id.a, id.b);
      return std::exp(-m * T) / (m * T);
    }
  }
  return 0.0;
}

double choose_truncation(const KernelId& id, double x, const QuadratureConfig& cfg) {
  const double target = cfg.abs_tol / 10.0;
  double T = std::max(2.0 * cfg.small_t_cutoff, 1.0 / x);
  for (int i = 0; i < 2048 && tail_bound(id, x, T) > target; ++i) T *= 2.0;
  return T;
}

}  // namespace

double laplace_integral(const KernelId& id, EvalPoint xp,
                        const QuadratureConfig& cfg) {
  cfg.validate();
  const double x = xp.value();
  const double T = choose_truncation(id, x, cfg);

  // Seed panels: the small-t region boundary, plus edges doubling from the
  // decay scale 1/x, so no panel spans more than a couple of e-folds of the
  // exponential before adaptive refinement starts.
  const double t0 = cfg.small_t_cutoff;
  const double decay = (id.tag == KernelId::Tag::log_ratio)
                           ? std::min(id.a, id.b)
                           : x;
  std::vector<double> edges{0.0, T};
  if (t0 < T) edges.push_back(t0);
  for (double u = 1.0 / decay; u < T; u *= 2.0)
    if (u > 0.0) edges.push_back(u);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  struct Panel {
    double lo, hi, value, error;
  };
  std::vector<Panel> panels;
  panels.reserve(edges.size() + static_cast<size_t>(cfg.max_subdivisions));
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    const PanelResult r = gk15(id, x, edges[i], edges[i + 1]);
    panels.push_back({edges[i], edges[i + 1], r.value, r.error});
  }

  int splits = 0;
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)))
      return total;

    // Split the worst panel; ties go to the leftmost for determinism.
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;

    if (splits >= cfg.max_subdivisions)
      throw NonConvergenceError(id.name(), x, panels[worst].lo,
                                panels[worst].hi, err);

    const Panel p = panels[worst];
    const double mid = 0.5 * (p.lo + p.hi);
    const PanelResult left = gk15(id, x, p.lo, mid);
    const PanelResult right = gk15(id, x, mid, p.hi);
    panels[worst] = {p.lo, mid, left.value, left.error};
    panels.insert(panels.begin() + static_cast<long>(worst) + 1,
                  {mid, p.hi, right.value, right.error});
    ++splits;
  }
}

double theta1_via_kernel(EvalPoint x, const QuadratureConfig& cfg) {
  return 0.5 + laplace_integral(KernelId::rho_prime(), x, cfg);
}

}  // namespace thetamon
