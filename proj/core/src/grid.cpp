#include "thetamon/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace thetamon {

namespace {

void check(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::domain_error("grid: requires 0 < lo < hi");
  if (n < 2) throw std::domain_error("grid: need at least 2 points");
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
  check(lo, hi, n);
  const double llo = std::log(lo), lhi = std::log(hi);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> log_grid_interior(double lo, double hi, int n) {
  check(lo, hi, n);
  const double llo = std::log(lo), lhi = std::log(hi);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * (i + 0.5) / n);
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (!(hi > lo)) throw std::domain_error("grid: requires lo < hi");
  if (n < 2) throw std::domain_error("grid: need at least 2 points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.front() = lo;
  g.back() = hi;
  return g;
}

int points_per_decade(double lo, double hi, int per_decade) {
  check(lo, hi, 2);
  const double decades = std::log10(hi / lo);
  const int n = static_cast<int>(std::ceil(per_decade * decades));
  return n < 2 ? 2 : n;
}

}  // namespace thetamon
