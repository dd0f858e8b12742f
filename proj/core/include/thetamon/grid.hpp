#ifndef THETAMON_GRID_HPP
#define THETAMON_GRID_HPP

#include <vector>

namespace thetamon {

/// n log-spaced points on [lo, hi], endpoints included. Requires 0 < lo < hi, n >= 2.
std::vector<double> log_grid(double lo, double hi, int n);

/// n log-spaced midpoint samples strictly inside (lo, hi). Useful when a bound
/// attains equality at an endpoint.
std::vector<double> log_grid_interior(double lo, double hi, int n);

/// n evenly spaced points on [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, int n);

/// Point count for the house convention: per_decade log-spaced points per
/// decade of range, at least two.
int points_per_decade(double lo, double hi, int per_decade = 200);

}  // namespace thetamon

#endif  // THETAMON_GRID_HPP
