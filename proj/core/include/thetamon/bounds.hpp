#ifndef THETAMON_BOUNDS_HPP
#define THETAMON_BOUNDS_HPP

#include <functional>
#include <string>
#include <vector>

#include "thetamon/certify.hpp"

namespace thetamon {

/// A named two-sided inequality  lower(x) < target(x) < upper(x)  on a domain.
/// One-sided facts use a constant -inf/+inf evaluator for the missing side;
/// the finite sides still satisfy lower(x) < upper(x) everywhere, so the
/// bound is never vacuous. Gamma-bearing entries compare in log scale.
struct BoundSpec {
  std::string name;
  std::string anchor;  // tag in the catalog notes
  Evaluator lower;
  Evaluator upper;
  Evaluator target;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  bool strict = true;  // false when the bound attains equality at an endpoint

  /// Preferred sampling range (inside the mathematical domain). Several
  /// domains are (0, inf); these give the concrete decades to probe.
  double sample_lo = 0.0;
  double sample_hi = 0.0;
};

struct BoundResult {
  std::string name;
  std::string anchor;
  bool pass = false;
  double worst_margin = 0.0;  // min over grid of min(target-lower, upper-target)
  double worst_x = 0.0;
  int points_used = 0;
  int points_skipped = 0;  // outside the spec's domain
};

/// Check every spec against the shared grid; points outside a spec's domain
/// are skipped and counted. pass == (worst margin > 0), or >= 0 for
/// non-strict specs.
std::vector<BoundResult> verify_bounds(const std::vector<BoundSpec>& catalog,
                                       const std::vector<double>& grid);

/// Check each spec on its own interior log grid of `points` samples over its
/// sampling range (so endpoint equalities of the non-strict entries are never
/// probed).
std::vector<BoundResult> verify_catalog(const std::vector<BoundSpec>& catalog,
                                        int points);

/// The house catalog of the sharp psi/Gamma inequalities this library
/// certifies. See bounds.cpp for the entry-by-entry notes.
std::vector<BoundSpec> standard_catalog();

}  // namespace thetamon

#endif  // THETAMON_BOUNDS_HPP
