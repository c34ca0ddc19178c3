#pragma once

#include <vector>

#include "ricmp/function.hpp"

namespace ricmp {

enum class CrossingSide { distribution, rearrangement };

// Reduced sign structure of f-g (rearrangement side) or lambda_f - lambda_g
// (distribution side) over the scan grid, ties ignored.
enum class SignPattern {
  all_zero,       // identical on the whole grid
  nonnegative,    // >= 0 everywhere, somewhere > 0
  nonpositive,
  plus_to_minus,  // exactly one strict sign change, + first
  minus_to_plus,
  multiple,       // more than one strict sign change
};

struct GridConfig {
  double lo = 1e-6;
  double hi = 1e6;
  int points_per_decade = 64;
  int refine_iters = 80;  // bisection steps when refining a sign change
};

struct CrossingReport {
  CrossingSide side = CrossingSide::distribution;
  SignPattern pattern = SignPattern::all_zero;
  bool single_crossing = false;  // exactly one strict sign change on the grid
  bool degenerate = false;       // difference identically zero on the grid
  double location = 0.0;         // tau0 / t0 (refined); boundary of the first
                                 // strict sign for pure-dominance patterns
  double residual = 0.0;         // max |difference| at grid points that violate
                                 // the best single-crossing explanation
  int first_sign = 0;            // sign of the first nonzero difference

  // Whether the grid signs are consistent with the one-sided crossing pattern
  // the NP condition demands on this side (ties and pure dominance allowed):
  // rearrangement side f* >= g* then <=, distribution side lambda_f <=
  // lambda_g then >=.
  bool np_pattern_ok = false;
};

CrossingReport crossing_profile(const AnyFunction& f, const AnyFunction& g, CrossingSide side,
                                const GridConfig& grid = {},
                                const Tolerance& tol = default_tolerance());

// Scan grid used by crossing_profile: geometric with the configured density,
// augmented (for exact inputs) with breakpoints/value levels of both functions
// and interval midpoints so that no constant piece of the difference is
// skipped.
std::vector<double> crossing_grid(const AnyFunction& f, const AnyFunction& g, CrossingSide side,
                                  const GridConfig& grid);

}  // namespace ricmp
