#pragma once

#include <functional>
#include <vector>

#include "ricmp/crossing.hpp"
#include "ricmp/step_function.hpp"

namespace ricmp {

struct MajorizationReport {
  bool holds = false;
  double worst_t = 0.0;  // location of maximal violation (or of the minimum margin)
  double margin = 0.0;   // min over t of int_0^t f*^p - int_0^t g*^p
};

// Hardy-Littlewood-Polya order: int_0^t f* >= int_0^t g* for all t. Both
// partial integrals are piecewise linear, so checking the union of
// rearrangement breakpoints is exact.
MajorizationReport hlp_majorizes(const StepFunction& f, const StepFunction& g,
                                 double tolerance = 1e-12);

// Executable form of the crossing-to-majorization lemma: under a one-sided
// rearrangement crossing (f* dominating near 0) and ||f||_p0 >= ||g||_p0,
// |g|^p0 is majorized by |f|^p0. A reported failure under verified
// preconditions is a bug, not a math fact.
MajorizationReport power_majorization_from_crossing(const StepFunction& f, const StepFunction& g,
                                                    double p0, double tolerance = 1e-12);

// K(t, f; L^1, L^inf) = int_0^t f*, exact and piecewise linear.
double k_functional(const StepFunction& f, double t);

// Right-hand envelope of K(t, f; L^p0, L^inf): (int_0^{t^p0} f*^p0)^(1/p0).
double k_envelope_p(const StepFunction& f, double p0, double t);

enum class EOrder {
  inf_first,   // E(t, f; L^inf, L^0) = lambda_f(t)
  zero_first,  // E(t, f; L^0, L^inf) = f*(t)
};

double e_functional(const AnyFunction& f, double t, EOrder order,
                    const Tolerance& tol = default_tolerance());

struct KaramataReport {
  bool applicable = false;   // prefix-sum hypothesis holds for all k
  std::size_t failing_k = 0; // 1-based index of the first failed prefix (if any)
  bool holds = false;        // sum Phi(x) >= sum Phi(y); meaningful when applicable
  double lhs = 0.0;
  double rhs = 0.0;
};

// Discrete Karamata inequality check. Sequences are rearranged to
// nonincreasing order and zero-padded to a common length; Phi must be
// nondecreasing and convex (spot-checked on random triples).
KaramataReport karamata_check(std::vector<double> x, std::vector<double> y,
                              const std::function<double(double)>& phi,
                              bool validate_phi = true);

}  // namespace ricmp
