#pragma once

#include <string>
#include <vector>

#include "ricmp/crossing.hpp"
#include "ricmp/norms.hpp"

namespace ricmp {

struct RegionQuery {
  double p0 = 0.0, q0 = 0.0, p = 0.0, q = 0.0;
};

// Sharp comparison region: {p >= p0, q >= q0, q/p <= q0/p0}.
bool in_region_delta(const RegionQuery& rq);
// Mirror region for the discrete/operator order: {p <= p0, q <= q0, q/p >= q0/p0}.
bool in_region_delta_tilde(const RegionQuery& rq);

// Default lattice for region sweeps; covers every strict/boundary combination
// of the three defining inequalities.
const std::vector<double>& region_lattice();

enum class ComparisonCriterion {
  cor1b_a,      // q > q0, q/p = q0/p0
  cor1b_b,      // q = q0, p > p0
  cor1ab_chain, // interior of the region via the two-step chain
  prop1_tail,   // weakened tail condition, finite supports
  ideal_delta,       // operator order, Delta direction
  ideal_delta_tilde, // operator order, Delta~ direction
  inapplicable,
};

const char* to_string(ComparisonCriterion c);

struct ComparisonVerdict {
  ComparisonCriterion criterion = ComparisonCriterion::inapplicable;
  RegionQuery query;
  bool applicable = false;
  double norm_f_p0q0 = 0.0, norm_g_p0q0 = 0.0;
  double norm_f_pq = 0.0, norm_g_pq = 0.0;
  // The asserted conclusion ||g||_(p,q) <= ||f||_(p,q), decided by direct norm
  // evaluation (never by the criterion alone).
  bool conclusion = false;
  // Criterion applied but the evaluated norms disagree; the criteria are
  // theorems, so this flags a numerical or logic bug rather than a math fact.
  bool inconsistent = false;
  std::string diagnostics;
};

struct NpCompareOptions {
  GridConfig crossing{};
  double hypothesis_slack = 1e-9;  // relative slack on the (p0,q0) hypothesis
};

// Comparison of ||g||_(p,q) vs ||f||_(p,q) under the one-crossing hypothesis
// on distribution functions and the (p0,q0) integral inequality. Inside the
// sharp region the conclusion is asserted and numerically confirmed; outside,
// the verdict is inapplicable. Falls back to the finite-support tail
// criterion when the crossing hypothesis fails but the tail condition holds.
ComparisonVerdict np_compare(const AnyFunction& f, const AnyFunction& g, const RegionQuery& rq,
                             const NpCompareOptions& opt = {},
                             const Tolerance& tol = default_tolerance());

struct TailConditionReport {
  bool holds = false;
  double tau1 = 0.0;        // T <= 0 below, >= 0 above (when holds)
  double max_value = 0.0;   // extremes of T over the scan, for diagnostics
  double min_value = 0.0;
};

// T(tau) = int_tau^inf (lambda_f^(q0/p0) - lambda_g^(q0/p0)); exact for
// finite-support step inputs, piecewise linear in tau.
TailConditionReport tail_condition(const StepFunction& f, const StepFunction& g, double p0,
                                   double q0);

struct EventualDominanceReport {
  double p_star = kInf;   // smallest scanned p where the difference turns and
                          // stays positive over the horizon; an estimate only
  double scan_lo = 0.0, scan_hi = 0.0;
  bool found = false;
};

// Scans p upward over a geometric grid and reports where
// int (f*^p - g*^p) becomes and stays positive. Requires f*(t0) > g*(t0) and
// f* >= g* on (0, t0). No threshold exponent is claimed, only an estimate.
EventualDominanceReport eventual_dominance(const AnyFunction& f, const AnyFunction& g, double t0,
                                           const Tolerance& tol = default_tolerance());

// --- class-X probe ----------------------------------------------------------

enum class SpaceKind { lambda_phi, marcinkiewicz, orlicz };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::lambda_phi;
  ConcaveWeight phi = ConcaveWeight::power(1.0);
  double r = 1.0;                 // Lambda_r(phi)
  OrliczSpec orlicz = OrliczSpec::power(1.0);
  MarcinkiewiczConvention convention = MarcinkiewiczConvention::dual;

  static SpaceSpec lambda(ConcaveWeight w, double r);
  static SpaceSpec marcinkiewicz_space(ConcaveWeight w,
                                       MarcinkiewiczConvention conv = MarcinkiewiczConvention::dual);
  static SpaceSpec orlicz_space(OrliczSpec m);
};

double space_norm(const SpaceSpec& space, const AnyFunction& f,
                  const Tolerance& tol = default_tolerance());

struct ProbeReport {
  bool fired = false;            // some truncation reverses the ordering
  double first_violation_s = 0.0;
  double norm_f_trunc = 0.0, norm_g_trunc = 0.0;  // at the first violation
  double norm_f = 0.0, norm_g = 0.0;              // full norms
  std::vector<double> violations;                 // all violating s on the grid
};

// Checks ||f* chi_(0,s)||_X >= ||g* chi_(0,s)||_X over an s-grid for an NP
// pair with ||f||_X >= ||g||_X. A violation certifies that X fails the
// truncation-stability property.
ProbeReport class_X_probe(const SpaceSpec& space, const AnyFunction& f, const AnyFunction& g,
                          std::vector<double> s_grid = {},
                          const Tolerance& tol = default_tolerance());

// Truncated norms ||f* chi_(0,s)||_X and ||g* chi_(0,s)||_X at a single s.
std::pair<double, double> probe_truncated_norms(const SpaceSpec& space, const AnyFunction& f,
                                                const AnyFunction& g, double s,
                                                const Tolerance& tol = default_tolerance());

}  // namespace ricmp
