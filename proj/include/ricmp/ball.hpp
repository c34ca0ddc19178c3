#pragma once

#include "ricmp/norms.hpp"
#include "ricmp/special.hpp"

namespace ricmp {

struct BallResult {
  double q = 0.0, alpha = 0.0;
  double lhs = 0.0, rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool holds = false;
};

// Left side of the sinc moment inequality:
// int_0^inf ((sin t / t)*)^q t^(alpha-1) dt, q >= 2, 0 < alpha <= 1.
// Computed on the distribution side with graded quadrature near tau = 0;
// relative accuracy ~1e-6.
double ball_lhs(double q, double alpha, const Tolerance& tol = default_tolerance());

// Right side: (1/2) q^(-alpha/2) (2 pi)^(alpha/2) Gamma(alpha/2).
double ball_rhs(double q, double alpha);

BallResult ball_check(double q, double alpha, const Tolerance& tol = default_tolerance());

// The companion comparison in the (p,q) parametrization: the rearranged
// scaled sinc against exp(-pi q t^2/2), alpha = q/p, 2 <= q <= p.
BallResult ball1_check(double p, double q, const Tolerance& tol = default_tolerance());

struct CktConstants {
  double c2 = 0.0;     // 2^(1-a/2) / ((1-a)(2-a))
  double cinf = 0.0;   // (3/2)^(a/2) Gamma((1-a)/2) / sqrt(pi)
  double c_alpha = 0.0;  // max of the two
};

CktConstants ckt_constants(double alpha);  // 0 < alpha < 1

// The unique alpha where c2 = cinf, by bisection on (0.5, 0.95) to 1e-10.
double ckt_alpha0();

// Right side of the companion moment bound:
// 2^(alpha-1) q^(-alpha/2) sqrt(pi) Gamma(alpha/2)/Gamma((1-alpha)/2) C_alpha.
double ball3_rhs(double q, double alpha);

struct RatioReport {
  double alpha = 0.0;
  double ratio = 0.0;        // ball_rhs / ball3_rhs (q cancels)
  double closed_form = 0.0;  // regime-dependent closed form of the same ratio
  bool below_alpha0 = false;
};

RatioReport ratio_analysis(double alpha);

// --- exact 2-convex verification -------------------------------------------

struct ExactConvexSpace {
  enum class Kind { lorentz, orlicz };
  Kind kind = Kind::lorentz;
  double p = 2.0, q = 2.0;  // lorentz: needs p >= q >= 2
  OrliczSpec orlicz = OrliczSpec::power(2.0);

  static ExactConvexSpace lorentz_space(double p, double q);
  static ExactConvexSpace orlicz_space(OrliczSpec m);  // M(sqrt u) must be convex
};

struct TeoexactReport {
  double norm_sinc = 0.0;   // || sin(pi t)/(pi t) ||_X on the half line
  double norm_gauss = 0.0;  // || exp(-pi t^2/2) ||_X
  double margin = 0.0;      // gauss - sinc
  bool holds = false;
};

// Verifies the rearranged sinc norm does not exceed the Gaussian norm in the
// given exact 2-convex space; throws precondition_error when the space fails
// the 2-convexity requirement.
TeoexactReport teoexact_check(const ExactConvexSpace& space,
                              const Tolerance& tol = default_tolerance());

}  // namespace ricmp
