#pragma once

#include <string>

#include "ricmp/step_function.hpp"

namespace ricmp {

// Interpolation-scale norm for the (L^1, L^inf) pair:
// ( int_0^cutoff [t^-theta K(t,f)]^q dt/t )^(1/q), K(t,f) = int_0^t f*.
// K is piecewise linear, so segments integrate with a fixed Gauss rule plus
// one refinement; the head and the constant-K tail are closed form. q = inf
// takes the sup with exact segment maxima.
double lions_peetre_norm(const StepFunction& f, double theta, double q, double cutoff = kInf);

// q = 1 cutoff norm, fully closed form per segment (smooth in theta, which
// the derivative identity check relies on).
double cutoff_norm_q1(const StepFunction& f, double theta, double cutoff = 0.5);

struct KCrossingReport {
  bool ok = false;       // K_f >= K_g up to t1, <= after (ties allowed)
  double t1 = 0.0;
  std::string detail;
};

// One-sided crossing of the K-functionals, exact on the breakpoint grid.
KCrossingReport k_crossing(const StepFunction& f, const StepFunction& g);

struct TeoderivadoReport {
  bool applicable = false;
  std::string failed_hypothesis;
  double t1 = 0.0;
  double norm_f_theta_p = 0.0, norm_g_theta_p = 0.0;
  double norm_f_eta_q = 0.0, norm_g_eta_q = 0.0;
  bool conclusion = false;   // ||g||_(eta,q) <= ||f||_(eta,q)
  bool inconsistent = false; // preconditions verified but conclusion failed
};

// Norm transfer along the scale: a K-crossing plus ||g||_(theta,p) <=
// ||f||_(theta,p) forces ||g||_(eta,q) <= ||f||_(eta,q) whenever
// q(1-eta) <= p(1-theta) and p <= q.
TeoderivadoReport teoderivado_check(const StepFunction& f, const StepFunction& g, double theta,
                                    double p, double eta, double q);

struct ThetaDerivativeReport {
  double analytic = 0.0;     // int_0^1/2 s^-theta ln(1/s) K(s,f) ds/s
  double finite_diff = 0.0;  // central difference of theta -> cutoff norm
  double rel_error = 0.0;
};

// d/dtheta of the q = 1 cutoff norm equals the log-kernel integral; both
// sides evaluated independently (closed forms vs central difference).
ThetaDerivativeReport theta_derivative_check(const StepFunction& f, double theta);

}  // namespace ricmp
