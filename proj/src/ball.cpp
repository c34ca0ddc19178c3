#include "ricmp/ball.hpp"

#include <cmath>

#include "ricmp/sampler.hpp"

namespace ricmp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double gauss_halfline_moment(double q, double alpha) {
  // int_0^inf exp(-pi q t^2/2) t^(alpha-1) dt = (1/2) (pi q/2)^(-alpha/2) Gamma(alpha/2).
  return 0.5 * std::pow(kPi * q / 2.0, -0.5 * alpha) * gamma_fn(0.5 * alpha);
}

}  // namespace

double ball_lhs(double q, double alpha, const Tolerance& tol) {
  require(q >= 2.0, "ball lhs: q must be >= 2");
  require(alpha > 0.0 && alpha <= 1.0, "ball lhs: alpha must lie in (0,1]");
  static const AnyFunction sinc = make_sinc();
  return rearranged_moment_dist(sinc, q, alpha, tol);
}

double ball_rhs(double q, double alpha) {
  require(q >= 2.0, "ball rhs: q must be >= 2");
  require(alpha > 0.0 && alpha <= 1.0, "ball rhs: alpha must lie in (0,1]");
  return 0.5 * std::pow(q, -0.5 * alpha) * std::pow(2.0 * kPi, 0.5 * alpha) *
         gamma_fn(0.5 * alpha);
}

BallResult ball_check(double q, double alpha, const Tolerance& tol) {
  BallResult r;
  r.q = q;
  r.alpha = alpha;
  r.lhs = ball_lhs(q, alpha, tol);
  r.rhs = ball_rhs(q, alpha);
  r.margin = r.rhs - r.lhs;
  r.holds = r.margin >= -tol.general;
  return r;
}

BallResult ball1_check(double p, double q, const Tolerance& tol) {
  require(q >= 2.0 && p >= q, "ball1: need 2 <= q <= p");
  const double alpha = q / p;
  BallResult r;
  r.q = q;
  r.alpha = alpha;
  static const AnyFunction sincpi = make_sincpi();
  r.lhs = rearranged_moment_dist(sincpi, q, alpha, tol);
  r.rhs = gauss_halfline_moment(q, alpha);
  r.margin = r.rhs - r.lhs;
  r.holds = r.margin >= -tol.general;
  return r;
}

CktConstants ckt_constants(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "ckt constants: alpha must lie in (0,1)");
  CktConstants c;
  c.c2 = std::pow(2.0, 1.0 - 0.5 * alpha) / ((1.0 - alpha) * (2.0 - alpha));
  c.cinf = std::pow(1.5, 0.5 * alpha) * gamma_fn(0.5 * (1.0 - alpha)) / std::sqrt(kPi);
  c.c_alpha = std::max(c.c2, c.cinf);
  return c;
}

double ckt_alpha0() {
  double lo = 0.5, hi = 0.95;
  auto d = [](double a) {
    const CktConstants c = ckt_constants(a);
    return c.c2 - c.cinf;
  };
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((d(mid) < 0.0) == (d(lo) < 0.0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ball3_rhs(double q, double alpha) {
  require(q >= 2.0, "ball3 rhs: q must be >= 2");
  require(alpha > 0.0 && alpha < 1.0, "ball3 rhs: alpha must lie in (0,1)");
  const CktConstants c = ckt_constants(alpha);
  return std::pow(2.0, alpha - 1.0) * std::pow(q, -0.5 * alpha) * std::sqrt(kPi) *
         gamma_fn(0.5 * alpha) / gamma_fn(0.5 * (1.0 - alpha)) * c.c_alpha;
}

RatioReport ratio_analysis(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "ratio analysis: alpha must lie in (0,1)");
  RatioReport r;
  r.alpha = alpha;
  r.ratio = ball_rhs(2.0, alpha) / ball3_rhs(2.0, alpha);  // q cancels
  r.below_alpha0 = alpha < ckt_alpha0();
  if (r.below_alpha0) {
    r.closed_form = std::pow(kPi / 3.0, 0.5 * alpha);
  } else {
    r.closed_form = (1.0 - alpha) * (2.0 - alpha) * gamma_fn(0.5 * (1.0 - alpha)) /
                    (2.0 * std::pow(kPi, 0.5 * (1.0 - alpha)));
  }
  return r;
}

// --- exact 2-convex verification ------------------------------------------------

ExactConvexSpace ExactConvexSpace::lorentz_space(double p, double q) {
  ExactConvexSpace s;
  s.kind = Kind::lorentz;
  s.p = p;
  s.q = q;
  return s;
}

ExactConvexSpace ExactConvexSpace::orlicz_space(OrliczSpec m) {
  ExactConvexSpace s;
  s.kind = Kind::orlicz;
  s.orlicz = std::move(m);
  return s;
}

TeoexactReport teoexact_check(const ExactConvexSpace& space, const Tolerance& tol) {
  TeoexactReport rep;
  static const AnyFunction sincpi = make_sincpi();
  static const AnyFunction gauss = make_gauss();
  if (space.kind == ExactConvexSpace::Kind::lorentz) {
    // L(p,q) is exactly 2-convex precisely when p >= q >= 2.
    if (!(space.p >= space.q && space.q >= 2.0))
      throw precondition_error("exact 2-convexity: L(p,q) needs p >= q >= 2");
    const double gamma = space.q / space.p;
    rep.norm_sinc =
        std::pow(gamma * rearranged_moment_dist(sincpi, space.q, gamma, tol), 1.0 / space.q);
    rep.norm_gauss = std::pow(gamma * gauss_halfline_moment(space.q, gamma), 1.0 / space.q);
  } else {
    // Luxemburg-normed Orlicz spaces are exactly 2-convex iff M(sqrt(u)) is
    // convex; spot-check on a geometric grid.
    auto msqrt = [&](double u) { return space.orlicz.M(std::sqrt(u)); };
    for (double u = 1e-4; u <= 1e4; u *= 2.0) {
      const double a = 0.5 * u, b = 2.0 * u;
      const double lam = (b - u) / (b - a);
      if (msqrt(u) > lam * msqrt(a) + (1.0 - lam) * msqrt(b) + 1e-10 * (1.0 + msqrt(b)))
        throw precondition_error("exact 2-convexity: M(sqrt(u)) must be convex");
    }
    rep.norm_sinc = luxemburg_norm(sincpi, space.orlicz, tol);
    rep.norm_gauss = luxemburg_norm(gauss, space.orlicz, tol);
  }
  rep.margin = rep.norm_gauss - rep.norm_sinc;
  rep.holds = rep.margin >= -tol.general;
  return rep;
}

}  // namespace ricmp
