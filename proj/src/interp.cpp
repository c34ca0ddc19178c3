#include "ricmp/interp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ricmp/quadrature.hpp"

namespace ricmp {
namespace {

// Linear segments of K(t) = int_0^t f*: on (lo, hi], K(t) = c + m t.
struct KSegment {
  double lo, hi, c, m;
};

std::vector<KSegment> k_segments(const StepFunction& f) {
  const StepFunction g = f.rearranged();
  std::vector<KSegment> segs;
  double prev = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double v = g.values()[i];
    segs.push_back({prev, g.ends()[i], acc - v * prev, v});
    acc += v * (g.ends()[i] - prev);
    prev = g.ends()[i];
  }
  segs.push_back({prev, kInf, acc, 0.0});  // K constant beyond the support
  return segs;
}

void check_params(double theta, double q, double cutoff) {
  require(theta > 0.0 && theta < 1.0, "lions-peetre: theta must lie in (0,1)");
  require(q > 0.0, "lions-peetre: q must be positive");
  require(cutoff > 0.0, "lions-peetre: cutoff must be positive");
}

// int_a^b t^s ln(1/t) dt (s != -1), from the antiderivative
// t^(s+1) (ln(1/t)/(s+1) + 1/(s+1)^2).
double log_power_integral(double s, double a, double b) {
  auto F = [s](double t) {
    if (t == 0.0) return 0.0;  // valid for s > -1
    const double sp = s + 1.0;
    return std::pow(t, sp) * (std::log(1.0 / t) / sp + 1.0 / (sp * sp));
  };
  return F(b) - F(a);
}

// int_a^b t^s dt.
double power_integral(double s, double a, double b) {
  const double sp = s + 1.0;
  if (std::fabs(sp) < 1e-14) return std::log(b / a);
  const double fa = a == 0.0 ? 0.0 : std::pow(a, sp);
  return (std::pow(b, sp) - fa) / sp;
}

}  // namespace

double lions_peetre_norm(const StepFunction& f, double theta, double q, double cutoff) {
  check_params(theta, q, cutoff);
  if (f.zero()) return 0.0;
  const std::vector<KSegment> segs = k_segments(f);

  if (std::isinf(q)) {
    // sup over t of t^-theta K(t): within each segment the expression has no
    // interior maximum, so segment endpoints (clipped at cutoff) suffice.
    double best = 0.0;
    for (const KSegment& s : segs) {
      const double hi = std::min(s.hi, cutoff);
      if (hi <= s.lo) break;
      best = std::max(best, std::pow(hi, -theta) * (s.c + s.m * hi));
      if (s.lo > 0.0) best = std::max(best, std::pow(s.lo, -theta) * (s.c + s.m * s.lo));
    }
    return best;
  }

  double acc = 0.0;
  for (const KSegment& s : segs) {
    const double hi = std::min(s.hi, cutoff);
    if (hi <= s.lo) break;
    if (s.lo == 0.0) {
      // K = m t: closed form (c = 0 on the head).
      acc += std::pow(s.m, q) * std::pow(hi, (1.0 - theta) * q) / ((1.0 - theta) * q);
    } else if (std::isinf(hi)) {
      // Constant K: diverges unless theta q > 0 (always) with a finite head.
      acc += std::pow(s.c, q) * std::pow(s.lo, -theta * q) / (theta * q);
    } else if (s.m == 0.0) {
      acc += std::pow(s.c, q) * (std::pow(s.lo, -theta * q) - std::pow(hi, -theta * q)) /
             (theta * q);
    } else {
      auto integrand = [&](double t) {
        return std::pow(std::pow(t, -theta) * (s.c + s.m * t), q) / t;
      };
      acc += gauss31_refined(integrand, s.lo, hi, 1e-12);
    }
  }
  return std::pow(acc, 1.0 / q);
}

double cutoff_norm_q1(const StepFunction& f, double theta, double cutoff) {
  check_params(theta, 1.0, cutoff);
  require(std::isfinite(cutoff), "cutoff norm: cutoff must be finite");
  if (f.zero()) return 0.0;
  double acc = 0.0;
  for (const KSegment& s : k_segments(f)) {
    const double hi = std::min(s.hi, cutoff);
    if (hi <= s.lo) break;
    // int t^(-theta-1) (c + m t) dt, closed form.
    if (s.c != 0.0) acc += s.c * power_integral(-theta - 1.0, s.lo, hi);
    if (s.m != 0.0) acc += s.m * power_integral(-theta, s.lo, hi);
  }
  return acc;
}

KCrossingReport k_crossing(const StepFunction& f, const StepFunction& g) {
  // d(t) = K_f - K_g is piecewise linear; scan the union of breakpoints plus
  // a point beyond both supports. Valid pattern: nonnegative, then
  // nonpositive, at most one strict transition, no strict negativity at 0+.
  std::vector<double> ts;
  for (double t : f.rearranged().ends()) ts.push_back(t);
  for (double t : g.rearranged().ends()) ts.push_back(t);
  if (ts.empty()) ts.push_back(1.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  ts.push_back(ts.back() * 2.0);

  KCrossingReport rep;
  double scale = std::max(f.partial_integral(ts.back()), g.partial_integral(ts.back()));
  const double eps = 1e-13 * std::max(scale, 1e-300);
  bool seen_neg = false;
  double prev_t = 0.0, prev_d = 0.0;
  for (double t : ts) {
    const double d = f.partial_integral(t) - g.partial_integral(t);
    if (d > eps && seen_neg) {
      rep.ok = false;
      rep.detail = "K difference returns positive after going negative";
      return rep;
    }
    if (d < -eps && !seen_neg) {
      seen_neg = true;
      // Interpolated crossing inside the segment (K difference is linear).
      rep.t1 = prev_d > eps ? prev_t + (t - prev_t) * prev_d / (prev_d - d) : prev_t;
      if (rep.t1 == 0.0) {
        // Strictly negative from the start: no valid t1 exists.
        rep.ok = false;
        rep.detail = "K_f < K_g near 0";
        return rep;
      }
    }
    prev_t = t;
    prev_d = d;
  }
  rep.ok = true;
  if (!seen_neg) rep.t1 = ts.back();  // K_f >= K_g throughout
  return rep;
}

TeoderivadoReport teoderivado_check(const StepFunction& f, const StepFunction& g, double theta,
                                    double p, double eta, double q) {
  require(theta > 0.0 && theta < 1.0 && eta > 0.0 && eta < 1.0,
          "teoderivado: theta and eta must lie in (0,1)");
  require(p > 0.0 && q > 0.0, "teoderivado: p and q must be positive");
  TeoderivadoReport rep;
  if (!(p <= q)) {
    rep.failed_hypothesis = "p <= q";
    return rep;
  }
  if (!(q * (1.0 - eta) <= p * (1.0 - theta) + 1e-12)) {
    rep.failed_hypothesis = "q(1-eta) <= p(1-theta)";
    return rep;
  }
  const KCrossingReport cross = k_crossing(f, g);
  if (!cross.ok) {
    rep.failed_hypothesis = "K crossing: " + cross.detail;
    return rep;
  }
  rep.t1 = cross.t1;
  rep.norm_f_theta_p = lions_peetre_norm(f, theta, p);
  rep.norm_g_theta_p = lions_peetre_norm(g, theta, p);
  const double slack = 1e-10 * std::max(rep.norm_f_theta_p, rep.norm_g_theta_p);
  if (!(rep.norm_g_theta_p <= rep.norm_f_theta_p + slack)) {
    rep.failed_hypothesis = "||g||_(theta,p) <= ||f||_(theta,p)";
    return rep;
  }
  rep.applicable = true;
  rep.norm_f_eta_q = lions_peetre_norm(f, eta, q);
  rep.norm_g_eta_q = lions_peetre_norm(g, eta, q);
  const double slack2 = 1e-9 * std::max(rep.norm_f_eta_q, rep.norm_g_eta_q);
  rep.conclusion = rep.norm_g_eta_q <= rep.norm_f_eta_q + slack2;
  rep.inconsistent = !rep.conclusion;
  return rep;
}

ThetaDerivativeReport theta_derivative_check(const StepFunction& f, double theta) {
  require(theta > 0.0 && theta < 1.0, "theta derivative: theta must lie in (0,1)");
  ThetaDerivativeReport rep;
  // Analytic side: int_0^1/2 s^(-theta-1) ln(1/s) K(s) ds, segmentwise closed.
  for (const KSegment& s : k_segments(f)) {
    const double hi = std::min(s.hi, 0.5);
    if (hi <= s.lo) break;
    if (s.c != 0.0) rep.analytic += s.c * log_power_integral(-theta - 1.0, s.lo, hi);
    if (s.m != 0.0) rep.analytic += s.m * log_power_integral(-theta, s.lo, hi);
  }
  const double h = 1e-5;
  rep.finite_diff =
      (cutoff_norm_q1(f, theta + h) - cutoff_norm_q1(f, theta - h)) / (2.0 * h);
  rep.rel_error = std::fabs(rep.analytic - rep.finite_diff) /
                  std::max({std::fabs(rep.analytic), std::fabs(rep.finite_diff), 1e-300});
  return rep;
}

}  // namespace ricmp
