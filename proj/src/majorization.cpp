#include "ricmp/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ricmp/norms.hpp"

namespace ricmp {
namespace {

std::vector<double> union_breakpoints(const StepFunction& a, const StepFunction& b) {
  std::vector<double> ts;
  for (double t : a.ends()) ts.push_back(t);
  for (double t : b.ends()) ts.push_back(t);
  if (ts.empty()) ts.push_back(1.0);
  ts.push_back(*std::max_element(ts.begin(), ts.end()) * 2.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

MajorizationReport power_prefix_compare(const StepFunction& fstar, const StepFunction& gstar,
                                        double p0, double tolerance) {
  MajorizationReport rep;
  rep.margin = kInf;
  for (double t : union_breakpoints(fstar, gstar)) {
    const double m = fstar.partial_power_integral(p0, t) - gstar.partial_power_integral(p0, t);
    if (m < rep.margin) {
      rep.margin = m;
      rep.worst_t = t;
    }
  }
  rep.holds = rep.margin >= -tolerance;
  return rep;
}

}  // namespace

MajorizationReport hlp_majorizes(const StepFunction& f, const StepFunction& g, double tolerance) {
  return power_prefix_compare(f.rearranged(), g.rearranged(), 1.0, tolerance);
}

MajorizationReport power_majorization_from_crossing(const StepFunction& f, const StepFunction& g,
                                                    double p0, double tolerance) {
  require(p0 >= 1.0, "power majorization: p0 must be >= 1");
  const CrossingReport cross = crossing_profile(f, g, CrossingSide::rearrangement);
  if (!cross.np_pattern_ok)
    throw precondition_error("rearrangement crossing: f* must dominate near 0 with a single sign change");
  const double nf = lp_norm(f, p0), ng = lp_norm(g, p0);
  if (!(nf >= ng - 1e-12 * std::max(nf, ng)))
    throw precondition_error("norm ordering: ||f||_p0 >= ||g||_p0");
  // The lemma's conclusion, checked at all breakpoints (exact).
  return power_prefix_compare(f.rearranged(), g.rearranged(), p0, tolerance);
}

double k_functional(const StepFunction& f, double t) {
  require(t > 0.0, "k functional: t must be positive");
  return f.partial_integral(t);
}

double k_envelope_p(const StepFunction& f, double p0, double t) {
  require(p0 >= 1.0, "k envelope: p0 must be >= 1");
  require(t > 0.0, "k envelope: t must be positive");
  return std::pow(f.partial_power_integral(p0, std::pow(t, p0)), 1.0 / p0);
}

double e_functional(const AnyFunction& f, double t, EOrder order, const Tolerance& tol) {
  require(t > 0.0, "e functional: t must be positive");
  return order == EOrder::inf_first ? f.distribution(t, tol) : f.rearrangement(t, tol);
}

KaramataReport karamata_check(std::vector<double> x, std::vector<double> y,
                              const std::function<double(double)>& phi, bool validate_phi) {
  require(static_cast<bool>(phi), "karamata: Phi evaluator required");
  if (validate_phi) {
    // Convexity and monotonicity are load-bearing: the conclusion is false
    // without them, so misuse must be caught rather than silently accepted.
    std::mt19937_64 rng(0x5bd1e995u);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    for (int i = 0; i < 32; ++i) {
      double a = U(rng), b = U(rng);
      if (a > b) std::swap(a, b);
      const double lam = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double mid = lam * a + (1.0 - lam) * b;
      require(phi(mid) <= lam * phi(a) + (1.0 - lam) * phi(b) + 1e-9 * (1.0 + std::fabs(phi(b))),
              "karamata: Phi must be convex");
      require(phi(a) <= phi(b) + 1e-12, "karamata: Phi must be nondecreasing");
    }
  }
  for (double& v : x) v = std::fabs(v);
  for (double& v : y) v = std::fabs(v);
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  std::sort(x.begin(), x.end(), std::greater<double>());
  std::sort(y.begin(), y.end(), std::greater<double>());

  KaramataReport rep;
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += x[k];
    sy += y[k];
    if (sx < sy) {
      rep.applicable = false;
      rep.failing_k = k + 1;
      return rep;
    }
  }
  rep.applicable = true;
  for (std::size_t k = 0; k < n; ++k) {
    rep.lhs += phi(x[k]);
    rep.rhs += phi(y[k]);
  }
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

}  // namespace ricmp
