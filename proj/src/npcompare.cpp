#include "ricmp/npcompare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ricmp {
namespace {

void validate(const RegionQuery& rq) {
  require(rq.p0 > 0.0 && rq.q0 > 0.0 && rq.p > 0.0 && rq.q > 0.0,
          "region query: all four exponents must be positive");
}

AnyFunction truncate_exact(const AnyFunction& f, double s) {
  if (const StepFunction* st = f.step()) return st->truncated_rearrangement(s);
  if (const PiecewisePower* pw = f.power()) return pw->truncated(s);
  throw domain_error("truncation: sampler inputs not supported");
}

}  // namespace

bool in_region_delta(const RegionQuery& rq) {
  validate(rq);
  return rq.p >= rq.p0 && rq.q >= rq.q0 && rq.q / rq.p <= rq.q0 / rq.p0;
}

bool in_region_delta_tilde(const RegionQuery& rq) {
  validate(rq);
  return rq.p <= rq.p0 && rq.q <= rq.q0 && rq.q / rq.p >= rq.q0 / rq.p0;
}

const std::vector<double>& region_lattice() {
  static const std::vector<double> lattice = {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 8.0};
  return lattice;
}

const char* to_string(ComparisonCriterion c) {
  switch (c) {
    case ComparisonCriterion::cor1b_a: return "cor1b_a";
    case ComparisonCriterion::cor1b_b: return "cor1b_b";
    case ComparisonCriterion::cor1ab_chain: return "cor1ab_chain";
    case ComparisonCriterion::prop1_tail: return "prop1_tail";
    case ComparisonCriterion::ideal_delta: return "ideal_delta";
    case ComparisonCriterion::ideal_delta_tilde: return "ideal_delta_tilde";
    case ComparisonCriterion::inapplicable: return "inapplicable";
  }
  return "?";
}

ComparisonVerdict np_compare(const AnyFunction& f, const AnyFunction& g, const RegionQuery& rq,
                             const NpCompareOptions& opt, const Tolerance& tol) {
  validate(rq);
  ComparisonVerdict v;
  v.query = rq;

  const bool exact = f.exact() && g.exact();
  v.norm_f_p0q0 = lorentz_norm(f, rq.p0, rq.q0, LorentzMethod::rearrangement, tol);
  v.norm_g_p0q0 = lorentz_norm(g, rq.p0, rq.q0, LorentzMethod::rearrangement, tol);
  v.norm_f_pq = lorentz_norm(f, rq.p, rq.q, LorentzMethod::rearrangement, tol);
  v.norm_g_pq = lorentz_norm(g, rq.p, rq.q, LorentzMethod::rearrangement, tol);
  const double norm_slack = (exact ? 1e-11 : tol.general) * std::max(v.norm_f_pq, v.norm_g_pq);
  v.conclusion = v.norm_g_pq <= v.norm_f_pq + norm_slack;

  if (!in_region_delta(rq)) {
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = "outside the sharp region";
    return v;
  }

  // Hypothesis: the (p0,q0) functional inequality.
  const double scale0 = std::max({v.norm_f_p0q0, v.norm_g_p0q0, 1e-300});
  const bool hypothesis =
      std::isfinite(v.norm_f_p0q0) && std::isfinite(v.norm_g_p0q0) &&
      std::pow(v.norm_f_p0q0, rq.q0) - std::pow(v.norm_g_p0q0, rq.q0) >=
          -opt.hypothesis_slack * std::pow(scale0, rq.q0);
  if (!hypothesis) {
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = "hypothesis failed: ||f||_(p0,q0) >= ||g||_(p0,q0)";
    return v;
  }

  // Integrability of the (p,q) difference.
  if (!exact) {
    const double gamma = rq.q / rq.p - 1.0;
    double prev = kInf;
    bool ok = true;
    for (double t : {64.0, 128.0, 256.0}) {
      const double fs = f.rearrangement(t, tol), gs = g.rearrangement(t, tol);
      const double w = std::fabs(std::pow(fs, rq.q) - std::pow(gs, rq.q)) * std::pow(t, gamma);
      if (w > 0.7 * prev) ok = false;  // not geometrically decaying
      prev = w;
    }
    if (!ok) {
      v.criterion = ComparisonCriterion::inapplicable;
      v.diagnostics = "tail test failed: (f*^q - g*^q) t^(q/p-1) not integrable";
      return v;
    }
  } else {
    if (!std::isfinite(v.norm_f_pq) || !std::isfinite(v.norm_g_pq)) {
      v.criterion = ComparisonCriterion::inapplicable;
      v.diagnostics = "norms not finite at (p,q)";
      return v;
    }
  }

  // One-sided crossing of the distribution functions, lambda_f below first.
  GridConfig grid = opt.crossing;
  if (!exact) {
    grid.lo = std::max(grid.lo, 1e-4);
    grid.hi = std::min(grid.hi, 2.0 * std::max(f.sup(), g.sup()));
  }
  const CrossingReport cross = crossing_profile(f, g, CrossingSide::distribution, grid, tol);
  if (!cross.np_pattern_ok) {
    // Weakened route: finite supports plus the one-crossing tail condition.
    const bool same_ray = std::fabs(rq.q / rq.p - rq.q0 / rq.p0) <= 1e-12 * (rq.q0 / rq.p0);
    if (exact && f.step() && g.step() && rq.q > rq.q0 && rq.q0 > 1.0 && same_ray) {
      const TailConditionReport tail = tail_condition(*f.step(), *g.step(), rq.p0, rq.q0);
      if (tail.holds) {
        v.criterion = ComparisonCriterion::prop1_tail;
        v.applicable = true;
        v.inconsistent = !v.conclusion;
        std::ostringstream os;
        os << "tail condition holds with tau1=" << tail.tau1;
        v.diagnostics = os.str();
        return v;
      }
    }
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = "distribution functions do not cross once (lambda_f below first)";
    return v;
  }

  const double ray0 = rq.q0 / rq.p0, ray = rq.q / rq.p;
  const bool same_ray = std::fabs(ray - ray0) <= 1e-12 * ray0;
  const bool same_q = std::fabs(rq.q - rq.q0) <= 1e-12 * rq.q0;
  if (same_q && same_ray)
    v.criterion = ComparisonCriterion::cor1ab_chain;  // (p,q) = (p0,q0), trivial
  else if (same_ray && rq.q > rq.q0)
    v.criterion = ComparisonCriterion::cor1b_a;
  else if (same_q && rq.p > rq.p0)
    v.criterion = ComparisonCriterion::cor1b_b;
  else
    v.criterion = ComparisonCriterion::cor1ab_chain;
  v.applicable = true;
  v.inconsistent = !v.conclusion;
  if (v.inconsistent)
    v.diagnostics = "criterion asserts the conclusion but evaluated norms disagree";
  return v;
}

TailConditionReport tail_condition(const StepFunction& f, const StepFunction& g, double p0,
                                   double q0) {
  require(p0 > 0.0 && q0 > 0.0, "tail condition: exponents must be positive");
  const double gamma = q0 / p0;

  // Breakpoints of s -> lambda^gamma difference: the distinct values of f, g.
  std::vector<double> levels;
  for (double v : f.values())
    if (v > 0.0) levels.push_back(v);
  for (double v : g.values())
    if (v > 0.0) levels.push_back(v);
  TailConditionReport rep;
  if (levels.empty()) {  // both identically zero
    rep.holds = true;
    rep.tau1 = 0.0;
    return rep;
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // T at each level, accumulated right to left; T(top) = 0 and the integrand
  // is constant between consecutive levels.
  const std::size_t n = levels.size();
  std::vector<double> T(n + 1, 0.0);  // T[i] = T(levels[i]); T[n] = T(top) = 0
  for (std::size_t i = n - 1; i-- > 0;) {
    const double lo = levels[i], hi = levels[i + 1];
    const double d = std::pow(f.distribution(0.5 * (lo + hi)), gamma) -
                     std::pow(g.distribution(0.5 * (lo + hi)), gamma);
    T[i] = T[i + 1] + d * (hi - lo);
  }
  // Segment below the smallest level: lambda's are constant there (= support
  // measures), contributing linearly down to tau = 0; T(0) matters only for
  // the sign scan, include it.
  const double d0 = std::pow(f.distribution(0.5 * levels[0]), gamma) -
                    std::pow(g.distribution(0.5 * levels[0]), gamma);
  const double T_at_0 = T[0] + d0 * levels[0];

  // Scan increasing tau: once T > tol, no later T < -tol is allowed.
  std::vector<std::pair<double, double>> pts;
  pts.emplace_back(0.0, T_at_0);
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(levels[i], T[i]);
  double scale = 0.0;
  for (auto& [t, val] : pts) scale = std::max(scale, std::fabs(val));
  const double eps = 1e-13 * std::max(scale, 1.0);

  rep.max_value = -kInf;
  rep.min_value = kInf;
  for (auto& [t, val] : pts) {
    rep.max_value = std::max(rep.max_value, val);
    rep.min_value = std::min(rep.min_value, val);
  }

  bool seen_pos = false;
  double tau1 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double val = pts[i].second;
    if (val > eps && !seen_pos) {
      seen_pos = true;
      // Linear interpolation of the zero inside the previous segment.
      if (i > 0 && pts[i - 1].second < -eps) {
        const double a = pts[i - 1].first, b = pts[i].first;
        const double fa = pts[i - 1].second, fb = val;
        tau1 = a + (b - a) * (-fa) / (fb - fa);
      } else {
        tau1 = i > 0 ? pts[i - 1].first : 0.0;
      }
    }
    if (val < -eps && seen_pos) {
      rep.holds = false;
      return rep;
    }
  }
  rep.holds = true;
  if (seen_pos) {
    rep.tau1 = tau1;
  } else {
    // T <= 0 throughout; tau1 sits right after the last strictly negative
    // point (0 when T never leaves zero).
    rep.tau1 = 0.0;
    for (std::size_t i = pts.size(); i-- > 0;) {
      if (pts[i].second < -eps) {
        rep.tau1 = i + 1 < pts.size() ? pts[i + 1].first : pts[i].first;
        break;
      }
    }
  }
  return rep;
}

EventualDominanceReport eventual_dominance(const AnyFunction& f, const AnyFunction& g, double t0,
                                           const Tolerance& tol) {
  require(t0 > 0.0, "eventual dominance: t0 must be positive");
  // Hypotheses: f*(t0) > g*(t0), f* >= g* on (0, t0).
  const double fs0 = f.rearrangement(t0, tol), gs0 = g.rearrangement(t0, tol);
  if (!(fs0 > gs0))
    throw precondition_error("f*(t0) > g*(t0)");
  for (int i = 1; i <= 64; ++i) {
    const double t = t0 * static_cast<double>(i) / 65.0;
    if (f.rearrangement(t, tol) < g.rearrangement(t, tol) - 1e-12)
      throw precondition_error("f* >= g* on (0,t0)");
  }

  auto diff = [&](double p) -> double {
    const double mf = rearranged_moment_dist(f, p, 1.0, tol);
    const double mg = rearranged_moment_dist(g, p, 1.0, tol);
    if (!std::isfinite(mf) || !std::isfinite(mg)) return kInf;  // outside the scan set
    return mf - mg;
  };

  EventualDominanceReport rep;
  rep.scan_lo = 0.5;
  rep.scan_hi = 256.0;
  const double ratio = std::pow(2.0, 1.0 / 16.0);
  std::vector<std::pair<double, double>> scanned;
  for (double p = rep.scan_lo; p <= rep.scan_hi * (1.0 + 1e-12); p *= ratio) {
    const double d = diff(p);
    if (std::isfinite(d)) scanned.emplace_back(p, d);
  }
  // Smallest scanned p after which the sign stays positive.
  for (std::size_t i = 0; i < scanned.size(); ++i) {
    bool all_pos = true;
    for (std::size_t j = i; j < scanned.size(); ++j)
      if (scanned[j].second <= 0.0) {
        all_pos = false;
        break;
      }
    if (all_pos && !scanned.empty()) {
      rep.p_star = scanned[i].first;
      rep.found = true;
      break;
    }
  }
  return rep;
}

// --- class-X probe ------------------------------------------------------------

SpaceSpec SpaceSpec::lambda(ConcaveWeight w, double r) {
  SpaceSpec s;
  s.kind = SpaceKind::lambda_phi;
  s.phi = std::move(w);
  s.r = r;
  return s;
}

SpaceSpec SpaceSpec::marcinkiewicz_space(ConcaveWeight w, MarcinkiewiczConvention conv) {
  SpaceSpec s;
  s.kind = SpaceKind::marcinkiewicz;
  s.phi = std::move(w);
  s.convention = conv;
  return s;
}

SpaceSpec SpaceSpec::orlicz_space(OrliczSpec m) {
  SpaceSpec s;
  s.kind = SpaceKind::orlicz;
  s.orlicz = std::move(m);
  return s;
}

double space_norm(const SpaceSpec& space, const AnyFunction& f, const Tolerance& tol) {
  switch (space.kind) {
    case SpaceKind::lambda_phi:
      return lambda_phi_norm(f, space.phi, space.r, tol);
    case SpaceKind::marcinkiewicz:
      return marcinkiewicz_norm(f, space.phi, space.convention, tol).value;
    case SpaceKind::orlicz:
      return luxemburg_norm(f, space.orlicz, tol);
  }
  throw domain_error("space_norm: bad kind");
}

std::pair<double, double> probe_truncated_norms(const SpaceSpec& space, const AnyFunction& f,
                                                const AnyFunction& g, double s,
                                                const Tolerance& tol) {
  return {space_norm(space, truncate_exact(f, s), tol),
          space_norm(space, truncate_exact(g, s), tol)};
}

ProbeReport class_X_probe(const SpaceSpec& space, const AnyFunction& f, const AnyFunction& g,
                          std::vector<double> s_grid, const Tolerance& tol) {
  // NP membership on the rearrangement side.
  const CrossingReport cross = crossing_profile(f, g, CrossingSide::rearrangement);
  if (!cross.np_pattern_ok)
    throw precondition_error("(f,g) in NP: rearrangements must cross once, f* first");

  ProbeReport rep;
  rep.norm_f = space_norm(space, f, tol);
  rep.norm_g = space_norm(space, g, tol);
  const double slack = 1e-9 * std::max({rep.norm_f, rep.norm_g, 1e-300});
  if (!(rep.norm_f >= rep.norm_g - slack))
    throw precondition_error("||f||_X >= ||g||_X");

  if (s_grid.empty()) {
    for (double s = 1e-2; s <= 1e2 * (1.0 + 1e-12); s *= std::pow(10.0, 1.0 / 16.0))
      s_grid.push_back(s);
    auto add_breaks = [&](const AnyFunction& h) {
      if (const StepFunction* st = h.step())
        for (double t : st->rearranged().ends()) s_grid.push_back(t);
      if (const PiecewisePower* pw = h.power())
        for (const PowerPiece& p : pw->pieces())
          if (std::isfinite(p.hi)) s_grid.push_back(p.hi);
    };
    add_breaks(f);
    add_breaks(g);
    std::sort(s_grid.begin(), s_grid.end());
    s_grid.erase(std::unique(s_grid.begin(), s_grid.end()), s_grid.end());
  }

  for (double s : s_grid) {
    const auto [nf, ng] = probe_truncated_norms(space, f, g, s, tol);
    if (nf < ng - 1e-9 * std::max(ng, 1e-300)) {
      if (!rep.fired) {
        rep.fired = true;
        rep.first_violation_s = s;
        rep.norm_f_trunc = nf;
        rep.norm_g_trunc = ng;
      }
      rep.violations.push_back(s);
    }
  }
  return rep;
}

}  // namespace ricmp
