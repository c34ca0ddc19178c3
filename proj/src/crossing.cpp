#include "ricmp/crossing.hpp"

#include <algorithm>
#include <cmath>

namespace ricmp {
namespace {

void add_exact_levels(const AnyFunction& f, CrossingSide side, std::vector<double>& out) {
  const StepFunction* s = f.step();
  const PiecewisePower* p = f.power();
  if (side == CrossingSide::rearrangement) {
    if (s) {
      for (double t : s->rearranged().ends()) out.push_back(t);
    } else if (p) {
      for (const PowerPiece& piece : p->pieces())
        if (std::isfinite(piece.hi)) out.push_back(piece.hi);
    }
  } else {
    if (s) {
      for (double v : s->values())
        if (v > 0.0) out.push_back(v);
    } else if (p) {
      for (const PowerPiece& piece : p->pieces()) {
        const double lo_val = std::isfinite(piece.hi) ? piece.value(piece.hi) : 0.0;
        const double hi_val = piece.lo > 0.0 ? piece.value(piece.lo) : piece.coeff;
        if (lo_val > 0.0) out.push_back(lo_val);
        if (hi_val > 0.0 && std::isfinite(hi_val)) out.push_back(hi_val);
      }
    }
  }
}

int sign_of(double d, double eps) { return d > eps ? 1 : (d < -eps ? -1 : 0); }

}  // namespace

std::vector<double> crossing_grid(const AnyFunction& f, const AnyFunction& g, CrossingSide side,
                                  const GridConfig& grid) {
  require(grid.lo > 0.0 && grid.hi > grid.lo, "crossing grid: need 0 < lo < hi");
  require(grid.points_per_decade > 0, "crossing grid: points per decade must be positive");
  std::vector<double> pts;
  const double decades = std::log10(grid.hi / grid.lo);
  const int n = static_cast<int>(std::ceil(decades * grid.points_per_decade));
  pts.reserve(static_cast<std::size_t>(n) + 16);
  for (int i = 0; i <= n; ++i)
    pts.push_back(grid.lo * std::pow(10.0, static_cast<double>(i) / grid.points_per_decade));
  pts.back() = grid.hi;

  if (f.exact() && g.exact()) {
    std::vector<double> levels;
    add_exact_levels(f, side, levels);
    add_exact_levels(g, side, levels);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // Breakpoints plus midpoints of the partition they induce, so every
    // constant piece of the difference gets sampled.
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double lo = i == 0 ? 0.0 : levels[i - 1];
      pts.push_back(levels[i]);
      pts.push_back(0.5 * (lo + levels[i]));
    }
    if (!levels.empty()) pts.push_back(levels.back() * 1.5);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::remove_if(pts.begin(), pts.end(), [](double t) { return t <= 0.0; }), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

CrossingReport crossing_profile(const AnyFunction& f, const AnyFunction& g, CrossingSide side,
                                const GridConfig& grid, const Tolerance& tol) {
  auto diff = [&](double x) {
    return side == CrossingSide::distribution
               ? f.distribution(x, tol) - g.distribution(x, tol)
               : f.rearrangement(x, tol) - g.rearrangement(x, tol);
  };
  const bool exact = f.exact() && g.exact();
  const std::vector<double> pts = crossing_grid(f, g, side, grid);

  std::vector<double> d(pts.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d[i] = diff(pts[i]);
    scale = std::max(scale, std::fabs(d[i]));
  }
  const double tie_eps = exact ? 0.0 : 1e-10 * scale;

  CrossingReport rep;
  rep.side = side;

  std::vector<int> signs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) signs[i] = sign_of(d[i], tie_eps);

  // Strict sign transitions, zeros skipped.
  int prev = 0;
  std::size_t first_nonzero = pts.size();
  std::vector<std::size_t> changes;  // index where the new sign shows up
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (signs[i] == 0) continue;
    if (first_nonzero == pts.size()) {
      first_nonzero = i;
      rep.first_sign = signs[i];
    }
    if (prev != 0 && signs[i] != prev) changes.push_back(i);
    prev = signs[i];
  }

  if (first_nonzero == pts.size()) {
    rep.pattern = SignPattern::all_zero;
    rep.degenerate = true;
    rep.np_pattern_ok = true;
    return rep;
  }
  if (changes.empty()) {
    rep.pattern = rep.first_sign > 0 ? SignPattern::nonnegative : SignPattern::nonpositive;
  } else if (changes.size() == 1) {
    rep.pattern = rep.first_sign > 0 ? SignPattern::plus_to_minus : SignPattern::minus_to_plus;
    rep.single_crossing = true;
  } else {
    rep.pattern = SignPattern::multiple;
  }

  // Refine the location by bisecting toward the point where the sign at
  // pts[hi_idx] first shows up. Covers both a genuine crossing and the
  // boundary where a pure-dominance difference leaves zero.
  auto refine = [&](std::size_t hi_idx) {
    double lo = hi_idx == 0 ? pts[0] : pts[hi_idx - 1];
    double hi = pts[hi_idx];
    const int hi_sign = signs[hi_idx];
    for (int it = 0; it < grid.refine_iters && hi - lo > tol.root_t * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (sign_of(diff(mid), tie_eps) == hi_sign ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };

  if (rep.single_crossing) {
    rep.location = refine(changes[0]);
  } else if (!changes.empty()) {
    rep.location = pts[changes[0]];
  } else if (first_nonzero > 0) {
    rep.location = refine(first_nonzero);
  } else {
    rep.location = pts[0];
  }

  // Residual: best single-crossing explanation. Try every cut position (cut
  // before index c: sign a on [0,c), sign b on [c,end)) with (a,b) from the
  // observed first/last signs, and measure the worst inconsistent |d|.
  if (rep.pattern == SignPattern::multiple) {
    int last = 0;
    for (std::size_t i = pts.size(); i-- > 0;)
      if (signs[i] != 0) {
        last = signs[i];
        break;
      }
    double best = kInf;
    for (std::size_t c = 0; c <= pts.size(); ++c) {
      double worst = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const int expect = i < c ? rep.first_sign : last;
        if (signs[i] != 0 && signs[i] != expect) worst = std::max(worst, std::fabs(d[i]));
      }
      best = std::min(best, worst);
    }
    rep.residual = best;
  }

  // The NP condition allows the "wrong" one-sided dominance only when it sets
  // in after a tie: e.g. on the rearrangement side f* <= g* everywhere
  // qualifies only if f* = g* near 0 (then any t0 in the tie works).
  const bool want_plus_first = side == CrossingSide::rearrangement;
  const bool leading_tie = signs[0] == 0;
  switch (rep.pattern) {
    case SignPattern::all_zero:
      rep.np_pattern_ok = true;
      break;
    case SignPattern::nonnegative:
      rep.np_pattern_ok = want_plus_first || leading_tie;
      break;
    case SignPattern::nonpositive:
      rep.np_pattern_ok = !want_plus_first || leading_tie;
      break;
    case SignPattern::plus_to_minus:
      rep.np_pattern_ok = want_plus_first;
      break;
    case SignPattern::minus_to_plus:
      rep.np_pattern_ok = !want_plus_first;
      break;
    case SignPattern::multiple:
      rep.np_pattern_ok = false;
      break;
  }
  return rep;
}

}  // namespace ricmp
