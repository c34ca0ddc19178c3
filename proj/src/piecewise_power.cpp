#include "ricmp/piecewise_power.hpp"

#include <algorithm>
#include <cmath>

namespace ricmp {

double PowerPiece::value(double t) const {
  return expo == 0.0 ? coeff : coeff * std::pow(t, -expo);
}

double PowerPiece::power_integral(double r, double a, double b) const {
  if (b <= a || coeff == 0.0) return 0.0;
  const double cr = std::pow(coeff, r);
  const double e = 1.0 - expo * r;  // exponent of the antiderivative
  if (std::fabs(e) < 1e-14) return cr * std::log(b / a);
  if (std::isinf(b)) return e < 0.0 ? -cr * std::pow(a, e) / e : kInf;
  return cr * (std::pow(b, e) - std::pow(a, e)) / e;
}

PiecewisePower PiecewisePower::make(std::vector<PowerPiece> pieces) {
  require(!pieces.empty(), "piecewise power: at least one piece");
  double prev = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const PowerPiece& p = pieces[i];
    require(p.lo == prev, "piecewise power: pieces must be contiguous from 0");
    require(p.hi > p.lo, "piecewise power: empty piece");
    require(p.coeff >= 0.0 && p.expo >= 0.0, "piecewise power: coeff and exponent must be nonnegative");
    const bool last = i + 1 == pieces.size();
    require(last || std::isfinite(p.hi), "piecewise power: only the last piece may be infinite");
    prev = p.hi;
  }
  // The profile must be globally nonincreasing; with nonnegative exponents it
  // suffices to check the junctions.
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const double left = pieces[i - 1].value(pieces[i - 1].hi);
    const double right = pieces[i].value(pieces[i].lo == 0.0 ? 1e-300 : pieces[i].lo);
    require(right <= left * (1.0 + 1e-12), "piecewise power: profile must be nonincreasing");
  }
  PiecewisePower f;
  f.pieces_ = std::move(pieces);
  return f;
}

PiecewisePower PiecewisePower::power_tail(double a, double alpha) {
  require(a >= 1.0, "power tail: plateau must end at a >= 1");
  require(alpha > 0.0 && alpha < 1.0, "power tail: alpha must lie in (0,1)");
  return make({{0.0, a, 1.0, 0.0}, {a, kInf, 1.0, alpha}});
}

bool PiecewisePower::has_infinite_tail() const {
  return std::isinf(pieces_.back().hi) && pieces_.back().coeff > 0.0;
}

double PiecewisePower::value(double t) const {
  require(t > 0.0, "piecewise power value: t must be positive");
  for (const PowerPiece& p : pieces_)
    if (t <= p.hi) return p.value(t);
  return 0.0;
}

double PiecewisePower::sup() const {
  // Nonincreasing, so the sup sits at 0+; infinite for a genuine power head.
  const PowerPiece& head = pieces_.front();
  return head.expo > 0.0 && head.coeff > 0.0 ? kInf : head.coeff;
}

double PiecewisePower::support_measure() const {
  if (has_infinite_tail()) return kInf;
  double end = 0.0;
  for (const PowerPiece& p : pieces_)
    if (p.coeff > 0.0) end = p.hi;
  return end;
}

double PiecewisePower::distribution(double tau) const {
  require(tau > 0.0, "distribution: tau must be positive");
  // value(t) <= tau for all t beyond the solution; invert the piece that
  // straddles tau.
  double measure = 0.0;
  for (const PowerPiece& p : pieces_) {
    const double at_lo = p.lo == 0.0 ? (p.expo > 0.0 ? kInf : p.coeff) : p.value(p.lo);
    const double at_hi = std::isinf(p.hi) ? 0.0 : p.value(p.hi);
    if (at_lo <= tau) break;  // later pieces are smaller still
    if (at_hi > tau) {
      measure = p.hi;
      continue;
    }
    // Root of coeff * t^-expo = tau inside the piece.
    if (p.expo == 0.0) {
      measure = p.hi;  // constant piece strictly above tau
    } else {
      measure = std::pow(p.coeff / tau, 1.0 / p.expo);
    }
    break;
  }
  return measure;
}

double PiecewisePower::partial_power_integral(double r, double t) const {
  require(r > 0.0, "partial power integral: r must be positive");
  require(t > 0.0, "partial power integral: t must be positive");
  double acc = 0.0;
  for (const PowerPiece& p : pieces_) {
    if (p.lo >= t) break;
    acc += p.power_integral(r, p.lo, std::min(p.hi, t));
  }
  return acc;
}

double PiecewisePower::partial_integral(double t) const {
  return partial_power_integral(1.0, t);
}

double PiecewisePower::total_power_integral(double r) const {
  require(r > 0.0, "total power integral: r must be positive");
  double acc = 0.0;
  for (const PowerPiece& p : pieces_) {
    const double term = p.power_integral(r, p.lo, p.hi);
    if (std::isinf(term)) return kInf;
    acc += term;
  }
  return acc;
}

PiecewisePower PiecewisePower::truncated(double s) const {
  require(s > 0.0, "truncation: s must be positive");
  std::vector<PowerPiece> out;
  for (const PowerPiece& p : pieces_) {
    if (p.lo >= s) break;
    PowerPiece q = p;
    q.hi = std::min(p.hi, s);
    out.push_back(q);
  }
  return make(std::move(out));
}

}  // namespace ricmp
