#include "ricmp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace ricmp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double sinc_abs(double t) { return t == 0.0 ? 1.0 : std::fabs(std::sin(t) / t); }

// Root of f(t) = target on [lo,hi] with f strictly monotone; plain bisection.
double bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                       double target, bool increasing, double tol_t) {
  double flo = f(lo) - target, fhi = f(hi) - target;
  if (increasing ? (flo > 0.0 || fhi < 0.0) : (flo < 0.0 || fhi > 0.0)) {
    // Allow tiny violations at the bracket ends (level tangent to the piece).
    if (std::fabs(flo) < 1e-15) return lo;
    if (std::fabs(fhi) < 1e-15) return hi;
    throw metadata_error("root bracket failed on a declared monotone piece");
  }
  for (int it = 0; it < 200 && hi - lo > tol_t; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid) - target;
    const bool go_right = increasing ? (fm < 0.0) : (fm > 0.0);
    (go_right ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Sampler::Sampler(std::string name, Evaluator eval, PieceGen pieces, Evaluator envelope,
                 double sup_value)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      pieces_(std::move(pieces)),
      env_(std::move(envelope)),
      sup_(sup_value) {
  require(sup_ > 0.0 && std::isfinite(sup_), "sampler: sup must be finite and positive");
}

double Sampler::distribution(double tau, const Tolerance& tol) const {
  require(tau > 0.0, "distribution: tau must be positive");
  if (lambda_) return lambda_(tau);
  return distribution_generic(tau, tol);
}

double Sampler::distribution_generic(double tau, const Tolerance& tol) const {
  require(tau > 0.0, "distribution: tau must be positive");
  if (tau >= sup_) return 0.0;
  double measure = 0.0;
  for (std::size_t k = 0;; ++k) {
    const std::optional<MonotonePiece> piece = pieces_(k);
    if (!piece) break;
    if (env_(piece->lo) < tau) break;  // envelope decreasing: no further crossings
    const double lo = piece->lo, hi = piece->hi;
    if (std::isinf(hi)) {
      // Final decreasing tail: everything up to the crossing is above tau iff
      // the tail starts above tau.
      if (eval_(std::max(lo, 1e-300)) <= tau) break;
      double probe = std::max(lo, 1.0);
      while (env_(probe) >= tau && eval_(probe) > tau) probe *= 2.0;
      measure += bisect_monotone(eval_, std::max(lo, 1e-300), probe, tau, false, tol.root_t) - lo;
      break;
    }
    const double a = std::max(lo, 1e-300);
    const double va = eval_(a), vb = eval_(hi);
    if (piece->increasing) {
      if (vb > tau) measure += hi - (va >= tau ? a : bisect_monotone(eval_, a, hi, tau, true, tol.root_t));
    } else {
      if (va > tau) measure += (vb >= tau ? hi : bisect_monotone(eval_, a, hi, tau, false, tol.root_t)) - a;
    }
  }
  return measure;
}

double Sampler::rearrangement(double t, const Tolerance& tol) const {
  require(t > 0.0, "rearrangement: t must be positive");
  // A single decreasing piece over (0,inf) is its own rearrangement.
  if (const std::optional<MonotonePiece> p0 = pieces_(0);
      p0 && !p0->increasing && p0->lo == 0.0 && std::isinf(p0->hi))
    return eval_(t);
  // f*(t) = inf { tau : lambda(tau) <= t }; lambda is nonincreasing in tau.
  double lo = 0.0, hi = sup_;
  if (distribution(sup_ * (1.0 - 1e-14), tol) > t) return sup_;
  for (int it = 0; it < 100 && hi - lo > 1e-14 * sup_; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0) break;
    (distribution(mid, tol) <= t ? hi : lo) = mid;
  }
  return hi;
}

// ---------------------------------------------------------------------------
// Builtins

const SincPeak& sinc_peak(std::size_t k) {
  require(k >= 1, "sinc peak index starts at 1");
  // Grown on demand; thread_local keeps the hot path lock-free.
  static thread_local std::vector<SincPeak> table;
  while (table.size() < k) {
    const std::size_t j = table.size() + 1;
    // d/dt (sin t / t) vanishes where u(t) = t cos t - sin t does; u is
    // monotone on (j pi, (j+1) pi) because u' = -t sin t keeps one sign there.
    auto u = [](double t) { return t * std::cos(t) - std::sin(t); };
    double lo = static_cast<double>(j) * kPi, hi = lo + kPi;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((u(mid) > 0.0) == (u(lo) > 0.0))
        lo = mid;
      else
        hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    table.push_back({x, sinc_abs(x)});
  }
  return table[k - 1];
}

namespace {

// Monotone pieces of |sin t / t|: (0, pi) decreasing, then per lobe k >= 1 an
// increasing piece (k pi, x_k) and a decreasing one (x_k, (k+1) pi).
std::optional<MonotonePiece> sinc_piece(std::size_t k) {
  if (k == 0) return MonotonePiece{0.0, kPi, false};
  const std::size_t lobe = (k + 1) / 2;
  const double x = sinc_peak(lobe).location;
  if (k % 2 == 1) return MonotonePiece{static_cast<double>(lobe) * kPi, x, true};
  return MonotonePiece{x, static_cast<double>(lobe + 1) * kPi, false};
}

// Safeguarded Newton for sin(s) = tau * (base + s) on [slo, shi] within one
// half-lobe (s in (0, pi), where sin is nonnegative). Working in the reduced
// coordinate keeps the trig arguments small, which matters when thousands of
// far-out lobes are summed.
double sinc_cross_reduced(double base, double slo, double shi, double tau, bool increasing,
                          double seed) {
  double a = slo, b = shi;
  double t = std::min(std::max(seed, a + 1e-9), b - 1e-9);
  for (int it = 0; it < 100 && b - a > 1e-13; ++it) {
    const double s = std::sin(t);
    const double ht = s - tau * (base + t);
    const bool above = ht > 0.0;
    if (increasing ? !above : above)
      a = t;
    else
      b = t;
    const double dh = std::cos(t) - tau;
    double next = dh != 0.0 ? t - ht / dh : 0.5 * (a + b);
    if (next == t) break;  // converged to machine precision
    if (!(next > a && next < b)) {
      next = 0.5 * (a + b);
      if (next == a || next == b) break;  // bracket exhausted
    }
    t = next;
  }
  return t;
}

}  // namespace

double sinc_lambda(double tau) {
  require(tau > 0.0, "sinc distribution: tau must be positive");
  if (tau >= 1.0) return 0.0;
  static thread_local std::unordered_map<double, double> memo;
  if (auto it = memo.find(tau); it != memo.end()) return it->second;

  // Head lobe (0, pi): decreasing from 1, single crossing.
  double measure = sinc_cross_reduced(0.0, 1e-12, kPi, tau, false, 0.5 * kPi);
  // Lobe k occupies (k pi, (k+1) pi) and stays below 1/(k pi).
  for (std::size_t k = 1; 1.0 / (static_cast<double>(k) * kPi) >= tau; ++k) {
    const SincPeak& pk = sinc_peak(k);
    if (pk.height <= tau) continue;
    const double base = static_cast<double>(k) * kPi;
    const double speak = pk.location - base;
    const double guess = std::asin(std::min(1.0, tau * (base + 0.5 * kPi)));
    const double a = sinc_cross_reduced(base, 0.0, speak, tau, true, guess);
    const double b = sinc_cross_reduced(base, speak, kPi, tau, false, kPi - guess);
    measure += b - a;
  }
  if (memo.size() > 200000) memo.clear();
  memo.emplace(tau, measure);
  return measure;
}

double gauss_lambda(double tau) {
  require(tau > 0.0, "gauss distribution: tau must be positive");
  if (tau >= 1.0) return 0.0;
  return std::sqrt(2.0 * std::log(1.0 / tau) / kPi);
}

Sampler make_sinc() {
  Sampler s("sinc", sinc_abs, sinc_piece, [](double t) { return std::min(1.0, 1.0 / t); }, 1.0);
  s.set_distribution_override(sinc_lambda);
  return s;
}

Sampler make_sincpi() {
  auto scale = [](std::size_t k) -> std::optional<MonotonePiece> {
    const std::optional<MonotonePiece> p = sinc_piece(k);
    if (!p) return std::nullopt;
    return MonotonePiece{p->lo / kPi, p->hi / kPi, p->increasing};
  };
  Sampler s("sincpi", [](double t) { return sinc_abs(kPi * t); }, scale,
            [](double t) { return std::min(1.0, 1.0 / (kPi * t)); }, 1.0);
  s.set_distribution_override([](double tau) { return sinc_lambda(tau) / kPi; });
  return s;
}

Sampler make_gauss() {
  auto g = [](double t) { return std::exp(-0.5 * kPi * t * t); };
  auto pieces = [](std::size_t k) -> std::optional<MonotonePiece> {
    if (k == 0) return MonotonePiece{0.0, kInf, false};
    return std::nullopt;
  };
  Sampler s("gauss", g, pieces, g, 1.0);
  s.set_distribution_override(gauss_lambda);
  return s;
}

}  // namespace ricmp
