#include "ricmp/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ricmp/quadrature.hpp"

namespace ricmp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
  std::vector<double> g;
  const int n = static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade));
  g.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    g.push_back(lo * std::pow(10.0, static_cast<double>(i) / per_decade));
  g.back() = hi;
  return g;
}

}  // namespace

// --- ConcaveWeight ----------------------------------------------------------

ConcaveWeight ConcaveWeight::power(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "weight: exponent must lie in (0,1]");
  ConcaveWeight w;
  w.alpha_ = alpha;
  w.phi_ = [alpha](double t) { return std::pow(t, alpha); };
  return w;
}

ConcaveWeight ConcaveWeight::custom(std::function<double(double)> phi) {
  require(static_cast<bool>(phi), "weight: evaluator required");
  // Spot-check monotonicity and concavity; silent misuse would invalidate
  // every norm built on the weight.
  double prev = phi(1e-9);
  require(prev >= 0.0 && prev < 1e-3, "weight: phi(0+) must vanish");
  const std::vector<double> grid = geometric_grid(1e-6, 1e6, 8);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = phi(grid[i]);
    require(cur >= prev, "weight: phi must be increasing");
    prev = cur;
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double a = grid[i - 1], b = grid[i + 1], m = grid[i];
    const double lam = (b - m) / (b - a);
    require(phi(m) >= lam * phi(a) + (1.0 - lam) * phi(b) - 1e-9 * std::fabs(phi(b)),
            "weight: phi must be concave");
  }
  ConcaveWeight w;
  w.phi_ = std::move(phi);
  return w;
}

// --- OrliczSpec ---------------------------------------------------------------

OrliczSpec OrliczSpec::power(double p) {
  require(p >= 1.0, "orlicz power: p must be >= 1 for convexity");
  OrliczSpec s;
  s.kind_ = OrliczKind::power;
  s.p_ = p;
  s.m_ = [p](double u) { return std::pow(u, p); };
  s.mprime_ = [p](double u) { return u <= 0.0 ? 0.0 : p * std::pow(u, p - 1.0); };
  return s;
}

OrliczSpec OrliczSpec::maxpow(double p, double q) {
  require(p > 0.0 && q > p, "orlicz maxpow: need 0 < p < q");
  OrliczSpec s;
  s.kind_ = OrliczKind::maxpow;
  s.p_ = p;
  s.q_ = q;
  s.mprime_ = [p, q](double u) { return std::max(std::pow(u, p), std::pow(u, q)); };
  s.m_ = [p, q](double x) {
    if (x <= 1.0) return std::pow(x, p + 1.0) / (p + 1.0);
    return (q - p) / ((p + 1.0) * (q + 1.0)) + std::pow(x, q + 1.0) / (q + 1.0);
  };
  return s;
}

OrliczSpec OrliczSpec::log_example_2() {
  OrliczSpec s;
  s.kind_ = OrliczKind::log_example_2;
  s.mprime_ = [](double u) { return u <= 1.0 ? u : u * u / std::log(std::exp(1.0) * u); };
  s.m_ = [mp = s.mprime_](double x) {
    if (x <= 1.0) return 0.5 * x * x;
    return 0.5 + adaptive_simpson(mp, 1.0, x, 1e-12 * std::max(1.0, x * x * x));
  };
  return s;
}

OrliczSpec OrliczSpec::log_example_3() {
  OrliczSpec s;
  s.kind_ = OrliczKind::log_example_3;
  s.mprime_ = [](double u) {
    if (u <= 0.0) return 0.0;
    return u <= 1.0 ? u / std::log(std::exp(1.0) / u) : u * u;
  };
  s.m_ = [mp = s.mprime_](double x) {
    const double m1 = adaptive_simpson(mp, 0.0, std::min(x, 1.0), 1e-13);
    if (x <= 1.0) return m1;
    return m1 + (x * x * x - 1.0) / 3.0;
  };
  return s;
}

OrliczSpec OrliczSpec::custom(std::function<double(double)> m,
                              std::function<double(double)> mprime) {
  require(static_cast<bool>(m) && static_cast<bool>(mprime), "orlicz custom: both M and M' required");
  require(std::fabs(m(0.0)) < 1e-12, "orlicz: M(0) must vanish");
  // Spot-check convexity/monotonicity and M' consistency by finite differences.
  const std::vector<double> grid = geometric_grid(1e-4, 1e4, 4);
  double prev = 0.0;
  for (double u : grid) {
    const double cur = m(u);
    require(cur >= prev - 1e-12, "orlicz: M must be nondecreasing");
    prev = cur;
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double a = grid[i - 1], b = grid[i + 1], mid = grid[i];
    const double lam = (b - mid) / (b - a);
    require(m(mid) <= lam * m(a) + (1.0 - lam) * m(b) + 1e-9 * (1.0 + std::fabs(m(b))),
            "orlicz: M must be convex");
    const double h = mid * 1e-6;
    const double fd = (m(mid + h) - m(mid - h)) / (2.0 * h);
    require(nearly_equal(fd, mprime(mid), 1e-3, 1e-9 * (1.0 + std::fabs(fd))),
            "orlicz: M' inconsistent with M");
  }
  OrliczSpec s;
  s.kind_ = OrliczKind::custom;
  s.m_ = std::move(m);
  s.mprime_ = std::move(mprime);
  return s;
}

double OrliczSpec::M(double u) const {
  require(u >= 0.0, "orlicz: argument must be nonnegative");
  return u == 0.0 ? 0.0 : m_(u);
}

double OrliczSpec::Mprime(double u) const {
  require(u >= 0.0, "orlicz: argument must be nonnegative");
  return mprime_(u);
}

std::optional<double> OrliczSpec::head_exponent() const {
  switch (kind_) {
    case OrliczKind::power:
      return p_ - 1.0;
    case OrliczKind::maxpow:
      return p_;
    case OrliczKind::log_example_2:
    case OrliczKind::log_example_3:
      return 1.0;  // M' ~ u near 0 (up to a slowly varying factor)
    case OrliczKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

// --- parsing -----------------------------------------------------------------

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(item);
  return out;
}

double num_or_throw(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw domain_error(std::string("bad number in ") + what + " spec: '" + s + "'");
}

}  // namespace

ConcaveWeight parse_weight(const std::string& spec) {
  const std::vector<std::string> parts = split_colon(spec);
  if (parts.size() == 2 && parts[0] == "pow")
    return ConcaveWeight::power(num_or_throw(parts[1], "weight"));
  throw domain_error("unknown weight spec '" + spec + "'; expected pow:alpha");
}

OrliczSpec parse_orlicz(const std::string& spec) {
  const std::vector<std::string> parts = split_colon(spec);
  if (parts.size() == 2 && parts[0] == "pow")
    return OrliczSpec::power(num_or_throw(parts[1], "orlicz"));
  if (parts.size() == 3 && parts[0] == "maxpow")
    return OrliczSpec::maxpow(num_or_throw(parts[1], "orlicz"), num_or_throw(parts[2], "orlicz"));
  if (spec == "log2") return OrliczSpec::log_example_2();
  if (spec == "log3") return OrliczSpec::log_example_3();
  throw domain_error("unknown orlicz spec '" + spec + "'; expected pow:p | maxpow:p:q | log2 | log3");
}

// --- moments: exact kinds ------------------------------------------------------

namespace {

// int_0^inf f*^q t^(alpha-1) dt for a step function, exact.
double moment_step(const StepFunction& f, double q, double alpha) {
  const StepFunction g = f.rearranged();
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double t = g.ends()[i];
    acc += std::pow(g.values()[i], q) * (std::pow(t, alpha) - std::pow(prev, alpha));
    prev = t;
  }
  return acc / alpha;
}

double moment_power(const PiecewisePower& f, double q, double alpha) {
  // Per piece: c^q int t^(alpha - 1 - expo q) dt, closed form.
  double acc = 0.0;
  for (const PowerPiece& p : f.pieces()) {
    if (p.coeff == 0.0) continue;
    const double cq = std::pow(p.coeff, q);
    const double e = alpha - p.expo * q;
    const double lo = p.lo;
    if (std::fabs(e) < 1e-14) {
      if (std::isinf(p.hi) || lo == 0.0) return kInf;
      acc += cq * std::log(p.hi / lo);
    } else if (std::isinf(p.hi)) {
      if (e > 0.0) return kInf;
      acc += -cq * std::pow(lo, e) / e;
    } else {
      if (lo == 0.0 && e < 0.0) return kInf;
      acc += cq * (std::pow(p.hi, e) - (lo == 0.0 ? 0.0 : std::pow(lo, e))) / e;
    }
  }
  return acc / alpha;
}

// --- moments: distribution route for the builtins ------------------------------

// Head panel [a, sup]: substitute tau = sup - w^8, which turns the square-root
// vanishing of lambda at the sup into a high-order zero in w.
double head_panel(const std::function<double(double)>& integrand, double a, double sup) {
  const double W = std::pow(sup - a, 0.125);
  auto g = [&](double w) {
    const double w4 = w * w * w * w;
    const double tau = sup - w4 * w4;
    if (tau <= 0.0 || tau >= sup) return 0.0;
    return integrand(tau) * 8.0 * w4 * w * w * w;
  };
  return gauss31(g, 0.0, 0.5 * W) + gauss31(g, 0.5 * W, W);
}

double tau_integral_sinc(const std::function<double(double)>& lambda, double q, double alpha,
                         double tail_coeff) {
  // I = int_0^1 lambda(tau)^alpha tau^(q-1) dtau. Integrable iff q > alpha
  // (lambda ~ tail_coeff/tau at 0).
  if (q <= alpha) return kInf;
  auto integrand = [&](double tau) { return std::pow(lambda(tau), alpha) * std::pow(tau, q - 1.0); };

  constexpr int kPeaks = 40;
  double acc = head_panel(integrand, sinc_peak(1).height, 1.0);
  // Between consecutive peak heights lambda is smooth; the sin^2 substitution
  // absorbs the square-root kinks at both ends.
  for (int k = 1; k < kPeaks; ++k)
    acc += gauss31_sinsq(integrand, sinc_peak(static_cast<std::size_t>(k) + 1).height,
                         sinc_peak(static_cast<std::size_t>(k)).height);
  // Octave panels: kinks below the last tracked peak are O(1/k) relative and
  // harmless to a 31-point rule.
  constexpr double kTauCut = 1e-5;
  double hi = sinc_peak(kPeaks).height;
  while (hi > kTauCut) {
    const double lo = std::max(0.5 * hi, kTauCut);
    acc += gauss31(integrand, lo, hi);
    hi = lo;
  }
  acc += std::pow(tail_coeff, alpha) * std::pow(kTauCut, q - alpha) / (q - alpha);
  return acc;
}

double tau_integral_gauss(double q, double alpha) {
  auto integrand = [&](double tau) {
    return std::pow(gauss_lambda(tau), alpha) * std::pow(tau, q - 1.0);
  };
  double acc = head_panel(integrand, 0.5, 1.0);
  constexpr double kFloor = 1e-20;
  double hi = 0.5;
  while (hi > kFloor) {
    const double lo = std::max(0.25 * hi, kFloor);
    acc += gauss31(integrand, lo, hi);
    hi = lo;
  }
  // Remainder below the floor, using lambda ~ sqrt(2 ln(1/tau)/pi) frozen at
  // the floor (slowly varying).
  acc += std::pow(kFloor, q) / q * std::pow(gauss_lambda(kFloor), alpha);
  return acc;
}

double tau_integral_generic(const Sampler& f, double q, double alpha, const Tolerance& tol) {
  const double sup = f.sup();
  auto integrand = [&](double tau) {
    return std::pow(f.distribution(tau, tol), alpha) * std::pow(tau, q - 1.0);
  };
  double acc = head_panel(integrand, 0.5 * sup, sup);
  const double cut = sup * 1e-9;
  double hi = 0.5 * sup;
  while (hi > cut) {
    const double lo = std::max(0.5 * hi, cut);
    acc += gauss31(integrand, lo, hi);
    hi = lo;
  }
  // Empirical power tail lambda(tau) ~ lambda(cut) (tau/cut)^s.
  const double l1 = f.distribution(cut, tol), l2 = f.distribution(2.0 * cut, tol);
  if (l1 > 0.0 && l2 > 0.0) {
    const double s = std::log(l2 / l1) / std::log(2.0);
    const double denom = q + s * alpha;
    if (denom <= 0.0) return kInf;
    acc += std::pow(l1, alpha) * std::pow(cut, q) / denom;
  }
  return acc;
}

// --- moments: rearrangement route ---------------------------------------------

// J = int_0^inf fstar(t)^q t^(alpha-1) dt integrated in u = t^alpha up to
// T^alpha, plus a power tail fitted at T when the support is unbounded.
double t_integral(const std::function<double(double)>& fstar, double q, double alpha, double T,
                  bool power_tail) {
  auto F = [&](double u) {
    const double t = std::pow(u, 1.0 / alpha);
    return std::pow(fstar(std::max(t, 1e-300)), q);
  };
  const double U = std::pow(T, alpha);
  double acc = 0.0;
  // Head: f* is flat near 0; half-octave geometric panels from U*1e-8 keep
  // the corner points of f* from degrading the rule.
  const double u0 = U * 1e-8;
  acc += gauss15(F, 0.0, u0);
  double lo = u0;
  const double ratio = std::sqrt(2.0);
  while (lo < U) {
    const double hi = std::min(ratio * lo, U);
    acc += gauss31(F, lo, hi);
    lo = hi;
  }
  acc /= alpha;
  if (power_tail) {
    const double c = fstar(T) * T;  // f* ~ c/t beyond T
    if (c > 0.0) {
      if (q <= alpha) return kInf;
      acc += std::pow(c, q) * std::pow(T, alpha - q) / (q - alpha);
    }
  }
  return acc;
}

}  // namespace

double rearranged_moment_dist(const AnyFunction& f, double q, double alpha,
                              const Tolerance& tol) {
  require(q > 0.0 && alpha > 0.0, "moment: q and alpha must be positive");
  if (const StepFunction* s = f.step()) return moment_step(*s, q, alpha);
  if (const PiecewisePower* p = f.power()) return moment_power(*p, q, alpha);
  const Sampler& s = *f.sampler();
  const double scale = q / alpha;
  if (s.name() == "sinc") return scale * tau_integral_sinc(sinc_lambda, q, alpha, 2.0 / kPi);
  if (s.name() == "sincpi") {
    auto lam = [](double tau) { return sinc_lambda(tau) / kPi; };
    return scale * tau_integral_sinc(lam, q, alpha, 2.0 / (kPi * kPi));
  }
  if (s.name() == "gauss") return scale * tau_integral_gauss(q, alpha);
  return scale * tau_integral_generic(s, q, alpha, tol);
}

double rearranged_moment_rearr(const AnyFunction& f, double q, double alpha,
                               const Tolerance& tol) {
  require(q > 0.0 && alpha > 0.0, "moment: q and alpha must be positive");
  if (const StepFunction* s = f.step()) return moment_step(*s, q, alpha);
  if (const PiecewisePower* p = f.power()) return moment_power(*p, q, alpha);
  const Sampler& s = *f.sampler();
  if (s.name() == "gauss") {
    // Already nonincreasing: f* is the evaluator itself, light tail.
    return t_integral([&](double t) { return s(t); }, q, alpha, 8.0, false);
  }
  auto fstar = [&](double t) { return s.rearrangement(t, tol); };
  return t_integral(fstar, q, alpha, 200.0, true);
}

// --- norms ---------------------------------------------------------------------

double lp_norm(const AnyFunction& f, double p, const Tolerance& tol) {
  require(p > 0.0, "lp norm: p must be positive");
  const double val = rearranged_moment_dist(f, p, 1.0, tol);
  return std::isinf(val) ? kInf : std::pow(val, 1.0 / p);
}

namespace {

// Distribution-side exact Lorentz sum for a step function:
// sum lambda_j^(q/p) (v_j^q - v_{j+1}^q) over descending distinct values.
double lorentz_step_dist(const StepFunction& f, double p, double q) {
  const StepFunction g = f.rearranged();
  double acc = 0.0;
  const std::size_t n = g.pieces();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = g.values()[i];
    const double vnext = i + 1 < n ? g.values()[i + 1] : 0.0;
    acc += std::pow(g.ends()[i], q / p) * (std::pow(v, q) - std::pow(vnext, q));
  }
  return acc;
}

}  // namespace

double lorentz_norm(const AnyFunction& f, double p, double q, LorentzMethod method,
                    const Tolerance& tol) {
  require(p > 0.0 && q > 0.0, "lorentz norm: p and q must be positive");
  const double alpha = q / p;
  double qth = 0.0;
  if (const StepFunction* s = f.step()) {
    qth = method == LorentzMethod::distribution ? lorentz_step_dist(*s, p, q)
                                                : alpha * moment_step(*s, q, alpha);
  } else if (method == LorentzMethod::distribution) {
    qth = alpha * rearranged_moment_dist(f, q, alpha, tol);
  } else {
    qth = alpha * rearranged_moment_rearr(f, q, alpha, tol);
  }
  return std::isinf(qth) ? kInf : std::pow(qth, 1.0 / q);
}

double lambda_phi_norm(const AnyFunction& f, const ConcaveWeight& phi, double r,
                       const Tolerance& tol) {
  (void)tol;
  require(r >= 1.0, "lambda_phi norm: r must be >= 1");
  if (const StepFunction* sf = f.step()) {
    const StepFunction g = sf->rearranged();
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < g.pieces(); ++i) {
      acc += std::pow(g.values()[i], r) * (phi(g.ends()[i]) - phi(prev));
      prev = g.ends()[i];
    }
    return std::pow(acc, 1.0 / r);
  }
  if (const PiecewisePower* pw = f.power()) {
    const std::optional<double> a = phi.power_exponent();
    require(a.has_value(), "lambda_phi norm: power-tail inputs need a power weight");
    // d phi = a t^(a-1) dt; every piece integral is closed form.
    double acc = 0.0;
    for (const PowerPiece& piece : pw->pieces()) {
      if (piece.coeff == 0.0) continue;
      const double cr = std::pow(piece.coeff, r);
      const double e = *a - piece.expo * r;
      if (std::fabs(e) < 1e-14) {
        if (piece.lo == 0.0 || std::isinf(piece.hi)) return kInf;
        acc += cr * *a * std::log(piece.hi / piece.lo);
      } else if (std::isinf(piece.hi)) {
        if (e > 0.0) return kInf;
        acc += -cr * (*a / e) * std::pow(piece.lo, e);
      } else {
        if (piece.lo == 0.0 && e < 0.0) return kInf;
        acc += cr * (*a / e) *
               (std::pow(piece.hi, e) - (piece.lo == 0.0 ? 0.0 : std::pow(piece.lo, e)));
      }
    }
    return std::pow(acc, 1.0 / r);
  }
  throw domain_error("lambda_phi norm: sampler inputs not supported");
}

MarcinkiewiczResult marcinkiewicz_norm(const AnyFunction& f, const ConcaveWeight& phi,
                                       MarcinkiewiczConvention conv, const Tolerance& tol) {
  (void)tol;
  const StepFunction* sf = f.step();
  const PiecewisePower* pw = f.power();
  require(sf != nullptr || pw != nullptr,
          "marcinkiewicz norm: needs exactly computable partial integrals");
  auto partial = [&](double t) {
    return sf ? sf->partial_integral(t) : pw->partial_integral(t);
  };
  auto Q = [&](double t) {
    const double num = partial(t);
    return conv == MarcinkiewiczConvention::definition ? num / phi(t) : phi(t) * num / t;
  };

  // Geometric scan with the profile's own breakpoints mixed in.
  std::vector<double> grid = geometric_grid(1e-8, 1e8, 64);
  if (sf)
    for (double t : sf->rearranged().ends()) grid.push_back(t);
  if (pw)
    for (const PowerPiece& p : pw->pieces())
      if (std::isfinite(p.hi)) grid.push_back(p.hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  double best = 0.0;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = Q(grid[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Golden-section refinement around the grid argmax.
  {
    double a = grid[best_i > 0 ? best_i - 1 : 0];
    double b = grid[std::min(best_i + 1, grid.size() - 1)];
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = Q(x1), f2 = Q(x2);
    for (int it = 0; it < 120 && b - a > 1e-13 * b; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = Q(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = Q(x1);
      }
    }
    const double mid = 0.5 * (a + b);
    if (Q(mid) > best) {
      best = Q(mid);
      grid[best_i] = mid;
    }
  }

  MarcinkiewiczResult res;
  res.value = best;
  res.achieving_t = grid[best_i];

  // Growth test at the upper end: if Q keeps increasing, extrapolate the
  // monotone tail (Aitken) or report divergence.
  const double T = grid.back();
  const double q1 = Q(T / 16.0), q2 = Q(T / 4.0), q3 = Q(T);
  if (q3 > q2 && q2 > q1) {
    const double d1 = q2 - q1, d2 = q3 - q2;
    if (d2 >= d1 * (1.0 - 1e-12)) {
      res.value = kInf;
      res.achieving_t = kInf;
      res.at_limit = true;
    } else {
      const double limit = q3 + d2 * d2 / (d1 - d2);
      if (limit > res.value) {
        res.value = limit;
        res.achieving_t = kInf;
        res.at_limit = true;
      }
    }
  }
  return res;
}

// --- Luxemburg ------------------------------------------------------------------

namespace {

// Modular of a power piece tail by substituting u = c t^(-expo) / lambda:
// int_a^inf M(c t^-expo / lambda) dt = (1/expo) (c/lambda)^(1/expo)
//   int_0^{u_a} M(u) u^(-1 - 1/expo) du.
double modular_power_tail(const OrliczSpec& M, double inv_expo, double coeff_over_lambda,
                          double u_hi) {
  auto g = [&](double u) { return M.M(u) * std::pow(u, -1.0 - inv_expo); };
  // Geometric panels down from u_hi with Richardson head estimate.
  double acc = 0.0, last = 0.0, hi = u_hi;
  double ratio = 0.0;
  for (int j = 0; j < 160; ++j) {
    const double lo = 0.5 * hi;
    const double panel = gauss15(g, lo, hi);
    if (j > 4 && last > 0.0) {
      ratio = panel / last;
      if (ratio >= 1.0) return kInf;  // integrand not decaying: divergent head
      if (panel < 1e-17 * acc) {
        acc += panel * ratio / (1.0 - ratio);  // geometric remainder
        break;
      }
    }
    acc += panel;
    last = panel;
    hi = lo;
  }
  return inv_expo * std::pow(coeff_over_lambda, inv_expo) * acc;
}

double modular_piecewise_power(const PiecewisePower& f, const OrliczSpec& M, double lambda) {
  double acc = 0.0;
  for (const PowerPiece& p : f.pieces()) {
    if (p.coeff == 0.0) continue;
    if (p.expo == 0.0) {
      if (std::isinf(p.hi)) return kInf;  // constant tail has infinite modular
      acc += M.M(p.coeff / lambda) * (p.hi - p.lo);
      continue;
    }
    const double u_at_lo = p.lo > 0.0 ? p.value(p.lo) / lambda : kInf;
    const double u_at_hi = std::isinf(p.hi) ? 0.0 : p.value(p.hi) / lambda;
    if (std::isinf(p.hi)) {
      if (std::isinf(u_at_lo)) return kInf;
      acc += modular_power_tail(M, 1.0 / p.expo, p.coeff / lambda, u_at_lo);
    } else {
      // Finite power piece: smooth integrand, direct quadrature.
      auto g = [&](double t) { return M.M(p.value(t) / lambda); };
      if (std::isinf(u_at_lo)) return kInf;
      acc += gauss31_refined(g, p.lo, p.hi, 1e-12);
      (void)u_at_hi;
    }
  }
  return acc;
}

// Modular of a sampler through its distribution:
// int M(f/lambda) dt = int_0^{sup/lambda} lambda_f(lambda u) M'(u) du.
double modular_sampler(const Sampler& f, const OrliczSpec& M, double lambda,
                       const Tolerance& tol) {
  const double u_max = f.sup() / lambda;
  auto g = [&](double u) { return f.distribution(lambda * u, tol) * M.Mprime(u); };
  double acc = 0.0;
  const double u_cut = u_max * 1e-4;
  double hi = u_max;
  while (hi > u_cut) {
    const double lo = std::max(0.5 * hi, u_cut);
    acc += gauss15(g, lo, hi);
    hi = lo;
  }
  // Head: lambda_f(lambda u) ~ C/(lambda u); integrate M'(u)/u with M' ~ u^s.
  const double lam_cut = f.distribution(lambda * u_cut, tol);
  const double C = lam_cut * u_cut;  // lambda_f(lambda u) * u frozen at the cut
  const double s = M.head_exponent().value_or(1.0);
  if (s <= 0.0) return kInf;
  acc += C / s * M.Mprime(u_cut);
  return acc;
}

}  // namespace

double orlicz_modular(const AnyFunction& f, const OrliczSpec& M, double lambda,
                      const Tolerance& tol) {
  require(lambda > 0.0, "modular: lambda must be positive");
  if (const StepFunction* s = f.step()) {
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < s->pieces(); ++i) {
      acc += M.M(s->values()[i] / lambda) * (s->ends()[i] - prev);
      prev = s->ends()[i];
    }
    return acc;
  }
  if (const PiecewisePower* p = f.power()) return modular_piecewise_power(*p, M, lambda);
  return modular_sampler(*f.sampler(), M, lambda, tol);
}

double luxemburg_norm(const AnyFunction& f, const OrliczSpec& M, const Tolerance& tol) {
  const double sup = f.sup();
  if (sup == 0.0) return 0.0;
  // Bracket: modular(lambda) is strictly decreasing in lambda.
  double hi = 1.0;
  int guard = 0;
  while (orlicz_modular(f, M, hi, tol) > 1.0) {
    hi *= 2.0;
    if (++guard > 120) return kInf;
  }
  double lo = hi;
  guard = 0;
  while (orlicz_modular(f, M, lo, tol) <= 1.0) {
    lo *= 0.5;
    if (++guard > 120) return 0.0;
  }
  for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (orlicz_modular(f, M, mid, tol) <= 1.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

CondMReport condM_monotone(const OrliczSpec& M, double eps, const std::vector<double>& grid) {
  require(eps > 0.0 && eps < 1.0, "condM: eps must lie in (0,1)");
  const std::vector<double> xs = grid.empty() ? geometric_grid(1e-6, 1e6, 32) : grid;
  CondMReport rep;
  double prev_ratio = kInf;
  for (double x : xs) {
    const double den = M.Mprime(x);
    if (den == 0.0) {
      rep.excluded.push_back(x);
      continue;
    }
    const double ratio = M.Mprime(eps * x) / den;
    ++rep.points_checked;
    if (ratio > prev_ratio * (1.0 + 1e-12) + 1e-15) {
      rep.passes = false;
      rep.first_violation_x = x;
      rep.first_violation_drop = ratio - prev_ratio;
      break;
    }
    prev_ratio = ratio;
  }
  return rep;
}

}  // namespace ricmp
