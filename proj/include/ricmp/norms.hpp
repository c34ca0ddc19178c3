#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ricmp/function.hpp"

namespace ricmp {

// Increasing concave weight on [0,inf) with phi(0+) = 0.
class ConcaveWeight {
 public:
  static ConcaveWeight power(double alpha);  // t^alpha, 0 < alpha <= 1
  static ConcaveWeight custom(std::function<double(double)> phi);

  double operator()(double t) const { return t <= 0.0 ? 0.0 : phi_(t); }
  std::optional<double> power_exponent() const { return alpha_; }

 private:
  std::function<double(double)> phi_;
  std::optional<double> alpha_;
};

enum class OrliczKind { power, maxpow, log_example_2, log_example_3, custom };

// Orlicz function M: nondecreasing, convex, M(0) = 0, with its derivative.
class OrliczSpec {
 public:
  static OrliczSpec power(double p);            // M(u) = u^p, p >= 1
  static OrliczSpec maxpow(double p, double q); // M'(u) = max(u^p, u^q), 0 < p < q
  static OrliczSpec log_example_2();  // M' = u on [0,1], u^2/ln(eu) beyond
  static OrliczSpec log_example_3();  // M' = u/ln(e/u) on [0,1], u^2 beyond
  static OrliczSpec custom(std::function<double(double)> m,
                           std::function<double(double)> mprime);

  double M(double u) const;
  double Mprime(double u) const;
  OrliczKind kind() const { return kind_; }
  // Exponent s such that M'(u) ~ c u^s as u -> 0 (used for head extrapolation
  // of modular integrals); nullopt for custom kinds.
  std::optional<double> head_exponent() const;

 private:
  OrliczKind kind_ = OrliczKind::custom;
  double p_ = 0.0, q_ = 0.0;
  std::function<double(double)> m_, mprime_;
};

// Parses "pow:a" into a weight; "pow:p" | "maxpow:p:q" | "log2" | "log3" into
// an Orlicz spec.
ConcaveWeight parse_weight(const std::string& spec);
OrliczSpec parse_orlicz(const std::string& spec);

// --- moments of the rearrangement -----------------------------------------
// Both routes compute L(f;q,alpha) = int_0^inf f*(t)^q t^(alpha-1) dt, which
// carries every L^p / L(p,q) quasi-norm here. The distribution route uses
// L = (q/alpha) int_0^sup lambda(tau)^alpha tau^(q-1) dtau; the rearrangement
// route integrates f* directly. They agree by Fubini and serve as each
// other's oracle for samplers.
double rearranged_moment_dist(const AnyFunction& f, double q, double alpha,
                              const Tolerance& tol = default_tolerance());
double rearranged_moment_rearr(const AnyFunction& f, double q, double alpha,
                               const Tolerance& tol = default_tolerance());

// --- norms -----------------------------------------------------------------

double lp_norm(const AnyFunction& f, double p, const Tolerance& tol = default_tolerance());

enum class LorentzMethod { distribution, rearrangement };

// L(p,q) quasi-norm; +inf when the defining integral diverges.
double lorentz_norm(const AnyFunction& f, double p, double q,
                    LorentzMethod method = LorentzMethod::rearrangement,
                    const Tolerance& tol = default_tolerance());

// Lorentz Lambda_r(phi) norm: (int f*^r dphi)^(1/r); exact for steps.
double lambda_phi_norm(const AnyFunction& f, const ConcaveWeight& phi, double r,
                       const Tolerance& tol = default_tolerance());

enum class MarcinkiewiczConvention {
  definition,  // sup (1/phi(t)) int_0^t f*
  dual,        // sup (phi(t)/t) int_0^t f*
};

struct MarcinkiewiczResult {
  double value = 0.0;         // +inf when the sup diverges
  double achieving_t = 0.0;   // +inf when the sup is a t -> inf limit
  bool at_limit = false;
};

MarcinkiewiczResult marcinkiewicz_norm(const AnyFunction& f, const ConcaveWeight& phi,
                                       MarcinkiewiczConvention conv,
                                       const Tolerance& tol = default_tolerance());

// Luxemburg norm: bisection on lambda for modular <= 1; exact modulars for
// steps, closed-form distribution integrals otherwise.
double luxemburg_norm(const AnyFunction& f, const OrliczSpec& M,
                      const Tolerance& tol = default_tolerance());

// Orlicz modular int M(|f|/lambda); building block of the Luxemburg norm.
double orlicz_modular(const AnyFunction& f, const OrliczSpec& M, double lambda,
                      const Tolerance& tol = default_tolerance());

struct CondMReport {
  bool passes = true;
  double first_violation_x = 0.0;
  double first_violation_drop = 0.0;       // r(x_next) - r(x) at the violation
  std::vector<double> excluded;            // grid points with M'(x) = 0
  int points_checked = 0;
};

// Checks x -> M'(eps x)/M'(x) nonincreasing on a geometric grid.
CondMReport condM_monotone(const OrliczSpec& M, double eps,
                           const std::vector<double>& grid = {});

}  // namespace ricmp
