#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ricmp/common.hpp"

namespace ricmp {

// A maximal interval on which the evaluator is strictly monotone. hi == +inf
// is allowed for a final decreasing piece.
struct MonotonePiece {
  double lo = 0.0;
  double hi = 0.0;
  bool increasing = false;
};

// Analytic nonnegative function on (0,inf) given by an evaluator plus
// monotone-piece metadata and a decreasing envelope with env -> 0. The
// envelope truncates tail searches: once env(piece.lo) < tau, no later piece
// can cross level tau.
class Sampler {
 public:
  using Evaluator = std::function<double(double)>;
  using PieceGen = std::function<std::optional<MonotonePiece>(std::size_t)>;

  Sampler(std::string name, Evaluator eval, PieceGen pieces, Evaluator envelope,
          double sup_value);

  const std::string& name() const { return name_; }
  double operator()(double t) const { return eval_(t); }
  double envelope(double t) const { return env_(t); }
  double sup() const { return sup_; }
  std::optional<MonotonePiece> piece(std::size_t k) const { return pieces_(k); }

  // lambda_f(tau). Uses the dedicated fast evaluator when one is installed
  // (the sinc builtins), otherwise the generic piece walk.
  double distribution(double tau, const Tolerance& tol = default_tolerance()) const;

  // lambda_f(tau) by bracketed bisection on each monotone piece, truncating
  // once the envelope falls below tau. Absolute error <= a few root_t.
  double distribution_generic(double tau, const Tolerance& tol = default_tolerance()) const;

  // f*(t) by bisection on tau -> lambda(tau), which is nonincreasing.
  double rearrangement(double t, const Tolerance& tol = default_tolerance()) const;

  void set_distribution_override(Evaluator lambda) { lambda_ = std::move(lambda); }

 private:
  std::string name_;
  Evaluator eval_;
  PieceGen pieces_;
  Evaluator env_;
  Evaluator lambda_;  // optional
  double sup_;
};

// Builtins: |sin t / t|, |sin(pi t)/(pi t)|, exp(-pi t^2 / 2).
Sampler make_sinc();
Sampler make_sincpi();
Sampler make_gauss();

// k-th interior peak of |sin t / t| (k >= 1): location in (k pi, (k+1) pi)
// and peak value. Computed once and cached.
struct SincPeak {
  double location;
  double height;
};
const SincPeak& sinc_peak(std::size_t k);

// Distribution function of |sin t / t|, summing lobe widths with safeguarded
// Newton root-finding; considerably faster than the generic piece walk and
// memoized per thread. Accuracy near machine precision.
double sinc_lambda(double tau);

// Distribution function of exp(-pi t^2/2): sqrt(2 ln(1/tau) / pi) for tau<1.
double gauss_lambda(double tau);

}  // namespace ricmp
