#pragma once

#include <vector>

#include "ricmp/common.hpp"

namespace ricmp {

// Nonnegative simple function on (0,inf): value vals[i] is held on the
// interval (ends[i-1], ends[i]] with ends[-1] := 0, and the function vanishes
// beyond ends.back(). Canonical form: ends strictly increasing, adjacent equal
// values merged, trailing zero intervals dropped. All exact computations
// (distribution, rearrangement, partial integrals) work off this form.
class StepFunction {
 public:
  StepFunction() = default;  // identically zero

  // Builds from interval right-endpoints and values; validates and
  // canonicalizes. Values are taken in absolute value.
  static StepFunction make(std::vector<double> ends, std::vector<double> vals);

  // Indicator c * chi_(0,t0].
  static StepFunction indicator(double t0, double c = 1.0);

  const std::vector<double>& ends() const { return ends_; }
  const std::vector<double>& values() const { return vals_; }
  bool zero() const { return ends_.empty(); }
  std::size_t pieces() const { return ends_.size(); }

  double value(double t) const;   // t > 0
  double sup() const;             // max value (0 for the zero function)
  double support_measure() const; // total length where f > 0
  double end() const { return ends_.empty() ? 0.0 : ends_.back(); }

  // lambda_f(tau) = |{ f > tau }|, exact.
  double distribution(double tau) const;

  // Nonincreasing rearrangement, exact: values sorted descending with their
  // lengths, as a canonical StepFunction.
  StepFunction rearranged() const;
  double rearrangement(double t) const;
  bool nonincreasing() const;

  // int_0^t (f*)^p, exact (piecewise-constant integrand).
  double partial_power_integral(double p, double t) const;
  double total_power_integral(double p) const;

  // int_0^t f*, exact; equals the (L^1,L^inf) K-functional.
  double partial_integral(double t) const;

  // f* restricted to (0,s), as a step function.
  StepFunction truncated_rearrangement(double s) const;

  StepFunction scaled(double c) const;  // c * f, c >= 0

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.ends_ == b.ends_ && a.vals_ == b.vals_;
  }

 private:
  std::vector<double> ends_;
  std::vector<double> vals_;

  void canonicalize();
};

}  // namespace ricmp
