#pragma once

#include <vector>

#include "ricmp/common.hpp"

namespace ricmp {

// One piece: value coeff * t^(-expo) on (lo, hi]; hi may be +inf on the last
// piece. expo >= 0.
struct PowerPiece {
  double lo = 0.0;
  double hi = 0.0;
  double coeff = 0.0;
  double expo = 0.0;

  double value(double t) const;
  // int_a^b (coeff * t^-expo)^r dt, closed form, a,b within [lo,hi].
  double power_integral(double r, double a, double b) const;
};

// Nonincreasing function on (0,inf) made of power pieces with closed-form
// partial integrals. Used for the power-tail family chi_(0,a) + t^-alpha on
// [a,inf), whose Marcinkiewicz suprema are only attained in the limit t->inf;
// closed forms keep those comparisons free of quadrature error.
class PiecewisePower {
 public:
  static PiecewisePower make(std::vector<PowerPiece> pieces);

  // chi_(0,a) + t^-alpha * chi_[a,inf), a >= 1 so the whole profile stays
  // nonincreasing.
  static PiecewisePower power_tail(double a, double alpha);

  const std::vector<PowerPiece>& pieces() const { return pieces_; }
  bool has_infinite_tail() const;

  double value(double t) const;                 // t > 0
  double rearrangement(double t) const { return value(t); }  // already nonincreasing
  double distribution(double tau) const;        // exact inverse
  double sup() const;
  double support_measure() const;               // +inf with an infinite tail

  double partial_integral(double t) const;               // int_0^t f
  double partial_power_integral(double r, double t) const;  // int_0^t f^r
  // int_0^inf f^r; +inf when divergent.
  double total_power_integral(double r) const;

  PiecewisePower truncated(double s) const;  // f * chi_(0,s)

 private:
  std::vector<PowerPiece> pieces_;
};

}  // namespace ricmp
