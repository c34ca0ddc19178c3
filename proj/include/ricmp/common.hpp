#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ricmp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Numerical knobs shared across the library. The general tolerance can be
// overridden per call site or through the REARRANGE_TOL environment variable
// (handled by the CLI layer).
struct Tolerance {
  double general = 1e-6;    // target absolute/relative accuracy of reported values
  double root_t = 1e-12;    // absolute tolerance of bisection in the t variable
  double exact = 1e-12;     // slack for comparisons that are exact up to rounding
};

inline const Tolerance& default_tolerance() {
  static Tolerance tol;
  return tol;
}

class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when declared metadata (monotone pieces, envelopes) contradicts the
// evaluator, e.g. a root bracket fails on a piece declared monotone.
class metadata_error : public std::logic_error {
 public:
  explicit metadata_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown when an operation's mathematical precondition fails; carries the name
// of the failed hypothesis.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& hypothesis)
      : std::runtime_error("precondition failed: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw domain_error(what);
}

inline bool nearly_equal(double a, double b, double rel, double abs = 0.0) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(abs, rel * scale);
}

}  // namespace ricmp
