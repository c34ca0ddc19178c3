#include "ricmp/special.hpp"

#include <array>
#include <cmath>

#include "ricmp/common.hpp"

namespace ricmp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Godfrey's coefficients for g = 7.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double x) {
  // Valid for x >= 0.5; returns Gamma(x).
  double a = kLanczos[0];
  const double t = x + 6.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + static_cast<double>(i) - 1.0);
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  require(x > 0.0 && std::isfinite(x), "gamma: argument must be positive and finite");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
  return lanczos_core(x);
}

double log_gamma(double x) {
  require(x > 0.0 && std::isfinite(x), "log gamma: argument must be positive and finite");
  if (x < 40.0) return std::log(gamma_fn(x));
  // Stirling with a short correction series; plenty for the exponents used here.
  const double inv = 1.0 / x;
  const double series = inv / 12.0 - inv * inv * inv / 360.0;
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace ricmp
