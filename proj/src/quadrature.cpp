#include "ricmp/quadrature.hpp"

#include <array>
#include <cmath>

namespace ricmp {
namespace {

// Nodes/weights for the positive half of the symmetric rules.
constexpr std::array<double, 8> kG15X = {
    0.0000000000000000, 0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
    0.7244177313601701, 0.8482065834104272, 0.9372733924007060, 0.9879925180204854};
constexpr std::array<double, 8> kG15W = {
    0.2025782419255609, 0.1984314853271112, 0.1861610000155619, 0.1662692058169938,
    0.1395706779261539, 0.1071592204671718, 0.0703660474881081, 0.0307532419961186};

constexpr std::array<double, 16> kG31X = {
    0.0000000000000000, 0.0995553121523415, 0.1981211993355706, 0.2947180699817016,
    0.3883859016082329, 0.4781937820449025, 0.5632491614071493, 0.6427067229242603,
    0.7157767845868532, 0.7817331484166249, 0.8399203201462674, 0.8897600299482711,
    0.9307569978966481, 0.9625039250929497, 0.9846859096651525, 0.9970874818194770};
constexpr std::array<double, 16> kG31W = {
    0.0997205447934263, 0.0992250112266720, 0.0977433353863285, 0.0952902429123194,
    0.0918901138936414, 0.0875767406084777, 0.0823929917615891, 0.0763903865987765,
    0.0696285832354101, 0.0621747865610286, 0.0541030824249166, 0.0454937075272008,
    0.0364322739123859, 0.0270090191849786, 0.0173186207903113, 0.0074708315792505};

template <std::size_t N>
double gauss_sym(const std::function<double(double)>& f, double a, double b,
                 const std::array<double, N>& xs, const std::array<double, N>& ws) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = ws[0] * f(mid);
  for (std::size_t i = 1; i < N; ++i) {
    const double dx = half * xs[i];
    sum += ws[i] * (f(mid - dx) + f(mid + dx));
  }
  return sum * half;
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (depth <= 0 || std::fabs(err) <= tol) return left + right + err;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double gauss15(const std::function<double(double)>& f, double a, double b) {
  return gauss_sym(f, a, b, kG15X, kG15W);
}

double gauss31(const std::function<double(double)>& f, double a, double b) {
  return gauss_sym(f, a, b, kG31X, kG31W);
}

double gauss31_refined(const std::function<double(double)>& f, double a, double b,
                       double rel_tol) {
  const double coarse = gauss31(f, a, b);
  const double mid = 0.5 * (a + b);
  const double fine = gauss31(f, a, mid) + gauss31(f, mid, b);
  if (std::fabs(fine - coarse) <= rel_tol * (std::fabs(fine) + 1e-300)) return fine;
  return gauss31_refined(f, a, mid, rel_tol) + gauss31_refined(f, mid, b, rel_tol);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double gauss31_sinsq(const std::function<double(double)>& f, double a, double b) {
  const double w = b - a;
  auto g = [&](double th) {
    const double s = std::sin(th);
    return f(a + w * s * s) * w * 2.0 * s * std::cos(th);
  };
  constexpr double kHalfPi = 1.5707963267948966;
  return gauss31(g, 0.0, kHalfPi);
}

}  // namespace ricmp
