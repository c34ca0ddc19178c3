#pragma once

#include <functional>

namespace ricmp {

// Fixed Gauss-Legendre rules on [a,b].
double gauss15(const std::function<double(double)>& f, double a, double b);
double gauss31(const std::function<double(double)>& f, double a, double b);

// gauss31 with one bisection refinement level: if the two-panel result differs
// from the one-panel result by more than rel_tol of the running scale, the
// refined value is kept.
double gauss31_refined(const std::function<double(double)>& f, double a, double b,
                       double rel_tol = 1e-10);

// Adaptive Simpson with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

// Integrates f over [a,b] after the substitution x = a + (b-a)*sin^2(theta),
// which flattens algebraic endpoint singularities of square-root type.
double gauss31_sinsq(const std::function<double(double)>& f, double a, double b);

}  // namespace ricmp
