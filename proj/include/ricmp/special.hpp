#pragma once

namespace ricmp {

// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
// reflection formula for x < 1/2. Relative error around 1e-13 on (1e-3, 50).
double gamma_fn(double x);

double log_gamma(double x);  // x > 0

}  // namespace ricmp
