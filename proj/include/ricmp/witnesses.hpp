#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ricmp/step_function.hpp"

namespace ricmp {

// Counterexample pair for a query outside the sharp function region:
// (f,g) crosses once with f* dominating near 0, the (p0,q0) quasi-norms are
// equal, and ||g||_(p,q) > ||f||_(p,q) strictly.
struct FunctionWitness {
  StepFunction f, g;
  int case_id = 0;  // 1: p < p0; 2: q < q0; 3: q/p > q0/p0
  double a = 0.0, b = 0.0, h = 0.0;
  double norm_f_p0q0 = 0.0, norm_g_p0q0 = 0.0;
  double norm_f_pq = 0.0, norm_g_pq = 0.0;
  double refutation_margin = 0.0;  // ||g||_(p,q)^q - ||f||_(p,q)^q
};

// Builds the witness by the constructive recipe of the sharpness proof; the
// returned pair always passes its defining inequalities (verified here).
// h_case1 only matters in case 1, where any h > 1 works.
FunctionWitness function_witness(double p0, double q0, double p, double q, double h_case1 = 2.0);

// Counterexample pair for a query outside the mirrored sequence region:
// x <> y (x* below then above y*), ||x||_(p0,q0) > ||y||_(p0,q0) and
// ||x||_(p,q) < ||y||_(p,q), all strict.
struct SequenceWitness {
  std::vector<double> x, y;  // at most two nonzero entries
  int region = 0;            // 1/2/3 for F1/F2/F3
  double r = 0.0, gamma = 0.0, gamma0 = 0.0;
  double alpha_used = 0.0, eps_used = 0.0;
  double norm_x_p0q0 = 0.0, norm_y_p0q0 = 0.0;
  double norm_x_pq = 0.0, norm_y_pq = 0.0;
};

SequenceWitness sequence_witness(double p0, double q0, double p, double q,
                                 std::optional<double> eps_override = std::nullopt);

// Random step pairs with the one-crossing structure (f* above g* up to a
// breakpoint, below after). With enforce_hypothesis the generator doubles the
// head bump until int (f*^q0 - g*^q0) d(t^(q0/p0)) >= 0. With
// force_smaller_l1 it instead appends mass to g far out so that
// ||f||_1 < ||g||_1 and the K-functionals genuinely cross.
struct NpPairConfig {
  double p0 = 2.0, q0 = 2.0;
  bool enforce_hypothesis = true;
  bool force_smaller_l1 = false;
  int max_pieces = 6;
};

std::pair<StepFunction, StepFunction> random_np_pair(std::mt19937_64& rng,
                                                     const NpPairConfig& cfg = {});

// Random pair of nonincreasing nonnegative sequences with x <> y and
// ||x||_(p0,q0) >= ||y||_(p0,q0) in the discrete Lorentz norm.
std::pair<std::vector<double>, std::vector<double>> random_crossed_sequences(
    std::mt19937_64& rng, std::size_t n, double p0, double q0);

}  // namespace ricmp
