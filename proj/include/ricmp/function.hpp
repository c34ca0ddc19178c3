#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ricmp/piecewise_power.hpp"
#include "ricmp/sampler.hpp"
#include "ricmp/step_function.hpp"

namespace ricmp {

// Value-semantic union of the three function representations. Distribution
// and rearrangement are exact for steps and power pieces, root-finding based
// for samplers.
class AnyFunction {
 public:
  AnyFunction(StepFunction f) : v_(std::move(f)) {}
  AnyFunction(PiecewisePower f) : v_(std::move(f)) {}
  AnyFunction(Sampler f) : v_(std::move(f)) {}

  double distribution(double tau, const Tolerance& tol = default_tolerance()) const;
  double rearrangement(double t, const Tolerance& tol = default_tolerance()) const;
  double sup() const;
  std::optional<double> support_measure() const;  // nullopt would never happen; +inf possible
  bool exact() const { return !std::holds_alternative<Sampler>(v_); }

  const StepFunction* step() const { return std::get_if<StepFunction>(&v_); }
  const PiecewisePower* power() const { return std::get_if<PiecewisePower>(&v_); }
  const Sampler* sampler() const { return std::get_if<Sampler>(&v_); }

  std::string describe() const;

 private:
  std::variant<StepFunction, PiecewisePower, Sampler> v_;
};

// Mini-language: "step t1:v1,t2:v2,..." | "sinc" | "sincpi" | "gauss" |
// "powtail a:alpha". Throws domain_error with the grammar on bad input.
AnyFunction parse_function(const std::string& spec);

}  // namespace ricmp
