#include "ricmp/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ricmp {

StepFunction StepFunction::make(std::vector<double> ends, std::vector<double> vals) {
  require(ends.size() == vals.size(), "step function: ends/values size mismatch");
  double prev = 0.0;
  for (double t : ends) {
    require(std::isfinite(t) && t > prev, "step function: breakpoints must be finite and strictly increasing");
    prev = t;
  }
  for (double& v : vals) {
    require(std::isfinite(v), "step function: values must be finite");
    v = std::fabs(v);
  }
  StepFunction f;
  f.ends_ = std::move(ends);
  f.vals_ = std::move(vals);
  f.canonicalize();
  return f;
}

StepFunction StepFunction::indicator(double t0, double c) {
  require(t0 > 0.0, "indicator: endpoint must be positive");
  return make({t0}, {c});
}

void StepFunction::canonicalize() {
  // Merge adjacent equal values.
  std::size_t w = 0;
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (w > 0 && vals_[i] == vals_[w - 1]) {
      ends_[w - 1] = ends_[i];
    } else {
      ends_[w] = ends_[i];
      vals_[w] = vals_[i];
      ++w;
    }
  }
  ends_.resize(w);
  vals_.resize(w);
  // Drop trailing zeros.
  while (!vals_.empty() && vals_.back() == 0.0) {
    ends_.pop_back();
    vals_.pop_back();
  }
}

double StepFunction::value(double t) const {
  require(t > 0.0, "step function value: t must be positive");
  auto it = std::lower_bound(ends_.begin(), ends_.end(), t);
  if (it == ends_.end()) return 0.0;
  return vals_[static_cast<std::size_t>(it - ends_.begin())];
}

double StepFunction::sup() const {
  double m = 0.0;
  for (double v : vals_) m = std::max(m, v);
  return m;
}

double StepFunction::support_measure() const {
  double total = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (vals_[i] > 0.0) total += ends_[i] - prev;
    prev = ends_[i];
  }
  return total;
}

double StepFunction::distribution(double tau) const {
  require(tau > 0.0, "distribution: tau must be positive");
  double total = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (vals_[i] > tau) total += ends_[i] - prev;
    prev = ends_[i];
  }
  return total;
}

StepFunction StepFunction::rearranged() const {
  std::vector<std::size_t> order(ends_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vals_[a] > vals_[b]; });
  StepFunction g;
  double acc = 0.0;
  for (std::size_t idx : order) {
    const double len = ends_[idx] - (idx == 0 ? 0.0 : ends_[idx - 1]);
    acc += len;
    g.ends_.push_back(acc);
    g.vals_.push_back(vals_[idx]);
  }
  g.canonicalize();
  return g;
}

bool StepFunction::nonincreasing() const {
  for (std::size_t i = 1; i < vals_.size(); ++i)
    if (vals_[i] > vals_[i - 1]) return false;
  return true;
}

double StepFunction::rearrangement(double t) const {
  require(t > 0.0, "rearrangement: t must be positive");
  if (nonincreasing()) return t <= end() ? value(std::min(t, end())) : 0.0;
  return rearranged().value(t);
}

double StepFunction::partial_power_integral(double p, double t) const {
  require(p > 0.0, "partial power integral: p must be positive");
  require(t > 0.0, "partial power integral: t must be positive");
  const StepFunction g = nonincreasing() ? *this : rearranged();
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < g.ends_.size() && prev < t; ++i) {
    const double hi = std::min(g.ends_[i], t);
    acc += std::pow(g.vals_[i], p) * (hi - prev);
    prev = g.ends_[i];
  }
  return acc;
}

double StepFunction::total_power_integral(double p) const {
  require(p > 0.0, "total power integral: p must be positive");
  double acc = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    acc += std::pow(vals_[i], p) * (ends_[i] - prev);
    prev = ends_[i];
  }
  return acc;
}

double StepFunction::partial_integral(double t) const {
  return partial_power_integral(1.0, t);
}

StepFunction StepFunction::truncated_rearrangement(double s) const {
  require(s > 0.0, "truncation: s must be positive");
  const StepFunction g = nonincreasing() ? *this : rearranged();
  StepFunction out;
  double prev = 0.0;
  for (std::size_t i = 0; i < g.ends_.size() && prev < s; ++i) {
    out.ends_.push_back(std::min(g.ends_[i], s));
    out.vals_.push_back(g.vals_[i]);
    prev = g.ends_[i];
  }
  out.canonicalize();
  return out;
}

StepFunction StepFunction::scaled(double c) const {
  require(c >= 0.0 && std::isfinite(c), "scale: factor must be finite and nonnegative");
  StepFunction out = *this;
  for (double& v : out.vals_) v *= c;
  out.canonicalize();
  return out;
}

}  // namespace ricmp
