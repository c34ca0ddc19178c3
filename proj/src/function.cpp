#include "ricmp/function.hpp"

#include <sstream>

namespace ricmp {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw domain_error("bad number '" + s + "' in function spec");
  }
  if (pos != s.size()) throw domain_error("bad number '" + s + "' in function spec");
  return v;
}

[[noreturn]] void grammar_error(const std::string& spec) {
  throw domain_error("unknown function spec '" + spec +
                     "'; expected: step t1:v1,t2:v2,... | sinc | sincpi | gauss | powtail a:alpha");
}

}  // namespace

double AnyFunction::distribution(double tau, const Tolerance& tol) const {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Sampler>)
          return f.distribution(tau, tol);
        else
          return f.distribution(tau);
      },
      v_);
}

double AnyFunction::rearrangement(double t, const Tolerance& tol) const {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Sampler>)
          return f.rearrangement(t, tol);
        else
          return f.rearrangement(t);
      },
      v_);
}

double AnyFunction::sup() const {
  return std::visit([](const auto& f) { return f.sup(); }, v_);
}

std::optional<double> AnyFunction::support_measure() const {
  if (const StepFunction* s = step()) return s->support_measure();
  if (const PiecewisePower* p = power()) return p->support_measure();
  // Builtin samplers all have full support.
  return kInf;
}

std::string AnyFunction::describe() const {
  if (const Sampler* s = sampler()) return s->name();
  if (const StepFunction* s = step()) {
    std::ostringstream os;
    os << "step ";
    for (std::size_t i = 0; i < s->pieces(); ++i)
      os << (i ? "," : "") << s->ends()[i] << ":" << s->values()[i];
    return os.str();
  }
  const PiecewisePower* p = power();
  std::ostringstream os;
  os << "piecewise-power[" << p->pieces().size() << "]";
  return os.str();
}

AnyFunction parse_function(const std::string& spec) {
  if (spec == "sinc") return make_sinc();
  if (spec == "sincpi") return make_sincpi();
  if (spec == "gauss") return make_gauss();
  if (spec.rfind("step ", 0) == 0 || spec.rfind("step\t", 0) == 0) {
    std::vector<double> ends, vals;
    for (const std::string& part : split(spec.substr(5), ',')) {
      const std::vector<std::string> kv = split(part, ':');
      if (kv.size() != 2) grammar_error(spec);
      ends.push_back(parse_number(kv[0]));
      vals.push_back(parse_number(kv[1]));
    }
    if (ends.empty()) grammar_error(spec);
    return StepFunction::make(std::move(ends), std::move(vals));
  }
  if (spec.rfind("powtail ", 0) == 0) {
    const std::vector<std::string> kv = split(spec.substr(8), ':');
    if (kv.size() != 2) grammar_error(spec);
    return PiecewisePower::power_tail(parse_number(kv[0]), parse_number(kv[1]));
  }
  grammar_error(spec);
}

}  // namespace ricmp
