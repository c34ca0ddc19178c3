#include "ricmp/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "ricmp/ball.hpp"
#include "ricmp/interp.hpp"
#include "ricmp/majorization.hpp"
#include "ricmp/norms.hpp"
#include "ricmp/npcompare.hpp"
#include "ricmp/schatten.hpp"
#include "ricmp/witnesses.hpp"

namespace ricmp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  template <typename T>
  Check& operator<<(const T& v) {
    detail << v;
    return *this;
  }
  void fail() { ok = false; }
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.str().empty()) detail << "; ";
      detail << what;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// Independent brute-force K-functional: scan truncation heights c on a
// uniform grid, K ~ min_c ( int (f - c)_+ + t c ). Deliberately unaware of
// the breakpoint structure the exact path uses.
double k_oracle(const StepFunction& f, double t, int c_steps = 400) {
  const double top = f.sup();
  double best = kInf;
  for (int i = 0; i <= c_steps; ++i) {
    const double c = top * static_cast<double>(i) / c_steps;
    double l1 = 0.0, prev = 0.0;
    for (std::size_t j = 0; j < f.pieces(); ++j) {
      l1 += std::max(0.0, f.values()[j] - c) * (f.ends()[j] - prev);
      prev = f.ends()[j];
    }
    best = std::min(best, l1 + t * c);
  }
  return best;
}

StepFunction random_step(std::mt19937_64& rng, int max_pieces = 8) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const int n = 1 + static_cast<int>(U(rng) * (max_pieces - 1));
  std::vector<double> ends, vals;
  double t = 0.0;
  for (int i = 0; i < n; ++i) {
    t += 0.05 + 2.0 * U(rng);
    ends.push_back(t);
    vals.push_back(5.0 * U(rng));
  }
  return StepFunction::make(ends, vals);
}

// --- criteria ----------------------------------------------------------------

Check c1_ball_anchor() {
  Check c;
  const double lhs = ball_lhs(2.0, 1.0), rhs = ball_rhs(2.0, 1.0);
  const double target = kPi / 2.0;
  c.expect(std::fabs(lhs / target - 1.0) <= 1e-5, "lhs off pi/2: " + fmt(lhs));
  c.expect(std::fabs(rhs / target - 1.0) <= 1e-5, "rhs off pi/2: " + fmt(rhs));
  c << "lhs=" << fmt(lhs) << " rhs=" << fmt(rhs);
  return c;
}

Check c2_ball_sweep() {
  Check c;
  double worst = kInf;
  for (double q : {2.0, 3.0, 4.0, 6.0, 10.0}) {
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
      const BallResult r = ball_check(q, alpha);
      c.expect(r.margin >= -1e-6,
               "margin violated at q=" + fmt(q) + " alpha=" + fmt(alpha) + ": " + fmt(r.margin));
      if (!(q == 2.0 && alpha == 1.0)) {
        worst = std::min(worst, r.margin);
        c.expect(r.margin >= 1e-4, "margin not strict at q=" + fmt(q) + " alpha=" + fmt(alpha) +
                                       ": " + fmt(r.margin));
      }
    }
  }
  c << "min strict margin " << fmt(worst);
  return c;
}

Check c3_halfline_lp() {
  Check c;
  for (double p : {3.0, 4.0, 8.0}) {
    const double left = (2.0 / kPi) * ball_lhs(p, 1.0);
    const double right = std::sqrt(2.0 / p);
    c.expect(right - left > 1e-4, "p=" + fmt(p) + ": " + fmt(left) + " !< " + fmt(right));
    if (p == 4.0)
      c.expect(std::fabs(left - 2.0 / 3.0) <= 1e-5, "p=4 value off 2/3: " + fmt(left));
  }
  return c;
}

Check c4_alpha0() {
  Check c;
  const double a0 = ckt_alpha0();
  c.expect(a0 >= 0.792 && a0 <= 0.794, "alpha0 = " + fmt(a0));
  c << "alpha0=" << fmt(a0);
  return c;
}

Check c5_ratio() {
  Check c;
  for (double alpha : {0.1, 0.4, 0.7}) {
    const RatioReport r = ratio_analysis(alpha);
    const double expect = std::pow(kPi / 3.0, 0.5 * alpha);
    c.expect(std::fabs(r.ratio - expect) <= 1e-6,
             "ratio at alpha=" + fmt(alpha) + ": " + fmt(r.ratio) + " vs " + fmt(expect));
  }
  for (double alpha : {0.01, 0.99}) {
    const RatioReport r = ratio_analysis(alpha);
    c.expect(std::fabs(r.ratio - 1.0) <= 0.05,
             "limit ratio at alpha=" + fmt(alpha) + ": " + fmt(r.ratio));
    c.expect(std::fabs(r.ratio - r.closed_form) <= 1e-9, "regime closed form mismatch");
  }
  return c;
}

Check c6_region_soundness(unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed * 1000003u + 17u);
  NpPairConfig cfg;
  cfg.p0 = 2.0;
  cfg.q0 = 2.0;
  std::vector<std::pair<double, double>> points;
  for (double p : region_lattice())
    for (double q : region_lattice())
      if (in_region_delta({2.0, 2.0, p, q})) points.emplace_back(p, q);
  double worst = kInf;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [f, g] = random_np_pair(rng, cfg);
    if (i < 50) {
      // Spot-verify what the generator promises: the crossing pattern and the
      // (2,2) hypothesis.
      const CrossingReport cr = crossing_profile(f, g, CrossingSide::rearrangement);
      c.expect(cr.np_pattern_ok, "generated pair lacks the crossing pattern");
      c.expect(lorentz_norm(f, 2.0, 2.0) >= lorentz_norm(g, 2.0, 2.0) - 1e-12,
               "generated pair lacks the (2,2) hypothesis");
      if (!c.ok) return c;
    }
    for (const auto& [p, q] : points) {
      const double nf = lorentz_norm(f, p, q), ng = lorentz_norm(g, p, q);
      const double viol = ng - nf;
      worst = std::min(worst, -viol);
      ++checked;
      if (viol > 1e-10) {
        c.expect(false, "violation " + fmt(viol) + " at seed " + fmt(i) + " (p,q)=(" + fmt(p) +
                            "," + fmt(q) + ")");
        return c;
      }
    }
  }
  c << checked << " comparisons, worst margin " << fmt(worst);
  return c;
}

Check c7_region_completeness() {
  Check c;
  for (const auto& [p0, q0] : std::vector<std::pair<double, double>>{{2.0, 2.0}, {3.0, 1.5}}) {
    for (double p : region_lattice()) {
      for (double q : region_lattice()) {
        if (in_region_delta({p0, q0, p, q})) continue;
        FunctionWitness w;
        try {
          w = function_witness(p0, q0, p, q);
        } catch (const std::exception& e) {
          c.expect(false, "witness failed at (" + fmt(p0) + "," + fmt(q0) + "," + fmt(p) + "," +
                              fmt(q) + "): " + e.what());
          continue;
        }
        // Three defining inequalities, strict: f above g before the crossing,
        // below after, and the (p,q) refutation.
        const double before = w.case_id == 3 ? w.a - 1.0 : 1.0 - w.a;
        const double after = w.case_id == 3 ? 1.0 - w.b : w.b;
        c.expect(before >= 1e-9, "dominance margin before crossing too small");
        c.expect(after >= 1e-9, "dominance margin after crossing too small");
        c.expect(w.refutation_margin >= 1e-9, "refutation margin " + fmt(w.refutation_margin));
        c.expect(std::fabs(w.norm_f_p0q0 - w.norm_g_p0q0) <= 1e-11,
                 "(p0,q0) norms not equal");
      }
    }
  }
  return c;
}

Check c8_sequences(unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed * 2000003u + 29u);
  std::vector<std::pair<double, double>> points;
  for (double p : region_lattice())
    for (double q : region_lattice())
      if (in_region_delta_tilde({2.0, 2.0, p, q})) points.emplace_back(p, q);
  std::uniform_int_distribution<std::size_t> len(2, 8);
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = random_crossed_sequences(rng, len(rng), 2.0, 2.0);
    for (const auto& [p, q] : points) {
      const ComparisonVerdict v = schatten_compare(x, y, {2.0, 2.0, p, q},
                                                   IdealDirection::delta_tilde);
      if (!v.applicable) continue;  // ties may fall outside the strict order
      if (v.norm_f_pq < v.norm_g_pq - 1e-10 * std::max(v.norm_f_pq, 1.0)) {
        c.expect(false, "ideal-norm violation at seed " + fmt(i));
        return c;
      }
    }
  }
  const SequenceWitness w = sequence_witness(2.0, 2.0, 2.0, 1.0, 1e-3);
  c.expect(std::fabs(w.norm_x_pq - 1.2089) <= 1e-3, "||x||_l(2,1) = " + fmt(w.norm_x_pq));
  c.expect(std::fabs(w.norm_y_pq - 1.2247) <= 1e-3, "||y||_l(2,1) = " + fmt(w.norm_y_pq));
  c.expect(w.norm_x_pq < w.norm_y_pq, "witness does not reverse the ordering");
  c << "F3 witness: " << fmt(w.norm_x_pq) << " < " << fmt(w.norm_y_pq);
  return c;
}

Check c9_power_majorization(unsigned seed) {
  Check c;
  double worst = kInf;
  for (double p0 : {1.0, 2.0, 3.0}) {
    std::mt19937_64 rng(seed * 3000017u + static_cast<unsigned>(p0 * 7.0));
    NpPairConfig cfg;
    cfg.p0 = p0;
    cfg.q0 = p0;  // L(p0,p0) = L^p0, so the enforced hypothesis is the Lp one
    for (int i = 0; i < 1000; ++i) {
      const auto [f, g] = random_np_pair(rng, cfg);
      const MajorizationReport rep = power_majorization_from_crossing(f, g, p0);
      worst = std::min(worst, rep.margin);
      if (rep.margin < -1e-12) {
        c.expect(false, "majorization failed at p0=" + fmt(p0) + " seed " + fmt(i) +
                            " margin " + fmt(rep.margin));
        return c;
      }
    }
  }
  c << "worst margin " << fmt(worst);
  return c;
}

Check c10_class_x(unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed * 4000037u + 5u);
  const SpaceSpec lam = SpaceSpec::lambda(ConcaveWeight::power(0.5), 1.0);
  NpPairConfig cfg;
  cfg.enforce_hypothesis = false;
  int probed = 0;
  for (int i = 0; i < 500; ++i) {
    auto [f, g] = random_np_pair(rng, cfg);
    // The probe needs the norm ordering in the space itself; scale f up to
    // guarantee it without touching the crossing structure.
    AnyFunction af(f), ag(g);
    double nf = space_norm(lam, af), ng = space_norm(lam, ag);
    if (nf < ng) {
      af = AnyFunction(f.scaled(1.0000001 * ng / nf));
      const CrossingReport cr = crossing_profile(af, ag, CrossingSide::rearrangement);
      if (!cr.np_pattern_ok) continue;  // scaling may break the NP pattern; skip
    }
    const ProbeReport rep = class_X_probe(lam, af, ag);
    ++probed;
    if (rep.fired) {
      c.expect(false, "Lambda_1(sqrt t) probe fired at seed " + fmt(i) + ", s=" +
                          fmt(rep.first_violation_s));
      return c;
    }
  }
  c.expect(probed >= 400, "too few probed pairs: " + fmt(probed));

  const AnyFunction f(PiecewisePower::power_tail(1.0, 0.5));
  const AnyFunction g(PiecewisePower::power_tail(2.0, 0.5));
  const SpaceSpec marc =
      SpaceSpec::marcinkiewicz_space(ConcaveWeight::power(0.5), MarcinkiewiczConvention::dual);
  const double nf = space_norm(marc, f), ng = space_norm(marc, g);
  c.expect(std::fabs(nf - 2.0) <= 1e-6, "||f||_M = " + fmt(nf));
  c.expect(std::fabs(ng - 2.0) <= 1e-6, "||g||_M = " + fmt(ng));
  const ProbeReport rep = class_X_probe(marc, f, g);
  c.expect(rep.fired, "Marcinkiewicz probe did not fire");
  const auto [ft, gt] = probe_truncated_norms(marc, f, g, 2.0);
  c.expect(std::fabs(ft - 1.29289) <= 1e-5, "||f chi_(0,2)|| = " + fmt(ft));
  c.expect(std::fabs(gt - std::sqrt(2.0)) <= 1e-9, "||g chi_(0,2)|| = " + fmt(gt));
  c.expect(ft < gt, "no violation at s=2");
  c << "probed=" << probed << " trunc norms " << fmt(ft) << " < " << fmt(gt);
  return c;
}

Check c11_elementary() {
  Check c;
  for (int k = 1; k <= 999; ++k) {
    const double a = 1e-3 * k;
    const double e = 1.0 - std::pow(2.0, -a);
    if (!(e < a && a < 2.0 * e)) {
      c.expect(false, "failed at alpha=" + fmt(a));
      return c;
    }
  }
  return c;
}

Check c12_karamata(unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed * 5000011u + 3u);
  std::uniform_int_distribution<int> val(0, 24);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> which(0, 2);
  int applicable = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> x(static_cast<std::size_t>(len(rng)));
    std::vector<double> y(static_cast<std::size_t>(len(rng)));
    for (double& v : x) v = val(rng) / 8.0;  // dyadic rationals: exact sums
    for (double& v : y) v = val(rng) / 8.0;
    const int w = which(rng);
    const double cshift = val(rng) / 8.0;
    std::function<double(double)> phi;
    if (w == 0)
      phi = [](double u) { return u * u; };
    else if (w == 1)
      phi = [](double u) { return u * u * u * u; };
    else
      phi = [cshift](double u) { return std::max(u - cshift, 0.0); };
    const KaramataReport rep = karamata_check(x, y, phi, /*validate_phi=*/false);
    if (!rep.applicable) continue;
    ++applicable;
    if (!(rep.lhs >= rep.rhs)) {
      c.expect(false, "conclusion failed at seed " + fmt(i));
      return c;
    }
  }
  c.expect(applicable >= 1000, "too few applicable triples: " + fmt(applicable));
  c << applicable << " applicable";
  return c;
}

Check c13_k_oracle(unsigned seed) {
  Check c;
  std::mt19937_64 rng(seed * 6000023u + 7u);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StepFunction f = random_step(rng);
    if (f.zero()) continue;
    const double span = 1.5 * f.end();
    for (int j = 1; j <= 20; ++j) {
      const double t = span * j / 20.0;
      const double exact = k_functional(f, t);
      const double oracle = k_oracle(f, t);
      // The restricted decompositions can only overestimate.
      c.expect(oracle >= exact - 1e-9, "oracle below exact K");
      if (exact > 0.0) worst = std::max(worst, (oracle - exact) / exact);
    }
  }
  c.expect(worst <= 0.02, "oracle deviation " + fmt(worst));
  c << "max rel deviation " << fmt(worst);
  return c;
}

Check c14_theta_derivative(unsigned seed) {
  Check c;
  const StepFunction chi = StepFunction::indicator(1.0);
  const ThetaDerivativeReport anchor = theta_derivative_check(chi, 0.5);
  const double target = (2.0 * std::log(2.0) + 4.0) / std::sqrt(2.0);
  c.expect(std::fabs(anchor.analytic - target) <= 1e-6 * target,
           "anchor analytic " + fmt(anchor.analytic) + " vs " + fmt(target));
  std::mt19937_64 rng(seed * 7000003u + 11u);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StepFunction f = random_step(rng);
    if (f.zero()) continue;
    for (double theta : {0.25, 0.5, 0.75}) {
      const ThetaDerivativeReport rep = theta_derivative_check(f, theta);
      worst = std::max(worst, rep.rel_error);
      if (rep.rel_error > 1e-4) {
        c.expect(false, "disagreement " + fmt(rep.rel_error) + " at seed " + fmt(i) +
                            " theta=" + fmt(theta));
        return c;
      }
    }
  }
  c << "worst rel disagreement " << fmt(worst);
  return c;
}

Check c15_teoderivado(unsigned seed) {
  Check c;
  const std::vector<std::array<double, 4>> tuples = {{0.25, 1.0, 0.25, 1.0},
                                                     {0.25, 1.0, 0.7, 2.0},
                                                     {0.5, 2.0, 0.75, 3.0},
                                                     {0.4, 1.5, 0.6, 2.0},
                                                     {0.3, 2.0, 0.65, 4.0}};
  std::mt19937_64 rng(seed * 8000009u + 13u);
  NpPairConfig cfg;
  cfg.enforce_hypothesis = false;
  cfg.force_smaller_l1 = true;
  int applicable = 0;
  for (int i = 0; i < 500; ++i) {
    const auto [f, g] = random_np_pair(rng, cfg);
    for (const auto& [theta, p, eta, q] : tuples) {
      const TeoderivadoReport rep = teoderivado_check(f, g, theta, p, eta, q);
      if (!rep.applicable) continue;
      ++applicable;
      if (rep.inconsistent) {
        c.expect(false, "refutation at seed " + fmt(i) + " tuple theta=" + fmt(theta));
        return c;
      }
    }
  }
  c.expect(applicable >= 50, "too few applicable instances: " + fmt(applicable));
  c << applicable << " applicable instances, zero refutations";
  return c;
}

Check c16_svd(unsigned seed) {
  Check c;
  const std::vector<double> s = s_numbers(DenseMatrix::from_rows({{3.0, 0.0}, {4.0, 5.0}}));
  c.expect(std::fabs(s[0] - std::sqrt(45.0)) <= 1e-9, "s1 = " + fmt(s[0]));
  c.expect(std::fabs(s[1] - std::sqrt(5.0)) <= 1e-9, "s2 = " + fmt(s[1]));
  const std::vector<double> d = s_numbers(DenseMatrix::diag({-3.0, 1.0, 2.0}));
  c.expect(std::fabs(d[0] - 3.0) <= 1e-12 && std::fabs(d[1] - 2.0) <= 1e-12 &&
               std::fabs(d[2] - 1.0) <= 1e-12,
           "diag anchor failed");
  std::mt19937_64 rng(seed * 9000011u + 19u);
  std::uniform_int_distribution<std::size_t> dim(1, 64);
  std::normal_distribution<double> N(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    DenseMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t cc = 0; cc < a.cols(); ++cc) a.at(r, cc) = N(rng);
    const std::vector<double> sv = s_numbers(a);
    double sum2 = 0.0;
    for (double v : sv) sum2 += v * v;
    const double fro2 = a.frobenius() * a.frobenius();
    const double rel = std::fabs(sum2 - fro2) / std::max(fro2, 1e-300);
    worst = std::max(worst, rel);
    if (rel > 1e-10) {
      c.expect(false, "frobenius mismatch " + fmt(rel) + " at seed " + fmt(i));
      return c;
    }
  }
  c << "worst frobenius rel error " << fmt(worst);
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opt) {
  struct Entry {
    int id;
    const char* name;
    std::function<Check()> fn;
    double budget;  // seconds; 0 = unlimited
  };
  const unsigned seed = opt.seed;
  const std::vector<Entry> entries = {
      {1, "ball identity anchor (q=2, alpha=1)", [] { return c1_ball_anchor(); }, 5.0},
      {2, "sinc moment sweep margins", [] { return c2_ball_sweep(); }, 60.0},
      {3, "half-line |sin u/u|^p bound, p in {3,4,8}", [] { return c3_halfline_lp(); }, 0.0},
      {4, "constant crossover alpha0 in [0.792, 0.794]", [] { return c4_alpha0(); }, 0.0},
      {5, "constant-ratio closed forms and limits", [] { return c5_ratio(); }, 0.0},
      {6, "sharp-region soundness on random crossing pairs",
       [seed] { return c6_region_soundness(seed); }, 120.0},
      {7, "sharp-region completeness via constructed witnesses",
       [] { return c7_region_completeness(); }, 0.0},
      {8, "sequence/operator ideal comparisons + F3 witness",
       [seed] { return c8_sequences(seed); }, 0.0},
      {9, "crossing-to-power-majorization lemma", [seed] { return c9_power_majorization(seed); },
       0.0},
      {10, "truncation probe: Lorentz stable, Marcinkiewicz fails",
       [seed] { return c10_class_x(seed); }, 0.0},
      {11, "elementary 1-2^-a < a < 2(1-2^-a) grid", [] { return c11_elementary(); }, 0.0},
      {12, "Karamata prefix-sum implication", [seed] { return c12_karamata(seed); }, 0.0},
      {13, "K-functional brute-force oracle within 2%", [seed] { return c13_k_oracle(seed); },
       0.0},
      {14, "theta-derivative identity (analytic vs finite difference)",
       [seed] { return c14_theta_derivative(seed); }, 0.0},
      {15, "scale transfer property suite", [seed] { return c15_teoderivado(seed); }, 0.0},
      {16, "Jacobi SVD anchors and Frobenius consistency", [seed] { return c16_svd(seed); }, 0.0},
  };

  std::vector<CriterionResult> results;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Check c = e.fn();
      r.pass = c.ok;
      r.detail = c.detail.str();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget > 0.0 && r.seconds >= e.budget) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("runtime ") + fmt(r.seconds) +
                  "s over budget " + fmt(e.budget) + "s";
    }
    if (opt.verbose) {
      out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
      if (!r.detail.empty()) out << " -- " << r.detail;
      out << " (" << fmt(r.seconds) << "s)\n";
      out.flush();
    }
    results.push_back(std::move(r));
  }
  int passed = 0;
  for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
  out << passed << "/" << results.size() << " acceptance criteria passed\n";
  return results;
}

bool acceptance_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace ricmp
