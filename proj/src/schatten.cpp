#include "ricmp/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ricmp {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require(rows >= 1 && cols >= 1, "matrix: dimensions must be positive");
  require(rows <= 256 && cols <= 256, "matrix: dimensions capped at 256");
  a_.assign(rows * cols, 0.0);
}

DenseMatrix DenseMatrix::diag(const std::vector<double>& d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    require(std::isfinite(d[i]), "matrix: entries must be finite");
    m.at(i, i) = d[i];
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  require(!rows.empty() && !rows[0].empty(), "matrix: empty");
  DenseMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == rows[0].size(), "matrix: ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      require(std::isfinite(rows[r][c]), "matrix: entries must be finite");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

double DenseMatrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

SvdResult jacobi_svd(const DenseMatrix& input) {
  const bool transposed = input.rows() < input.cols();
  DenseMatrix w = transposed ? input.transposed() : input;
  const std::size_t m = w.rows(), n = w.cols();

  DenseMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w.at(i, j) * w.at(i, j);
    scale = std::max(scale, s);
  }

  int sweeps = 0;
  const int kMaxSweeps = 30;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += w.at(i, p) * w.at(i, p);
          aqq += w.at(i, q) * w.at(i, q);
          apq += w.at(i, p) * w.at(i, q);
        }
        off = std::max(off, std::fabs(apq));
        if (std::fabs(apq) <= 1e-14 * std::sqrt(app * aqq) || apq == 0.0) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = w.at(i, p), wq = w.at(i, q);
          w.at(i, p) = c * wp - s * wq;
          w.at(i, q) = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * vq;
          v.at(i, q) = s * vp + c * vq;
        }
      }
    }
    if (off <= 1e-14 * std::max(scale, 1e-300)) {
      ++sweeps;
      break;
    }
  }

  std::vector<std::pair<double, std::size_t>> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w.at(i, j) * w.at(i, j);
    sv[j] = {std::sqrt(s), j};
  }
  std::sort(sv.begin(), sv.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  SvdResult res{std::vector<double>(n), DenseMatrix(n, n), transposed, sweeps};
  for (std::size_t j = 0; j < n; ++j) {
    res.singular_values[j] = sv[j].first;
    for (std::size_t i = 0; i < n; ++i) res.v.at(i, j) = v.at(i, sv[j].second);
  }
  return res;
}

std::vector<double> s_numbers(const DenseMatrix& a) {
  return jacobi_svd(a).singular_values;
}

double ideal_norm(std::vector<double> x, double p, double q) {
  require(p > 0.0 && q > 0.0, "ideal norm: p and q must be positive");
  for (double& v : x) v = std::fabs(v);
  std::sort(x.begin(), x.end(), std::greater<double>());
  double acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (x[n] == 0.0) break;
    acc += std::pow(x[n], q) * std::pow(static_cast<double>(n + 1), q / p - 1.0);
  }
  return std::pow(acc, 1.0 / q);
}

OrderReport operator_order(std::vector<double> x, std::vector<double> y) {
  for (double& v : x) v = std::fabs(v);
  for (double& v : y) v = std::fabs(v);
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  std::sort(x.begin(), x.end(), std::greater<double>());
  std::sort(y.begin(), y.end(), std::greater<double>());

  // lessgtr needs every strict x<y index before every strict x>y index;
  // gtrless the reverse.
  std::ptrdiff_t last_lt = -1, last_gt = -1, first_lt = -1, first_gt = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < y[i]) {
      last_lt = static_cast<std::ptrdiff_t>(i);
      if (first_lt < 0) first_lt = static_cast<std::ptrdiff_t>(i);
    } else if (x[i] > y[i]) {
      last_gt = static_cast<std::ptrdiff_t>(i);
      if (first_gt < 0) first_gt = static_cast<std::ptrdiff_t>(i);
    }
  }
  const bool lessgtr = first_gt < 0 || last_lt < first_gt;
  const bool gtrless = first_lt < 0 || last_gt < first_lt;
  OrderReport rep;
  if (lessgtr && gtrless)
    rep.relation = SequenceRelation::both;
  else if (lessgtr)
    rep.relation = SequenceRelation::lessgtr;
  else if (gtrless)
    rep.relation = SequenceRelation::gtrless;
  else
    rep.relation = SequenceRelation::neither;
  if (rep.relation == SequenceRelation::lessgtr)
    rep.n0 = static_cast<std::size_t>(std::max<std::ptrdiff_t>(last_lt, 0)) + 1;
  else if (rep.relation == SequenceRelation::gtrless)
    rep.n0 = static_cast<std::size_t>(std::max<std::ptrdiff_t>(last_gt, 0)) + 1;
  else
    rep.n0 = 1;
  return rep;
}

ComparisonVerdict schatten_compare(const std::vector<double>& s_a, const std::vector<double>& s_b,
                                   const RegionQuery& rq, IdealDirection direction) {
  ComparisonVerdict v;
  v.query = rq;
  v.norm_f_p0q0 = ideal_norm(s_a, rq.p0, rq.q0);
  v.norm_g_p0q0 = ideal_norm(s_b, rq.p0, rq.q0);
  v.norm_f_pq = ideal_norm(s_a, rq.p, rq.q);
  v.norm_g_pq = ideal_norm(s_b, rq.p, rq.q);
  // Conclusion direction here: ||A||_(p,q) >= ||B||_(p,q).
  v.conclusion = v.norm_f_pq >= v.norm_g_pq - 1e-11 * std::max(v.norm_f_pq, v.norm_g_pq);

  const bool in_region = direction == IdealDirection::delta ? in_region_delta(rq)
                                                            : in_region_delta_tilde(rq);
  if (!in_region) {
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = "outside the region";
    return v;
  }
  if (v.norm_f_p0q0 < v.norm_g_p0q0 - 1e-12 * std::max(v.norm_f_p0q0, v.norm_g_p0q0)) {
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = "hypothesis failed: ||A||_(p0,q0) >= ||B||_(p0,q0)";
    return v;
  }
  const OrderReport order = operator_order(s_a, s_b);
  const SequenceRelation need = direction == IdealDirection::delta ? SequenceRelation::gtrless
                                                                   : SequenceRelation::lessgtr;
  const bool order_ok =
      order.relation == need || order.relation == SequenceRelation::both;
  if (!order_ok) {
    v.criterion = ComparisonCriterion::inapplicable;
    v.diagnostics = direction == IdealDirection::delta
                        ? "order failed: need s(A) above then below s(B)"
                        : "order failed: need s(A) below then above s(B)";
    return v;
  }
  v.criterion = direction == IdealDirection::delta ? ComparisonCriterion::ideal_delta
                                                   : ComparisonCriterion::ideal_delta_tilde;
  v.applicable = true;
  v.inconsistent = !v.conclusion;
  if (v.inconsistent)
    v.diagnostics = "criterion asserts the conclusion but evaluated norms disagree";
  return v;
}

ComparisonVerdict schatten_compare(const DenseMatrix& a, const DenseMatrix& b,
                                   const RegionQuery& rq, IdealDirection direction) {
  return schatten_compare(s_numbers(a), s_numbers(b), rq, direction);
}

DenseMatrix parse_matrix(const std::string& spec) {
  auto parse_list = [](const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw domain_error("bad number '" + item + "' in matrix spec");
      }
    }
    return out;
  };
  if (spec.rfind("diag:", 0) == 0) {
    const std::vector<double> d = parse_list(spec.substr(5));
    require(!d.empty(), "matrix: empty diagonal");
    return DenseMatrix::diag(d);
  }
  if (spec.rfind("csv:", 0) == 0) {
    std::ifstream in(spec.substr(4));
    if (!in) throw domain_error("matrix: cannot open '" + spec.substr(4) + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      rows.push_back(parse_list(line));
    }
    return DenseMatrix::from_rows(rows);
  }
  throw domain_error("unknown matrix spec '" + spec + "'; expected diag:a,b,... | csv:<path>");
}

}  // namespace ricmp
