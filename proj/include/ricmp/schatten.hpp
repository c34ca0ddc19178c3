#pragma once

#include <string>
#include <vector>

#include "ricmp/npcompare.hpp"

namespace ricmp {

// Dense real matrix, row-major, dimensions capped at 256.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  static DenseMatrix diag(const std::vector<double>& d);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  DenseMatrix transposed() const;
  double frobenius() const;

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
};

struct SvdResult {
  std::vector<double> singular_values;  // nonincreasing, length min(rows, cols)
  // Right singular vectors of the matrix the rotations ran on (the input, or
  // its transpose when rows < cols); column i pairs with singular_values[i].
  DenseMatrix v;
  bool transposed = false;  // true when the sweep ran on the transpose
  int sweeps = 0;
};

// One-sided Jacobi SVD: orthogonalizes columns by plane rotations; high
// relative accuracy on small dense matrices. Sweep limit 30, convergence when
// every off-diagonal Gram entry is below 1e-14 * scale.
SvdResult jacobi_svd(const DenseMatrix& a);

// s-numbers (singular values), sorted nonincreasing.
std::vector<double> s_numbers(const DenseMatrix& a);

// Discrete Lorentz quasi-norm (sum (x_n*)^q n^(q/p-1))^(1/q); exact finite
// sum after internal nonincreasing rearrangement.
double ideal_norm(std::vector<double> x, double p, double q);

enum class SequenceRelation { lessgtr, gtrless, both, neither };

struct OrderReport {
  SequenceRelation relation = SequenceRelation::neither;
  std::size_t n0 = 0;  // 1-based witnessing index (last of the first block)
};

// Detects x* <= y* then >= (lessgtr) and/or x* >= y* then <= (gtrless); the
// shorter list is zero-padded.
OrderReport operator_order(std::vector<double> x, std::vector<double> y);

enum class IdealDirection { delta, delta_tilde };

// Comparison of ideal norms under the sequence order. delta_tilde: A <> B
// (s(A) below then above) plus ||A||_(p0,q0) >= ||B||_(p0,q0) forces
// ||A||_(p,q) >= ||B||_(p,q) on the mirrored region; delta: the reversed
// order on the sharp region. Outside the region the verdict is inapplicable.
ComparisonVerdict schatten_compare(const std::vector<double>& s_a, const std::vector<double>& s_b,
                                   const RegionQuery& rq, IdealDirection direction);
ComparisonVerdict schatten_compare(const DenseMatrix& a, const DenseMatrix& b,
                                   const RegionQuery& rq, IdealDirection direction);

// Matrix grammar: "diag:a,b,..." | "csv:<path>".
DenseMatrix parse_matrix(const std::string& spec);

}  // namespace ricmp
