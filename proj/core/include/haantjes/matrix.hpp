#pragma once

#include <vector>

#include "haantjes/rational_fn.hpp"

namespace haantjes {

/// Dense matrix of rational functions over a shared chart. All algorithms
/// are exact; there is no floating point anywhere.
class FnMatrix {
 public:
  FnMatrix(const Chart& chart, int rows, int cols);
  static FnMatrix identity(const Chart& chart, int n);
  static FnMatrix from_rows(const Chart& chart, std::vector<std::vector<RationalFn>> rows);

  const Chart& chart() const { return chart_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RationalFn& at(int i, int j) const { return data_[i * cols_ + j]; }
  RationalFn& at(int i, int j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_skew() const;
  bool is_symmetric() const;

  FnMatrix operator+(const FnMatrix& o) const;
  FnMatrix operator-(const FnMatrix& o) const;
  FnMatrix operator*(const FnMatrix& o) const;
  FnMatrix scaled(const RationalFn& f) const;
  FnMatrix transpose() const;
  FnMatrix pow(int k) const;  // square matrices, k >= 0
  /// Entrywise partial derivative.
  FnMatrix derivative(int var) const;
  RationalFn trace() const;

  bool operator==(const FnMatrix& o) const;
  bool operator!=(const FnMatrix& o) const { return !(*this == o); }

  /// Exact determinant via fraction-free (Bareiss) elimination with row
  /// pivoting; polynomial inputs never acquire denominators on the way.
  RationalFn det() const;
  /// Exact inverse via adjugate over determinant.
  FnMatrix inverse() const;
  /// Solves this * X = B by fraction-free elimination plus exact back
  /// substitution; throws SingularMatrixError when the determinant vanishes
  /// identically.
  FnMatrix solve(const FnMatrix& b) const;

 private:
  Chart chart_;
  int rows_, cols_;
  std::vector<RationalFn> data_;
};

/// Endomorphism fields (R, K, ...) are square FnMatrix values acting on
/// vectors by matrix-column product and on 1-forms by row-matrix product.
using Tensor11 = FnMatrix;

/// Characteristic polynomial det(lambda*I - M(point)), exact rational
/// coefficients in descending powers of lambda (leading 1, size n+1).
std::vector<Rational> charpoly_at(const FnMatrix& m, const std::vector<Rational>& point);

/// Squarefree test for a univariate rational-coefficient polynomial given in
/// descending coefficient order: gcd with its derivative is constant.
bool squarefree(const std::vector<Rational>& coeffs);

}  // namespace haantjes
