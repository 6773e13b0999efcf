#include "haantjes/matrix.hpp"

#include <utility>

#include "haantjes/errors.hpp"

namespace haantjes {

FnMatrix::FnMatrix(const Chart& chart, int rows, int cols)
    : chart_(chart), rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw DimensionMismatchError("matrix dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, RationalFn(chart));
}

FnMatrix FnMatrix::identity(const Chart& chart, int n) {
  FnMatrix m(chart, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFn::constant(chart, Rational(1));
  return m;
}

FnMatrix FnMatrix::from_rows(const Chart& chart, std::vector<std::vector<RationalFn>> rows) {
  if (rows.empty()) throw DimensionMismatchError("matrix needs at least one row");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  FnMatrix m(chart, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionMismatchError("matrix rows have unequal lengths");
    for (int j = 0; j < c; ++j) {
      require_same_chart(chart, rows[i][j].chart());
      m.at(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

bool FnMatrix::is_zero() const {
  for (const auto& f : data_)
    if (!f.is_zero()) return false;
  return true;
}

bool FnMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool FnMatrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (!(at(i, j) + at(j, i)).is_zero()) return false;
  return true;
}

bool FnMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

FnMatrix FnMatrix::operator+(const FnMatrix& o) const {
  require_same_chart(chart_, o.chart_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatchError("matrix shapes differ in addition");
  FnMatrix m(chart_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

FnMatrix FnMatrix::operator-(const FnMatrix& o) const {
  require_same_chart(chart_, o.chart_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatchError("matrix shapes differ in subtraction");
  FnMatrix m(chart_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

FnMatrix FnMatrix::operator*(const FnMatrix& o) const {
  require_same_chart(chart_, o.chart_);
  if (cols_ != o.rows_) throw DimensionMismatchError("matrix shapes differ in product");
  FnMatrix m(chart_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return m;
}

FnMatrix FnMatrix::scaled(const RationalFn& f) const {
  require_same_chart(chart_, f.chart());
  FnMatrix m(chart_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * f;
  return m;
}

FnMatrix FnMatrix::transpose() const {
  FnMatrix m(chart_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

FnMatrix FnMatrix::pow(int k) const {
  if (rows_ != cols_) throw DimensionMismatchError("matrix power needs a square matrix");
  if (k < 0) throw Error("negative matrix power");
  FnMatrix acc = identity(chart_, rows_);
  FnMatrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FnMatrix FnMatrix::derivative(int var) const {
  FnMatrix m(chart_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].derivative(var);
  return m;
}

RationalFn FnMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatchError("trace needs a square matrix");
  RationalFn t(chart_);
  for (int i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

bool FnMatrix::operator==(const FnMatrix& o) const {
  if (!(chart_ == o.chart_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return data_ == o.data_;
}

RationalFn FnMatrix::det() const {
  if (rows_ != cols_) throw DimensionMismatchError("determinant needs a square matrix");
  const int n = rows_;
  FnMatrix a = *this;
  const RationalFn one = RationalFn::constant(chart_, Rational(1));
  RationalFn prev = one;
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a.at(r, k).is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return RationalFn(chart_);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = RationalFn(chart_);
    }
    prev = a.at(k, k);
  }
  RationalFn d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

FnMatrix FnMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatchError("inverse needs a square matrix");
  const int n = rows_;
  RationalFn d = det();
  if (d.is_zero()) throw SingularMatrixError("matrix is singular");
  const RationalFn one = RationalFn::constant(chart_, Rational(1));
  if (n == 1) {
    FnMatrix m(chart_, 1, 1);
    m.at(0, 0) = one / d;
    return m;
  }
  FnMatrix adj(chart_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FnMatrix minor(chart_, n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      RationalFn cof = minor.det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj.scaled(one / d);
}

FnMatrix FnMatrix::solve(const FnMatrix& b) const {
  if (rows_ != cols_) throw DimensionMismatchError("solve needs a square matrix");
  require_same_chart(chart_, b.chart_);
  if (b.rows_ != rows_) throw DimensionMismatchError("right-hand side has wrong row count");
  const int n = rows_;
  const int m = b.cols_;
  FnMatrix a(chart_, n, n + m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = at(i, j);
    for (int j = 0; j < m; ++j) a.at(i, n + j) = b.at(i, j);
  }
  const RationalFn one = RationalFn::constant(chart_, Rational(1));
  RationalFn prev = one;
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a.at(r, k).is_zero()) {
          p = r;
          break;
        }
      if (p < 0) throw SingularMatrixError("matrix is singular");
      for (int j = 0; j < n + m; ++j) std::swap(a.at(k, j), a.at(p, j));
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n + m; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = RationalFn(chart_);
    }
    prev = a.at(k, k);
  }
  FnMatrix x(chart_, n, m);
  for (int c = 0; c < m; ++c)
    for (int i = n - 1; i >= 0; --i) {
      RationalFn s = a.at(i, n + c);
      for (int r = i + 1; r < n; ++r) s = s - a.at(i, r) * x.at(r, c);
      x.at(i, c) = s / a.at(i, i);
    }
  return x;
}

std::vector<Rational> charpoly_at(const FnMatrix& m, const std::vector<Rational>& point) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("characteristic polynomial needs a square matrix");
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j).eval_at(point);

  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I).
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  coeffs.push_back(Rational(1));
  std::vector<std::vector<Rational>> mk = a;
  for (int k = 1; k <= n; ++k) {
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    Rational ck = -(tr / Rational(k));
    coeffs.push_back(ck);
    if (k == n) break;
    std::vector<std::vector<Rational>> shifted = mk;
    for (int i = 0; i < n; ++i) shifted[i][i] += ck;
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l].is_zero()) continue;
        for (int j = 0; j < n; ++j) next[i][j] += a[i][l] * shifted[l][j];
      }
    mk = next;
  }
  return coeffs;
}

bool squarefree(const std::vector<Rational>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<Term> terms;
  for (int i = 0; i <= deg; ++i) {
    if (coeffs[i].is_zero()) continue;
    terms.emplace_back(Monomial(std::vector<std::int32_t>{deg - i}), coeffs[i]);
  }
  Polynomial p = Polynomial::from_terms(1, terms);
  if (p.total_degree() <= 1) return true;
  return gcd(p, p.derivative(0)).is_constant();
}

}  // namespace haantjes
