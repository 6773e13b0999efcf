#pragma once

#include <vector>

#include "haantjes/matrix.hpp"

namespace haantjes {

/// Vector field with column components: (RX)^i = R^i_j X^j.
class VectorField {
 public:
  VectorField(const Chart& chart, std::vector<RationalFn> comps);
  static VectorField zero(const Chart& chart);
  /// Coordinate field along chart variable i.
  static VectorField basis(const Chart& chart, int i);

  const Chart& chart() const { return chart_; }
  int dim() const { return static_cast<int>(comps_.size()); }
  const RationalFn& comp(int i) const { return comps_[i]; }
  const std::vector<RationalFn>& comps() const { return comps_; }

  bool is_zero() const;
  VectorField operator-() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  /// Function-linear scaling.
  VectorField scaled(const RationalFn& f) const;
  bool operator==(const VectorField& o) const {
    return chart_ == o.chart_ && comps_ == o.comps_;
  }
  bool operator!=(const VectorField& o) const { return !(*this == o); }

 private:
  Chart chart_;
  std::vector<RationalFn> comps_;
};

/// 1-form with row components: (theta R)_j = theta_i R^i_j.
class OneForm {
 public:
  OneForm(const Chart& chart, std::vector<RationalFn> comps);
  static OneForm zero(const Chart& chart);
  /// Coordinate differential dx^i.
  static OneForm basis(const Chart& chart, int i);

  const Chart& chart() const { return chart_; }
  int dim() const { return static_cast<int>(comps_.size()); }
  const RationalFn& comp(int i) const { return comps_[i]; }
  const std::vector<RationalFn>& comps() const { return comps_; }

  bool is_zero() const;
  OneForm operator-() const;
  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  OneForm scaled(const RationalFn& f) const;
  bool operator==(const OneForm& o) const {
    return chart_ == o.chart_ && comps_ == o.comps_;
  }
  bool operator!=(const OneForm& o) const { return !(*this == o); }

 private:
  Chart chart_;
  std::vector<RationalFn> comps_;
};

/// 2-form stored by its skew component matrix w_ij.
class TwoForm {
 public:
  TwoForm(const Chart& chart, FnMatrix m);  // m must be skew
  const Chart& chart() const { return mat_.chart(); }
  const FnMatrix& mat() const { return mat_; }
  const RationalFn& at(int i, int j) const { return mat_.at(i, j); }
  bool is_zero() const { return mat_.is_zero(); }
  bool operator==(const TwoForm& o) const { return mat_ == o.mat_; }
  bool operator!=(const TwoForm& o) const { return !(*this == o); }

 private:
  FnMatrix mat_;
};

/// Bivector (contravariant skew tensor); sends 1-forms to vector fields by
/// (P theta)^i = P^ij theta_j.
class Bivector {
 public:
  Bivector(const Chart& chart, FnMatrix m);  // m must be skew
  const Chart& chart() const { return mat_.chart(); }
  const FnMatrix& mat() const { return mat_; }
  const RationalFn& at(int i, int j) const { return mat_.at(i, j); }
  bool is_zero() const { return mat_.is_zero(); }
  Bivector operator+(const Bivector& o) const { return Bivector(chart(), mat_ + o.mat_); }
  bool operator==(const Bivector& o) const { return mat_ == o.mat_; }
  bool operator!=(const Bivector& o) const { return !(*this == o); }

 private:
  FnMatrix mat_;
};

/// Vector-valued 2-form T^k_ij, skew in the lower pair. set keeps both
/// orientations consistent, so only i < j ever needs filling.
class Tensor12 {
 public:
  Tensor12(const Chart& chart, int dim);

  const Chart& chart() const { return chart_; }
  int dim() const { return dim_; }
  const RationalFn& comp(int k, int i, int j) const { return data_[idx(k, i, j)]; }
  void set(int k, int i, int j, const RationalFn& v);

  bool is_zero() const;
  Tensor12 operator-() const;
  Tensor12 operator+(const Tensor12& o) const;
  Tensor12 operator-(const Tensor12& o) const;
  Tensor12 scaled(const Rational& c) const;
  bool operator==(const Tensor12& o) const {
    return chart_ == o.chart_ && data_ == o.data_;
  }
  bool operator!=(const Tensor12& o) const { return !(*this == o); }

  /// Function-linear evaluation: Z^k = T^k_ij X^i Y^j.
  VectorField eval(const VectorField& x, const VectorField& y) const;

 private:
  size_t idx(int k, int i, int j) const {
    return (static_cast<size_t>(k) * dim_ + i) * dim_ + j;
  }
  Chart chart_;
  int dim_;
  std::vector<RationalFn> data_;
};

/// Lie bracket [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// R acting on a vector field, (RX)^i = R^i_j X^j.
VectorField apply11(const FnMatrix& r, const VectorField& x);

/// R acting on a 1-form from the right, (theta R)_j = theta_i R^i_j.
OneForm coapply11(const OneForm& theta, const FnMatrix& r);

/// Natural pairing <theta, X> = theta_i X^i.
RationalFn pair(const OneForm& theta, const VectorField& x);

/// Differential of a function, df = (d_i f) dx^i.
OneForm d0(const RationalFn& f);

/// Exterior derivative of a 1-form, (d theta)_ij = d_i theta_j - d_j theta_i.
TwoForm d1(const OneForm& theta);

bool is_closed(const OneForm& theta);

/// Lie derivative of a 1-form by Cartan's formula L_X theta = d<theta,X> + i_X d theta.
OneForm lie_derivative(const VectorField& x, const OneForm& theta);

/// Lie derivative of a (1,1) tensor, column by column:
/// (L_X R) e_j = [X, R e_j] - R [X, e_j].
FnMatrix lie_derivative(const VectorField& x, const FnMatrix& r);

VectorField bivector_sharp(const Bivector& p, const OneForm& theta);

/// Exact primitive of a closed polynomial 1-form, normalized to vanish at the
/// origin. Throws NotClosedError (with the first nonvanishing component of
/// d theta as witness) or NonPolynomialError.
RationalFn potential_of_closed(const OneForm& theta);

}  // namespace haantjes
