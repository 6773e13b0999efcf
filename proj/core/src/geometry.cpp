#include "haantjes/geometry.hpp"

#include <utility>

#include "haantjes/errors.hpp"

namespace haantjes {

namespace {

std::vector<RationalFn> checked_comps(const Chart& chart, std::vector<RationalFn> comps) {
  if (static_cast<int>(comps.size()) != chart.dim())
    throw DimensionMismatchError("component count does not match the chart dimension");
  for (const auto& f : comps) require_same_chart(chart, f.chart());
  return comps;
}

std::vector<RationalFn> zeros(const Chart& chart) {
  return std::vector<RationalFn>(chart.dim(), RationalFn(chart));
}

}  // namespace

VectorField::VectorField(const Chart& chart, std::vector<RationalFn> comps)
    : chart_(chart), comps_(checked_comps(chart, std::move(comps))) {}

VectorField VectorField::zero(const Chart& chart) { return VectorField(chart, zeros(chart)); }

VectorField VectorField::basis(const Chart& chart, int i) {
  auto c = zeros(chart);
  c.at(i) = RationalFn::constant(chart, Rational(1));
  return VectorField(chart, std::move(c));
}

bool VectorField::is_zero() const {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  auto c = comps_;
  for (auto& f : c) f = -f;
  return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator+(const VectorField& o) const {
  require_same_chart(chart_, o.chart_);
  auto c = comps_;
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.comps_[i];
  return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::scaled(const RationalFn& f) const {
  require_same_chart(chart_, f.chart());
  auto c = comps_;
  for (auto& g : c) g = g * f;
  return VectorField(chart_, std::move(c));
}

OneForm::OneForm(const Chart& chart, std::vector<RationalFn> comps)
    : chart_(chart), comps_(checked_comps(chart, std::move(comps))) {}

OneForm OneForm::zero(const Chart& chart) { return OneForm(chart, zeros(chart)); }

OneForm OneForm::basis(const Chart& chart, int i) {
  auto c = zeros(chart);
  c.at(i) = RationalFn::constant(chart, Rational(1));
  return OneForm(chart, std::move(c));
}

bool OneForm::is_zero() const {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

OneForm OneForm::operator-() const {
  auto c = comps_;
  for (auto& f : c) f = -f;
  return OneForm(chart_, std::move(c));
}

OneForm OneForm::operator+(const OneForm& o) const {
  require_same_chart(chart_, o.chart_);
  auto c = comps_;
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.comps_[i];
  return OneForm(chart_, std::move(c));
}

OneForm OneForm::operator-(const OneForm& o) const { return *this + (-o); }

OneForm OneForm::scaled(const RationalFn& f) const {
  require_same_chart(chart_, f.chart());
  auto c = comps_;
  for (auto& g : c) g = g * f;
  return OneForm(chart_, std::move(c));
}

TwoForm::TwoForm(const Chart& chart, FnMatrix m) : mat_(std::move(m)) {
  require_same_chart(chart, mat_.chart());
  if (mat_.rows() != chart.dim() || mat_.cols() != chart.dim())
    throw DimensionMismatchError("2-form matrix does not match the chart dimension");
  if (!mat_.is_skew()) throw Error("2-form matrix is not skew");
}

Bivector::Bivector(const Chart& chart, FnMatrix m) : mat_(std::move(m)) {
  require_same_chart(chart, mat_.chart());
  if (mat_.rows() != chart.dim() || mat_.cols() != chart.dim())
    throw DimensionMismatchError("bivector matrix does not match the chart dimension");
  if (!mat_.is_skew()) throw Error("bivector matrix is not skew");
}

Tensor12::Tensor12(const Chart& chart, int dim) : chart_(chart), dim_(dim) {
  if (dim != chart.dim())
    throw DimensionMismatchError("tensor dimension does not match the chart");
  data_.assign(static_cast<size_t>(dim) * dim * dim, RationalFn(chart));
}

void Tensor12::set(int k, int i, int j, const RationalFn& v) {
  require_same_chart(chart_, v.chart());
  if (i == j) {
    if (!v.is_zero()) throw Error("diagonal slot of a skew tensor must stay zero");
    return;
  }
  data_[idx(k, i, j)] = v;
  data_[idx(k, j, i)] = -v;
}

bool Tensor12::is_zero() const {
  for (const auto& f : data_)
    if (!f.is_zero()) return false;
  return true;
}

Tensor12 Tensor12::operator-() const {
  Tensor12 t(chart_, dim_);
  for (size_t i = 0; i < data_.size(); ++i) t.data_[i] = -data_[i];
  return t;
}

Tensor12 Tensor12::operator+(const Tensor12& o) const {
  require_same_chart(chart_, o.chart_);
  Tensor12 t(chart_, dim_);
  for (size_t i = 0; i < data_.size(); ++i) t.data_[i] = data_[i] + o.data_[i];
  return t;
}

Tensor12 Tensor12::operator-(const Tensor12& o) const { return *this + (-o); }

Tensor12 Tensor12::scaled(const Rational& c) const {
  Tensor12 t(chart_, dim_);
  for (size_t i = 0; i < data_.size(); ++i) t.data_[i] = data_[i].scaled(c);
  return t;
}

VectorField Tensor12::eval(const VectorField& x, const VectorField& y) const {
  require_same_chart(chart_, x.chart());
  require_same_chart(chart_, y.chart());
  auto comps = std::vector<RationalFn>(dim_, RationalFn(chart_));
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i) {
      if (x.comp(i).is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const RationalFn& t = comp(k, i, j);
        if (t.is_zero() || y.comp(j).is_zero()) continue;
        comps[k] = comps[k] + t * x.comp(i) * y.comp(j);
      }
    }
  return VectorField(chart_, std::move(comps));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart());
  const Chart& chart = x.chart();
  const int n = chart.dim();
  std::vector<RationalFn> comps(n, RationalFn(chart));
  for (int k = 0; k < n; ++k) {
    RationalFn s(chart);
    for (int i = 0; i < n; ++i) {
      if (!x.comp(i).is_zero()) s = s + x.comp(i) * y.comp(k).derivative(i);
      if (!y.comp(i).is_zero()) s = s - y.comp(i) * x.comp(k).derivative(i);
    }
    comps[k] = std::move(s);
  }
  return VectorField(chart, std::move(comps));
}

VectorField apply11(const FnMatrix& r, const VectorField& x) {
  require_same_chart(r.chart(), x.chart());
  const Chart& chart = x.chart();
  const int n = chart.dim();
  if (r.rows() != n || r.cols() != n)
    throw DimensionMismatchError("operator matrix does not match the chart dimension");
  std::vector<RationalFn> comps(n, RationalFn(chart));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (r.at(i, j).is_zero() || x.comp(j).is_zero()) continue;
      comps[i] = comps[i] + r.at(i, j) * x.comp(j);
    }
  return VectorField(chart, std::move(comps));
}

OneForm coapply11(const OneForm& theta, const FnMatrix& r) {
  require_same_chart(r.chart(), theta.chart());
  const Chart& chart = theta.chart();
  const int n = chart.dim();
  if (r.rows() != n || r.cols() != n)
    throw DimensionMismatchError("operator matrix does not match the chart dimension");
  std::vector<RationalFn> comps(n, RationalFn(chart));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (theta.comp(i).is_zero() || r.at(i, j).is_zero()) continue;
      comps[j] = comps[j] + theta.comp(i) * r.at(i, j);
    }
  return OneForm(chart, std::move(comps));
}

RationalFn pair(const OneForm& theta, const VectorField& x) {
  require_same_chart(theta.chart(), x.chart());
  RationalFn s(theta.chart());
  for (int i = 0; i < theta.dim(); ++i) s = s + theta.comp(i) * x.comp(i);
  return s;
}

OneForm d0(const RationalFn& f) {
  const Chart& chart = f.chart();
  std::vector<RationalFn> comps(chart.dim(), RationalFn(chart));
  for (int i = 0; i < chart.dim(); ++i) comps[i] = f.derivative(i);
  return OneForm(chart, std::move(comps));
}

TwoForm d1(const OneForm& theta) {
  const Chart& chart = theta.chart();
  const int n = chart.dim();
  FnMatrix m(chart, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RationalFn v = theta.comp(j).derivative(i) - theta.comp(i).derivative(j);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return TwoForm(chart, std::move(m));
}

bool is_closed(const OneForm& theta) { return d1(theta).is_zero(); }

OneForm lie_derivative(const VectorField& x, const OneForm& theta) {
  OneForm exact = d0(pair(theta, x));
  TwoForm dth = d1(theta);
  const Chart& chart = theta.chart();
  const int n = chart.dim();
  std::vector<RationalFn> hook(n, RationalFn(chart));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (x.comp(i).is_zero() || dth.at(i, j).is_zero()) continue;
      hook[j] = hook[j] + x.comp(i) * dth.at(i, j);
    }
  return exact + OneForm(chart, std::move(hook));
}

FnMatrix lie_derivative(const VectorField& x, const FnMatrix& r) {
  require_same_chart(x.chart(), r.chart());
  const Chart& chart = x.chart();
  const int n = chart.dim();
  if (r.rows() != n || r.cols() != n)
    throw DimensionMismatchError("operator matrix does not match the chart dimension");
  FnMatrix out(chart, n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<RationalFn> col(n, RationalFn(chart));
    for (int i = 0; i < n; ++i) col[i] = r.at(i, j);
    VectorField rej(chart, std::move(col));
    VectorField lhs = lie_bracket(x, rej);
    VectorField rhs = apply11(r, lie_bracket(x, VectorField::basis(chart, j)));
    for (int i = 0; i < n; ++i) out.at(i, j) = lhs.comp(i) - rhs.comp(i);
  }
  return out;
}

VectorField bivector_sharp(const Bivector& p, const OneForm& theta) {
  require_same_chart(p.chart(), theta.chart());
  const Chart& chart = theta.chart();
  const int n = chart.dim();
  std::vector<RationalFn> comps(n, RationalFn(chart));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (p.at(i, j).is_zero() || theta.comp(j).is_zero()) continue;
      comps[i] = comps[i] + p.at(i, j) * theta.comp(j);
    }
  return VectorField(chart, std::move(comps));
}

}  // namespace haantjes
