#include "haantjes/rational_fn.hpp"

#include "haantjes/errors.hpp"

namespace haantjes {

namespace {
Polynomial one_poly(int nvars) { return Polynomial::constant(nvars, Rational(1)); }
}  // namespace

RationalFn::RationalFn(const Chart& chart)
    : chart_(chart), num_(chart.dim()), den_(one_poly(chart.dim())) {}

RationalFn::RationalFn(Chart chart, Polynomial num, Polynomial den)
    : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {}

RationalFn RationalFn::constant(const Chart& chart, const Rational& c) {
  return {Chart(chart), Polynomial::constant(chart.dim(), c), one_poly(chart.dim())};
}

RationalFn RationalFn::variable(const Chart& chart, int var) {
  if (var < 0 || var >= chart.dim()) throw Error("variable index out of range");
  return {Chart(chart), Polynomial::variable(chart.dim(), var), one_poly(chart.dim())};
}

RationalFn RationalFn::from_polynomial(const Chart& chart, Polynomial num) {
  if (num.nvars() != chart.dim()) throw DimensionMismatchError("polynomial arity mismatch");
  return {Chart(chart), std::move(num), one_poly(chart.dim())};
}

RationalFn RationalFn::reduced(const Chart& chart, Polynomial num, Polynomial den) {
  if (num.is_zero()) return RationalFn(chart);
  Rational f;
  Polynomial d = integer_primitive(den, &f);
  return {Chart(chart), num.scaled(Rational(1) / f), std::move(d)};
}

RationalFn RationalFn::from_ratio(const Chart& chart, Polynomial num, Polynomial den) {
  if (num.nvars() != chart.dim() || den.nvars() != chart.dim())
    throw DimensionMismatchError("polynomial arity mismatch");
  if (den.is_zero()) throw DivisionByZeroError("zero denominator");
  if (num.is_zero()) return RationalFn(chart);
  Polynomial g = gcd(num, den);
  if (g.total_degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  return reduced(chart, std::move(num), std::move(den));
}

Rational RationalFn::constant_value() const {
  if (!is_constant()) throw Error("not a constant function");
  return num_.constant_term();
}

RationalFn RationalFn::operator-() const { return {chart_, -num_, den_}; }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  require_same_chart(a.chart_, b.chart_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFn::reduced(a.chart_, a.num_ + b.num_, a.den_);
  return RationalFn::from_ratio(a.chart_, a.num_ * b.den_ + b.num_ * a.den_,
                                a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  require_same_chart(a.chart_, b.chart_);
  if (a.is_zero() || b.is_zero()) return RationalFn(a.chart_);
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFn::reduced(a.chart_, a.num_ * b.num_, a.den_);
  // cross-cancel: both factors are reduced, so after dividing a.num/b.den and
  // b.num/a.den by their gcds all four parts are pairwise coprime
  Polynomial an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
  Polynomial g1 = gcd(an, bd);
  if (g1.total_degree() > 0) {
    an = exact_div(an, g1);
    bd = exact_div(bd, g1);
  }
  Polynomial g2 = gcd(bn, ad);
  if (g2.total_degree() > 0) {
    bn = exact_div(bn, g2);
    ad = exact_div(ad, g2);
  }
  return RationalFn::reduced(a.chart_, an * bn, ad * bd);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  require_same_chart(a.chart_, b.chart_);
  if (b.is_zero()) throw DivisionByZeroError("division by the zero function");
  return a * RationalFn::reduced(b.chart_, b.den_, b.num_);
}

RationalFn RationalFn::scaled(const Rational& c) const {
  if (c.is_zero()) return RationalFn(chart_);
  return {chart_, num_.scaled(c), den_};
}

RationalFn RationalFn::pow(std::int32_t k) const {
  if (k == 0) return constant(chart_, Rational(1));
  if (k > 0) return reduced(chart_, num_.pow(k), den_.pow(k));
  if (is_zero()) throw DivisionByZeroError("zero raised to a negative power");
  return reduced(chart_, den_.pow(-k), num_.pow(-k));
}

RationalFn RationalFn::derivative(int var) const {
  if (var < 0 || var >= chart_.dim()) throw Error("variable index out of range");
  if (is_polynomial()) return reduced(chart_, num_.derivative(var), den_);
  return from_ratio(chart_,
                    num_.derivative(var) * den_ - num_ * den_.derivative(var),
                    den_ * den_);
}

Rational RationalFn::eval_at(const std::vector<Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw PoleError("denominator vanishes at the point");
  return num_.eval(point) / d;
}

RationalFn partial(const RationalFn& f, int var) { return f.derivative(var); }

}  // namespace haantjes
