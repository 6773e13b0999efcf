#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "haantjes/chart.hpp"
#include "haantjes/polynomial.hpp"

namespace haantjes {

/// Rational function num/den over a chart, always in canonical form: num and
/// den are coprime and den is a primitive integer polynomial with positive
/// leading coefficient (den == 1 for polynomials). Canonical forms make
/// structural equality decide mathematical equality.
class RationalFn {
 public:
  explicit RationalFn(const Chart& chart);  // the zero function
  static RationalFn constant(const Chart& chart, const Rational& c);
  static RationalFn variable(const Chart& chart, int var);
  static RationalFn from_polynomial(const Chart& chart, Polynomial num);
  static RationalFn from_ratio(const Chart& chart, Polynomial num, Polynomial den);

  const Chart& chart() const { return chart_; }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Value of a constant function; throws otherwise.
  Rational constant_value() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  RationalFn scaled(const Rational& c) const;
  /// Integer power; negative exponents fold into the quotient, 0^0 = 1.
  RationalFn pow(std::int32_t k) const;
  RationalFn derivative(int var) const;
  Rational eval_at(const std::vector<Rational>& point) const;

  bool operator==(const RationalFn& o) const {
    return chart_ == o.chart_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  /// Canonical rendering; parse_expr(str()) reproduces the value exactly.
  std::string str() const;

 private:
  RationalFn(Chart chart, Polynomial num, Polynomial den);
  /// Skips the gcd: callers guarantee num and den are already coprime.
  static RationalFn reduced(const Chart& chart, Polynomial num, Polynomial den);

  Chart chart_;
  Polynomial num_;
  Polynomial den_;
};

/// Exact partial derivative with respect to chart variable var.
RationalFn partial(const RationalFn& f, int var);

inline bool is_zero(const RationalFn& f) { return f.is_zero(); }

inline Rational eval_at(const RationalFn& f, const std::vector<Rational>& point) {
  return f.eval_at(point);
}

}  // namespace haantjes
