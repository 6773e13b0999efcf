#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "haantjes/rational.hpp"

namespace haantjes {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0), total_(0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  int nvars() const { return static_cast<int>(e_.size()); }
  std::int32_t exp(int i) const { return e_[i]; }
  std::int32_t total_degree() const { return total_; }
  bool is_unit() const { return total_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;

  /// Graded-lex: total degree decides, ties go to the leftmost differing
  /// exponent. Returns <0, 0, >0 as a is below, equal to, above b.
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::int32_t> e_;
  std::int32_t total_;
};

using Term = std::pair<Monomial, Rational>;

/// Multivariate polynomial over the rationals. Terms are kept in strictly
/// descending graded-lex order with no zero coefficients, so representations
/// are unique and operator== decides mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().first.is_unit(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }
  std::int32_t total_degree() const;  // -1 for the zero polynomial
  std::int32_t degree_in(int var) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(std::int32_t k) const;  // k >= 0
  Polynomial derivative(int var) const;
  Rational eval(const std::vector<Rational>& point) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  int nvars_;
  std::vector<Term> terms_;
};

/// Writes p as c * q with q a primitive integer polynomial whose leading
/// coefficient is positive, and returns q. p must be nonzero.
Polynomial integer_primitive(const Polynomial& p, Rational* c = nullptr);

/// Gcd over Q[x1..xn] by primitive pseudo-remainder sequences, normalized to
/// a primitive integer polynomial with positive leading coefficient. Rational
/// contents count as units: gcd of two nonzero constants is 1. Zero iff both
/// inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Quotient a/b when b divides a exactly, nullopt otherwise. The leading-term
/// elimination loop is a complete divisibility test under the monomial order.
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);

/// As try_exact_div, but non-divisibility is an internal Error.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

}  // namespace haantjes
