#include "haantjes/polynomial.hpp"

#include <algorithm>

#include "haantjes/errors.hpp"

namespace haantjes {

Monomial::Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)), total_(0) {
  for (std::int32_t x : e_) {
    if (x < 0) throw Error("negative exponent in monomial");
    total_ += x;
  }
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
  r.total_ += o.total_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) {
    r.e_[i] -= o.e_[i];
    if (r.e_[i] < 0) throw Error("monomial division is not exact");
  }
  r.total_ -= o.total_;
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.total_ != b.total_) return a.total_ < b.total_ ? -1 : 1;
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  return 0;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw Error("variable index out of range");
  std::vector<std::int32_t> e(nvars, 0);
  e[var] = 1;
  Polynomial p(nvars);
  p.terms_.emplace_back(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.first.nvars() != nvars) throw DimensionMismatchError("term arity mismatch");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::compare(a.first, b.first) > 0;
  });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second.is_zero(); });
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second.is_one();
}

std::int32_t Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().first.total_degree();
}

std::int32_t Polynomial::degree_in(int var) const {
  std::int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_unit()) return terms_.back().second;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatchError("polynomial arity mismatch");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatchError("polynomial arity mismatch");
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc.emplace_back(ma.times(mb), ca * cb);
  return from_terms(nvars_, std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [m, co] : r.terms_) co *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  // graded-lex order is translation invariant, so the term order survives
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm.times(m), cc * c);
  return r;
}

Polynomial Polynomial::pow(std::int32_t k) const {
  if (k < 0) throw Error("negative polynomial power");
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::int32_t e = m.exp(var);
    if (e == 0) continue;
    std::vector<std::int32_t> exps(nvars_);
    for (int i = 0; i < nvars_; ++i) exps[i] = m.exp(i);
    exps[var] = e - 1;
    acc.emplace_back(Monomial(std::move(exps)), c * Rational(e));
  }
  return from_terms(nvars_, std::move(acc));
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatchError("evaluation point arity mismatch");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      if (std::int32_t e = m.exp(i); e > 0)
        v *= point[i].pow(static_cast<std::uint32_t>(e));
    total += v;
  }
  return total;
}

Polynomial integer_primitive(const Polynomial& p, Rational* c) {
  if (p.is_zero()) throw Error("integer_primitive of the zero polynomial");
  mpz_class den_lcm = 1;
  for (const auto& [m, co] : p.terms()) den_lcm = lcm(den_lcm, co.denominator());
  mpz_class num_gcd = 0;
  for (const auto& [m, co] : p.terms()) {
    mpq_class scaled = co.raw() * den_lcm;
    num_gcd = gcd(num_gcd, scaled.get_num());
  }
  if (p.leading_coeff().sign() < 0) num_gcd = -num_gcd;
  Rational factor{mpq_class(num_gcd, den_lcm)};
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& [m, co] : p.terms()) out.emplace_back(m, co / factor);
  if (c) *c = factor;
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
  for (int v = 0; v < a.nvars(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

/// Coefficient of v^d, with the v-exponent cleared.
Polynomial coeff_of(const Polynomial& p, int v, std::int32_t d) {
  std::vector<Term> acc;
  for (const auto& [m, c] : p.terms()) {
    if (m.exp(v) != d) continue;
    std::vector<std::int32_t> exps(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) exps[i] = m.exp(i);
    exps[v] = 0;
    acc.emplace_back(Monomial(std::move(exps)), c);
  }
  return Polynomial::from_terms(p.nvars(), std::move(acc));
}

Polynomial times_var_power(const Polynomial& p, int v, std::int32_t d) {
  std::vector<std::int32_t> e(p.nvars(), 0);
  e[v] = d;
  return p.times_term(Monomial(std::move(e)), Rational(1));
}

Polynomial gcd_zz(const Polynomial& a, const Polynomial& b);

/// Polynomial content with respect to v: gcd of the v-coefficients.
Polynomial content_in(const Polynomial& p, int v) {
  Polynomial g(p.nvars());
  for (std::int32_t d = 0; d <= p.degree_in(v); ++d) {
    Polynomial c = coeff_of(p, v, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? integer_primitive(c) : gcd_zz(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial pseudo_rem(Polynomial r, const Polynomial& b, int v) {
  const std::int32_t db = b.degree_in(v);
  const Polynomial lb = coeff_of(b, v, db);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    std::int32_t dr = r.degree_in(v);
    Polynomial lr = coeff_of(r, v, dr);
    r = lb * r - times_var_power(lr * b, v, dr - db);
  }
  return r;
}

Polynomial gcd_zz(const Polynomial& a, const Polynomial& b) {
  Polynomial A = integer_primitive(a);
  Polynomial B = integer_primitive(b);
  int v = main_variable(A, B);
  if (v < 0) return Polynomial::constant(A.nvars(), Rational(1));
  if (A.degree_in(v) == 0) return gcd_zz(A, content_in(B, v));
  if (B.degree_in(v) == 0) return gcd_zz(content_in(A, v), B);
  Polynomial ca = content_in(A, v);
  Polynomial cb = content_in(B, v);
  Polynomial g = gcd_zz(ca, cb);
  Polynomial p0 = exact_div(A, ca);
  Polynomial p1 = exact_div(B, cb);
  if (p0.degree_in(v) < p1.degree_in(v)) std::swap(p0, p1);
  while (!p1.is_zero()) {
    Polynomial r = pseudo_rem(p0, p1, v);
    p0 = std::move(p1);
    if (r.is_zero()) {
      p1 = std::move(r);
    } else {
      Polynomial cr = content_in(r, v);
      p1 = integer_primitive(exact_div(r, cr));
    }
  }
  return integer_primitive(g * p0);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatchError("polynomial arity mismatch");
  if (a.is_zero() && b.is_zero()) return Polynomial(a.nvars());
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  return gcd_zz(a, b);
}

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatchError("polynomial arity mismatch");
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.is_zero()) return Polynomial(a.nvars());
  std::vector<Term> q;
  Polynomial r = a;
  const Monomial& lmb = b.leading_monomial();
  while (!r.is_zero()) {
    if (!lmb.divides(r.leading_monomial())) return std::nullopt;
    Monomial m = r.leading_monomial().divided_by(lmb);
    Rational c = r.leading_coeff() / b.leading_coeff();
    q.emplace_back(m, c);
    r = r - b.times_term(m, c);
  }
  return Polynomial::from_terms(a.nvars(), std::move(q));
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error("polynomial division is not exact");
  return std::move(*q);
}

}  // namespace haantjes
