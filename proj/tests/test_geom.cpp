#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haantjes/errors.hpp"
#include "haantjes/geometry.hpp"
#include "support/build.hpp"
#include "support/gen.hpp"

using namespace haantjes;
using build::fn;
using build::form;
using build::mat;
using build::vf;

namespace {

Chart u3() { return Chart({"u1", "u2", "u3"}); }

FnMatrix k_op(const Chart& c) {
  return mat(c, {{"0", "2", "0"}, {"-u1", "0", "2"}, {"-1/2*u2", "0", "0"}});
}

FnMatrix k2_op(const Chart& c) {
  return k_op(c) * k_op(c) + FnMatrix::identity(c, 3).scaled(RationalFn::variable(c, 0));
}

VectorField random_vf(gen::Rng& rng, const Chart& c, int deg) {
  std::vector<RationalFn> comps;
  for (int i = 0; i < c.dim(); ++i)
    comps.push_back(RationalFn::from_polynomial(c, gen::polynomial(rng, c.dim(), deg, 3)));
  return VectorField(c, std::move(comps));
}

OneForm random_form(gen::Rng& rng, const Chart& c, int deg) {
  std::vector<RationalFn> comps;
  for (int i = 0; i < c.dim(); ++i)
    comps.push_back(RationalFn::from_polynomial(c, gen::polynomial(rng, c.dim(), deg, 3)));
  return OneForm(c, std::move(comps));
}

FnMatrix random_op(gen::Rng& rng, const Chart& c, int deg) {
  FnMatrix m(c, c.dim(), c.dim());
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      m.at(i, j) = RationalFn::from_polynomial(c, gen::polynomial(rng, c.dim(), deg, 3));
  return m;
}

/// Directional derivative X(f).
RationalFn deriv_along(const VectorField& x, const RationalFn& f) {
  RationalFn s(f.chart());
  for (int i = 0; i < x.dim(); ++i) s = s + x.comp(i) * f.derivative(i);
  return s;
}

}  // namespace

TEST_CASE("field and form construction") {
  Chart c = u3();
  CHECK(VectorField::zero(c).is_zero());
  CHECK(VectorField::basis(c, 2) == vf(c, {"0", "0", "1"}));
  CHECK(OneForm::basis(c, 0) == form(c, {"1", "0", "0"}));
  CHECK_THROWS_AS(VectorField(c, {fn(c, "1")}), DimensionMismatchError);
  CHECK_THROWS_AS(TwoForm(c, mat(c, {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}})),
                  Error);
  CHECK_THROWS_AS(Bivector(c, FnMatrix::identity(c, 3)), Error);

  VectorField x = vf(c, {"u1", "0", "2"});
  CHECK(x + (-x) == VectorField::zero(c));
  CHECK(x.scaled(fn(c, "u2")) == vf(c, {"u1*u2", "0", "2*u2"}));
}

TEST_CASE("lie brackets") {
  Chart c = u3();
  CHECK(lie_bracket(VectorField::basis(c, 0), VectorField::basis(c, 1)).is_zero());
  CHECK(lie_bracket(vf(c, {"0", "-u1", "-1/2*u2"}), vf(c, {"2", "0", "0"})) ==
        vf(c, {"0", "2", "0"}));
  CHECK(lie_bracket(vf(c, {"0", "u1", "0"}), vf(c, {"u2", "0", "0"})) ==
        vf(c, {"u1", "-u2", "0"}));
}

TEST_CASE("operator actions on fields and forms") {
  Chart c = u3();
  FnMatrix k = k_op(c);
  FnMatrix k2 = k2_op(c);

  CHECK(apply11(k, VectorField::basis(c, 1)) == vf(c, {"2", "0", "0"}));
  CHECK(apply11(k2, VectorField::basis(c, 2)) == vf(c, {"4", "0", "u1"}));
  CHECK(apply11(k, VectorField::basis(c, 2)) == vf(c, {"0", "2", "0"}));

  OneForm th = OneForm::basis(c, 0);
  CHECK(coapply11(th, k) == form(c, {"0", "2", "0"}));
  CHECK(coapply11(th, k2) == form(c, {"-u1", "0", "4"}));

  FnMatrix id = FnMatrix::identity(c, 3);
  gen::Rng rng(11);
  VectorField x = random_vf(rng, c, 2);
  OneForm w = random_form(rng, c, 2);
  CHECK(apply11(id, x) == x);
  CHECK(coapply11(w, id) == w);
}

TEST_CASE("exterior derivative and closedness") {
  Chart c = u3();
  CHECK(d1(OneForm::basis(c, 0)).is_zero());
  CHECK(is_closed(OneForm::basis(c, 0)));

  OneForm bad = form(c, {"-2*u2", "-4*u1", "0"});
  CHECK(!is_closed(bad));
  CHECK(d1(bad).at(0, 1) == fn(c, "-2"));

  CHECK(is_closed(form(c, {"u1^2", "-4*u2", "0"})));
  CHECK(is_closed(form(c, {"-u1", "0", "4"})));
}

TEST_CASE("potentials of closed forms") {
  Chart c = u3();
  CHECK(potential_of_closed(form(c, {"0", "2", "0"})) == fn(c, "2*u2"));
  CHECK(potential_of_closed(form(c, {"-u1", "0", "4"})) == fn(c, "-1/2*u1^2 + 4*u3"));
  CHECK(potential_of_closed(OneForm::basis(c, 0)) == fn(c, "u1"));

  try {
    potential_of_closed(form(c, {"-2*u2", "-4*u1", "0"}));
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.witness == "-2");
  }
  CHECK_THROWS_AS(potential_of_closed(form(c, {"1/u1", "0", "0"})), NonPolynomialError);
}

TEST_CASE("pairing") {
  Chart c = u3();
  CHECK(pair(OneForm::basis(c, 0), VectorField::basis(c, 0)).is_one());
  CHECK(pair(form(c, {"-u1", "0", "4"}), vf(c, {"4", "0", "u1"})).is_zero());
  CHECK(pair(form(c, {"0", "2", "0"}), vf(c, {"0", "2", "0"})) == fn(c, "4"));
}

TEST_CASE("lie derivatives") {
  Chart c = u3();
  VectorField x = VectorField::basis(c, 2);
  CHECK(lie_derivative(x, OneForm::basis(c, 0)).is_zero());
  CHECK(lie_derivative(x, k_op(c)).is_zero());
  CHECK(lie_derivative(VectorField::basis(c, 0), form(c, {"u1", "0", "0"})) ==
        OneForm::basis(c, 0));
}

TEST_CASE("lie derivative of an operator is tensorial") {
  Chart c = u3();
  gen::Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    VectorField x = random_vf(rng, c, 2);
    FnMatrix r = random_op(rng, c, 2);
    FnMatrix lxr = lie_derivative(x, r);
    VectorField y = random_vf(rng, c, 2);
    CHECK(apply11(lxr, y) ==
          lie_bracket(x, apply11(r, y)) - apply11(r, lie_bracket(x, y)));
  }
}

TEST_CASE("bivector sharp") {
  Chart qp = Chart({"q", "p"});
  Bivector pois(qp, mat(qp, {{"0", "1"}, {"-1", "0"}}));
  RationalFn h = fn(qp, "1/2*p^2");
  CHECK(bivector_sharp(pois, d0(h)) == vf(qp, {"p", "0"}));
  CHECK(bivector_sharp(pois, OneForm::zero(qp)).is_zero());
  Bivector zero(qp, FnMatrix(qp, 2, 2));
  CHECK(bivector_sharp(zero, d0(h)).is_zero());
}

TEST_CASE("tensor12 slots and evaluation") {
  Chart c = u3();
  Tensor12 t(c, 3);
  t.set(2, 0, 1, fn(c, "u2"));
  CHECK(t.comp(2, 1, 0) == fn(c, "-u2"));
  CHECK_THROWS_AS(t.set(0, 1, 1, fn(c, "1")), Error);

  VectorField x = vf(c, {"1", "0", "0"});
  VectorField y = vf(c, {"0", "1", "0"});
  CHECK(t.eval(x, y) == vf(c, {"0", "0", "u2"}));
  CHECK(t.eval(y, x) == vf(c, {"0", "0", "-u2"}));
  CHECK(t.eval(x, x).is_zero());

  // function-linearity in each slot
  RationalFn f = fn(c, "u1*u3");
  CHECK(t.eval(x.scaled(f), y) == t.eval(x, y).scaled(f));
  CHECK(t.eval(x, y.scaled(f)) == t.eval(x, y).scaled(f));
}

TEST_CASE("property: bracket bilinearity, skewness, Jacobi") {
  Chart c = u3();
  gen::Rng rng(501);
  for (int t = 0; t < 50; ++t) {
    VectorField x = random_vf(rng, c, 2);
    VectorField y = random_vf(rng, c, 2);
    VectorField z = random_vf(rng, c, 2);
    CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
    Rational a = gen::rational(rng);
    RationalFn ac = RationalFn::constant(c, a);
    CHECK(lie_bracket(x.scaled(ac) + y, z) ==
          lie_bracket(x, z).scaled(ac) + lie_bracket(y, z));
    VectorField jac = lie_bracket(x, lie_bracket(y, z)) +
                      lie_bracket(y, lie_bracket(z, x)) +
                      lie_bracket(z, lie_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("property: d1 after d0 vanishes") {
  Chart c = u3();
  gen::Rng rng(502);
  for (int t = 0; t < 25; ++t) {
    RationalFn f = gen::rational_fn(rng, c, 3);
    CHECK(d1(d0(f)).is_zero());
  }
}

TEST_CASE("property: coapply duality") {
  Chart c = u3();
  gen::Rng rng(503);
  for (int t = 0; t < 25; ++t) {
    OneForm th = random_form(rng, c, 2);
    VectorField x = random_vf(rng, c, 2);
    FnMatrix r = random_op(rng, c, 2);
    CHECK(pair(coapply11(th, r), x) == pair(th, apply11(r, x)));
  }
}

TEST_CASE("property: potential is a right inverse of the gradient") {
  Chart c = u3();
  gen::Rng rng(504);
  for (int t = 0; t < 25; ++t) {
    Polynomial p = gen::polynomial(rng, 3, 4, 5);
    OneForm th = d0(RationalFn::from_polynomial(c, p));
    RationalFn f = potential_of_closed(th);
    CHECK(d0(f) == th);
    CHECK(f.eval_at({Rational(0), Rational(0), Rational(0)}) == Rational(0));
  }
}

TEST_CASE("property: lie derivative is a pairing derivation") {
  Chart c = u3();
  gen::Rng rng(505);
  for (int t = 0; t < 20; ++t) {
    VectorField x = random_vf(rng, c, 2);
    VectorField y = random_vf(rng, c, 2);
    OneForm th = random_form(rng, c, 2);
    RationalFn lhs = deriv_along(x, pair(th, y));
    RationalFn rhs = pair(lie_derivative(x, th), y) + pair(th, lie_bracket(x, y));
    CHECK(lhs == rhs);
  }
}
