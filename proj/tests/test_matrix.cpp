#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haantjes/errors.hpp"
#include "haantjes/matrix.hpp"
#include "support/build.hpp"
#include "support/gen.hpp"

using namespace haantjes;
using build::fn;
using build::mat;

namespace {

Chart u3() { return Chart({"u1", "u2", "u3"}); }

FnMatrix random_matrix(gen::Rng& rng, const Chart& c, int n, int deg) {
  FnMatrix m(c, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = RationalFn::from_polynomial(c, gen::polynomial(rng, c.dim(), deg, 3));
  return m;
}

}  // namespace

TEST_CASE("matrix construction and predicates") {
  Chart c = u3();
  FnMatrix id = FnMatrix::identity(c, 3);
  CHECK(id.is_identity());
  CHECK(!id.is_zero());
  CHECK(id.is_symmetric());
  CHECK(!id.is_skew());
  CHECK(FnMatrix(c, 2, 3).is_zero());

  FnMatrix skew = mat(c, {{"0", "u1"}, {"-u1", "0"}});
  CHECK(skew.is_skew());
  CHECK(!skew.is_symmetric());

  CHECK_THROWS_AS(mat(c, {{"1", "2"}, {"3"}}), DimensionMismatchError);
  CHECK_THROWS_AS(FnMatrix(c, 0, 2), DimensionMismatchError);
}

TEST_CASE("matrix ring operations") {
  Chart c = u3();
  FnMatrix k = mat(c, {{"0", "2", "0"}, {"-u1", "0", "2"}, {"-1/2*u2", "0", "0"}});
  FnMatrix k2 = k * k;
  CHECK(k2 == mat(c, {{"-2*u1", "0", "4"}, {"-u2", "-2*u1", "0"}, {"0", "-u2", "0"}}));
  CHECK(k.pow(2) == k2);
  CHECK(k.pow(0).is_identity());
  CHECK(k.pow(3) == k2 * k);

  FnMatrix cap2 = k2 + FnMatrix::identity(c, 3).scaled(RationalFn::variable(c, 0));
  CHECK(cap2 == mat(c, {{"-u1", "0", "4"}, {"-u2", "-u1", "0"}, {"0", "-u2", "u1"}}));
  CHECK(k * cap2 == cap2 * k);
  CHECK((k - k).is_zero());
  CHECK(k.transpose().transpose() == k);
  CHECK(k.trace().is_zero());
  CHECK(cap2.trace() == fn(c, "-u1"));

  // the corrected square of K_2, checked entry by entry upstream
  CHECK(cap2 * cap2 == mat(c, {{"u1^2", "-4*u2", "0"},
                               {"2*u1*u2", "u1^2", "-4*u2"},
                               {"u2^2", "0", "u1^2"}}));
}

TEST_CASE("determinant, inverse, solve") {
  Chart c = u3();
  FnMatrix k = mat(c, {{"0", "2", "0"}, {"-u1", "0", "2"}, {"-1/2*u2", "0", "0"}});
  CHECK(k.det() == fn(c, "-2*u2"));

  FnMatrix kinv = k.inverse();
  CHECK((k * kinv).is_identity());
  CHECK((kinv * k).is_identity());

  FnMatrix sing = mat(c, {{"u1", "u2"}, {"u1*u2", "u2^2"}});
  CHECK(sing.det().is_zero());
  CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
  CHECK_THROWS_AS(sing.solve(FnMatrix::identity(c, 2)), SingularMatrixError);

  // pivoting: zero in the (1,1) slot must not derail elimination
  FnMatrix piv = mat(c, {{"0", "1"}, {"1", "0"}});
  CHECK(piv.det() == fn(c, "-1"));
  CHECK(piv.solve(mat(c, {{"u1"}, {"u2"}})) == mat(c, {{"u2"}, {"u1"}}));

  FnMatrix rhs = mat(c, {{"1", "u3"}, {"0", "u1"}, {"u2", "0"}});
  FnMatrix x = k.solve(rhs);
  CHECK(k * x == rhs);
  CHECK(x == kinv * rhs);
}

TEST_CASE("random inverse and solve round-trips") {
  Chart c = u3();
  gen::Rng rng(424242);
  int done = 0;
  while (done < 12) {
    int n = 2 + static_cast<int>(rng.below(2));
    FnMatrix a = random_matrix(rng, c, n, 1);
    if (a.det().is_zero()) continue;
    ++done;
    CHECK((a * a.inverse()).is_identity());
    FnMatrix b = random_matrix(rng, c, n, 1);
    CHECK(a * a.solve(b) == b);
  }
}

TEST_CASE("determinant is multiplicative") {
  Chart c = u3();
  gen::Rng rng(99);
  for (int t = 0; t < 10; ++t) {
    FnMatrix a = random_matrix(rng, c, 3, 1);
    FnMatrix b = random_matrix(rng, c, 3, 1);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("characteristic polynomial") {
  Chart c = u3();
  FnMatrix k = mat(c, {{"0", "2", "0"}, {"-u1", "0", "2"}, {"-1/2*u2", "0", "0"}});
  auto pc = charpoly_at(k, {Rational(1), Rational(1), Rational(1)});
  REQUIRE(pc.size() == 4);
  CHECK(pc[0] == Rational(1));
  CHECK(pc[1] == Rational(0));
  CHECK(pc[2] == Rational(2));
  CHECK(pc[3] == Rational(2));

  // constant coefficient is (-1)^n det, next-to-leading is -trace
  gen::Rng rng(7);
  std::vector<Rational> pt = {gen::rational(rng), gen::rational(rng), gen::rational(rng)};
  FnMatrix a = random_matrix(rng, c, 3, 2);
  auto pa = charpoly_at(a, pt);
  CHECK(pa[3] == -a.det().eval_at(pt));
  CHECK(pa[1] == -a.trace().eval_at(pt));

  FnMatrix pole(c, 1, 1);
  pole.at(0, 0) = fn(c, "1/u1");
  CHECK_THROWS_AS(charpoly_at(pole, {Rational(0), Rational(0), Rational(0)}), PoleError);
}

TEST_CASE("squarefree detection") {
  CHECK(squarefree({Rational(1), Rational(0), Rational(2), Rational(2)}));
  CHECK(squarefree({Rational(1), Rational(0), Rational(-1)}));       // x^2 - 1
  CHECK(!squarefree({Rational(1), Rational(2), Rational(1)}));       // (x+1)^2
  CHECK(!squarefree({Rational(1), Rational(0), Rational(0)}));       // x^2
  CHECK(squarefree({Rational(1), Rational(5)}));
  CHECK(squarefree({Rational(3)}));
  // 2x^2 + 4x + 2 = 2(x+1)^2: content must not hide the square
  CHECK(!squarefree({Rational(2), Rational(4), Rational(2)}));
}

TEST_CASE("entrywise derivative") {
  Chart c = u3();
  FnMatrix m = mat(c, {{"u1^2", "u1*u2"}, {"1/u1", "7"}});
  CHECK(m.derivative(0) == mat(c, {{"2*u1", "u2"}, {"-1/u1^2", "0"}}));
  CHECK(m.derivative(2).is_zero());
}
