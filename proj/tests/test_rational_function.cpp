#include <doctest.h>

#include "qtcat/errors.hpp"
#include "qtcat/rational_function.hpp"

using qtcat::Integer;
using qtcat::Polynomial;
using qtcat::RationalFunction;

namespace {

const Polynomial q = Polynomial::q();
const Polynomial t = Polynomial::t();
const Polynomial one(1);

}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(RationalFunction(q, q - t)) == RationalFunction(one));
  CHECK(to_polynomial(sigma(RationalFunction(Polynomial(5)))) == Polynomial(10));
  const RationalFunction f(q.pow(2), one - t);
  CHECK(sigma(f) == f + swap_qt(f));
}

TEST_CASE("telescoping pair") {
  // 1/(1 - t/q) + 1/(1 - q/t), with the inner fractions cleared.
  const RationalFunction left(q, q - t);
  const RationalFunction right(t, t - q);
  CHECK(to_polynomial(left + right) == one);
}

TEST_CASE("field operations") {
  CHECK(to_polynomial(RationalFunction(one - q.pow(2), one - q) * RationalFunction(one)) == one + q);
  const Polynomial w = (one - t) * (one - q);
  CHECK(to_polynomial(RationalFunction((one - q) * (one - t), w)) == one);
  const RationalFunction a(q, one + t);
  const RationalFunction b(t, one - q);
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a / a == RationalFunction(one));
  CHECK(-a + a == RationalFunction());
}

TEST_CASE("normalization") {
  const RationalFunction f(q * Integer(6), t * Integer(-4));
  CHECK(f.denominator().leading_coefficient() > 0);
  CHECK(f.numerator().content() == 3);
  CHECK(f.denominator().content() == 2);
  CHECK(RationalFunction().denominator() == one);
  CHECK(RationalFunction(Polynomial(), q + t).denominator() == one);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(RationalFunction(q, Polynomial()), qtcat::DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(q) / RationalFunction(), qtcat::DivisionByZero);
  CHECK_THROWS_AS(to_polynomial(RationalFunction(one + q, one - t)), qtcat::NotPolynomial);
}

TEST_CASE("exact quotients") {
  CHECK(to_polynomial(RationalFunction(q.pow(2) - t.pow(2), q - t)) == q + t);
  CHECK(to_polynomial(RationalFunction(q.pow(3) - t.pow(3), q - t)) == q.pow(2) + q * t + t.pow(2));
  const Polynomial p = (q + t * Integer(3) + one).pow(5);
  CHECK(to_polynomial(RationalFunction(p)) == p);
}
