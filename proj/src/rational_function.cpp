#include "qtcat/rational_function.hpp"

#include "qtcat/errors.hpp"

namespace qtcat {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) { normalize(); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Integer g = num_.content();
  const Integer dg = den_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dg.get_mpz_t());
  if (den_.leading_coefficient() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_by_integer(g);
    den_ = den_.divided_by_integer(g);
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction swap_qt(const RationalFunction& f) {
  return RationalFunction(swap_qt(f.numerator()), swap_qt(f.denominator()));
}

RationalFunction sigma(const RationalFunction& f) { return f + swap_qt(f); }

Polynomial to_polynomial(const RationalFunction& f) {
  auto q = divide_exact(f.numerator(), f.denominator());
  if (!q) throw NotPolynomial("denominator does not divide numerator");
  return std::move(*q);
}

}  // namespace qtcat
