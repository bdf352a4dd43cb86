#pragma once

// Fractions of bivariate polynomials. Only the integer content is reduced;
// no polynomial gcd is taken, so equality is decided by cross-multiplication.

#include "qtcat/polynomial.hpp"

namespace qtcat {

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction swap_qt(const RationalFunction& f);

// F(q,t) + F(t,q).
RationalFunction sigma(const RationalFunction& f);

// Exact quotient numerator / denominator; throws NotPolynomial otherwise.
Polynomial to_polynomial(const RationalFunction& f);

}  // namespace qtcat
