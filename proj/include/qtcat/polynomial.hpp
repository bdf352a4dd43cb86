#pragma once

// Exact sparse polynomials in two commuting variables q and t with
// arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qtcat {

using Integer = mpz_class;

struct Monomial {
  std::uint32_t q = 0;
  std::uint32_t t = 0;

  std::uint32_t degree() const { return q + t; }
  bool divides(const Monomial& other) const { return q <= other.q && t <= other.t; }
  Monomial operator*(const Monomial& o) const { return {q + o.q, t + o.t}; }
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const { return {other.q - q, other.t - t}; }
  Monomial swapped() const { return {t, q}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with q > t.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.q < b.q;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(long constant);
  explicit Polynomial(const Integer& constant);

  static Polynomial monomial(const Integer& coeff, std::uint32_t q_exp, std::uint32_t t_exp);
  static Polynomial q(std::uint32_t e = 1) { return monomial(1, e, 0); }
  static Polynomial t(std::uint32_t e = 1) { return monomial(1, 0, e); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(std::uint32_t q_exp, std::uint32_t t_exp) const;
  // Leading term under GrlexLess; precondition: nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Integer& leading_coefficient() const { return terms_.rbegin()->second; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_q() const;
  std::uint32_t degree_t() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Integer& c);
  void add_term(std::uint32_t q_exp, std::uint32_t t_exp, const Integer& c) {
    add_term(Monomial{q_exp, t_exp}, c);
  }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;
  Polynomial times_monomial(const Monomial& m, const Integer& c = 1) const;
  // Divides every coefficient by c; precondition: c divides the content.
  Polynomial divided_by_integer(const Integer& c) const;

  // gcd of all coefficients (nonnegative; 0 for the zero polynomial).
  Integer content() const;
  Integer evaluate(long q_val, long t_val) const;
  bool has_nonnegative_coefficients() const;

 private:
  TermMap terms_;
};

// Every term q^j t^k becomes q^k t^j.
Polynomial swap_qt(const Polynomial& p);
inline bool is_symmetric(const Polynomial& p) { return swap_qt(p) == p; }

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Multivariate long division over the integers under graded-lex order.
// A leading term whose coefficient is not divisible by the divisor's leading
// coefficient is moved to the remainder.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

// The exact quotient, or nullopt when divisor does not divide dividend.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// (coeff of q^d, q^{d-1} t, ..., t^d), zeros included.
std::vector<Integer> antidiagonal(const Polynomial& p, std::uint32_t d);

// Weakly increasing then weakly decreasing.
bool is_unimodal(std::span<const Integer> seq);

// Human-readable form, terms in lex order q > t, e.g. "q^3 + q^2 t - 2 t".
std::string to_text(const Polynomial& p);

// {"terms":[{"q":j,"t":k,"c":"<decimal>"}, ...]} sorted by (j desc, k asc).
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace qtcat
