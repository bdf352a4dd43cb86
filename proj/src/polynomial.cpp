#include "qtcat/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "qtcat/errors.hpp"

namespace qtcat {

namespace {

// Dense accumulation is used for products whose exponent box is at most this
// many cells.
constexpr std::uint64_t kDenseProductLimit = std::uint64_t{1} << 20;

bool divisible(const Integer& c, const Integer& by) { return mpz_divisible_p(c.get_mpz_t(), by.get_mpz_t()) != 0; }

}  // namespace

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

Polynomial Polynomial::monomial(const Integer& coeff, std::uint32_t q_exp, std::uint32_t t_exp) {
  Polynomial p;
  p.add_term(Monomial{q_exp, t_exp}, coeff);
  return p;
}

Integer Polynomial::coeff(std::uint32_t q_exp, std::uint32_t t_exp) const {
  auto it = terms_.find(Monomial{q_exp, t_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::uint32_t Polynomial::degree_q() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.q);
  return d;
}

std::uint32_t Polynomial::degree_t() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.t);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.times_monomial(a.leading_monomial(), a.leading_coefficient());
  if (b.is_monomial()) return a.times_monomial(b.leading_monomial(), b.leading_coefficient());

  const std::uint64_t rows = std::uint64_t{a.degree_q()} + b.degree_q() + 1;
  const std::uint64_t cols = std::uint64_t{a.degree_t()} + b.degree_t() + 1;
  Polynomial r;
  if (rows * cols <= kDenseProductLimit) {
    std::vector<Integer> cells(rows * cols);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const std::uint64_t idx = std::uint64_t{ma.q + mb.q} * cols + (ma.t + mb.t);
        mpz_addmul(cells[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
    for (std::uint64_t idx = 0; idx < cells.size(); ++idx) {
      if (cells[idx] != 0) {
        r.terms_.emplace(Monomial{static_cast<std::uint32_t>(idx / cols), static_cast<std::uint32_t>(idx % cols)},
                         std::move(cells[idx]));
      }
    }
    return r;
  }
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Integer& c) const {
  Polynomial r;
  if (c == 0) return r;
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

Polynomial Polynomial::divided_by_integer(const Integer& c) const {
  Polynomial r = *this;
  for (auto& [m, coef] : r.terms_) mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer Polynomial::evaluate(long q_val, long t_val) const {
  Integer sum = 0;
  for (const auto& [m, c] : terms_) {
    Integer qp, tp;
    mpz_ui_pow_ui(qp.get_mpz_t(), static_cast<unsigned long>(q_val < 0 ? -q_val : q_val), m.q);
    mpz_ui_pow_ui(tp.get_mpz_t(), static_cast<unsigned long>(t_val < 0 ? -t_val : t_val), m.t);
    if (q_val < 0 && (m.q % 2 == 1)) qp = -qp;
    if (t_val < 0 && (m.t % 2 == 1)) tp = -tp;
    sum += c * qp * tp;
  }
  return sum;
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

Polynomial swap_qt(const Polynomial& p) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) r.add_term(m.swapped(), c);
  return r;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  const Monomial lead = divisor.leading_monomial();
  const Integer& lc = divisor.leading_coefficient();

  Polynomial::TermMap work = dividend.terms();
  DivisionResult out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial m = top->first;
    if (!lead.divides(m) || !divisible(top->second, lc)) {
      out.remainder.add_term(m, top->second);
      work.erase(top);
      continue;
    }
    const Monomial qm = lead.quotient_of(m);
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
    out.quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor.terms()) {
      auto [it, inserted] = work.try_emplace(dm * qm, 0);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), dc.get_mpz_t());
      if (it->second == 0) work.erase(it);
    }
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  DivisionResult r = divide(dividend, divisor);
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotient);
}

std::vector<Integer> antidiagonal(const Polynomial& p, std::uint32_t d) {
  std::vector<Integer> seq(d + 1);
  for (std::uint32_t k = 0; k <= d; ++k) seq[k] = p.coeff(d - k, k);
  return seq;
}

bool is_unimodal(std::span<const Integer> seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto var = [&s](char v, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('q', m.q);
  var('t', m.t);
  return s;
}

}  // namespace

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.q != y.first.q) return x.first.q > y.first.q;
    return x.first.t > y.first.t;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out << "- ";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << ' ';
      out << mono;
    }
  }
  return out.str();
}

nlohmann::json to_json(const Polynomial& p) {
  std::vector<std::pair<Monomial, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.q != y.first.q) return x.first.q > y.first.q;
    return x.first.t < y.first.t;
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms) arr.push_back({{"q", m.q}, {"t", m.t}, {"c", c.get_str()}});
  return {{"terms", arr}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p;
  for (const auto& term : j.at("terms")) {
    Integer c(term.at("c").get<std::string>());
    p.add_term(term.at("q").get<std::uint32_t>(), term.at("t").get<std::uint32_t>(), c);
  }
  return p;
}

}  // namespace qtcat
