#include "qtcat/garsia_haiman.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qtcat/errors.hpp"

namespace qtcat {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int j = 1; j <= parts.front(); ++j) {
    int len = 0;
    for (int p : parts) len += p >= j ? 1 : 0;
    c.parts.push_back(len);
  }
  return c;
}

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw BadParameters("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw BadParameters("partition parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw BadParameters("partitions of a nonpositive integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<CellData> cell_stats(const Partition& mu) {
  const Partition conj = mu.conjugate();
  std::vector<CellData> cells;
  for (int i = 1; i <= static_cast<int>(mu.parts.size()); ++i) {
    for (int j = 1; j <= mu.parts[i - 1]; ++j) {
      cells.push_back({i, j, mu.parts[i - 1] - j, j - 1, conj.parts[j - 1] - i, i - 1});
    }
  }
  return cells;
}

namespace {

Polynomial mono(std::uint32_t qe, std::uint32_t te) { return Polynomial::monomial(1, qe, te); }

// u - v with u, v monomials, stored with the grlex-larger monomial first.
struct Binomial {
  Monomial hi;
  Monomial lo;
  Polynomial poly() const { return mono(hi.q, hi.t) - mono(lo.q, lo.t); }
};

struct BinomialLess {
  bool operator()(const Binomial& x, const Binomial& y) const {
    GrlexLess lt;
    if (!(x.hi == y.hi)) return lt(x.hi, y.hi);
    return lt(x.lo, y.lo);
  }
};

using FactorCount = std::map<Binomial, int, BinomialLess>;

// Adds u - v to the multiset and returns the sign relating it to the stored form.
int add_factor(FactorCount& fc, Monomial u, Monomial v) {
  if (GrlexLess()(u, v)) {
    ++fc[{v, u}];
    return -1;
  }
  ++fc[{u, v}];
  return 1;
}

struct ReducedSummand {
  Polynomial numerator;
  FactorCount denominator;
};

ReducedSummand reduced_summand(const Partition& mu, int m) {
  FactorCount num, den;
  int sign = 1;
  sign *= add_factor(num, {0, 0}, {1, 0});
  sign *= add_factor(num, {0, 0}, {0, 1});
  Polynomial b;
  std::uint32_t tq = 0, tt = 0;
  for (const CellData& c : cell_stats(mu)) {
    b.add_term(static_cast<std::uint32_t>(c.coarm), static_cast<std::uint32_t>(c.coleg), 1);
    tq += static_cast<std::uint32_t>(c.coarm);
    tt += static_cast<std::uint32_t>(c.coleg);
    if (c.row != 1 || c.col != 1) {
      sign *= add_factor(num, {0, 0}, {static_cast<std::uint32_t>(c.coarm), static_cast<std::uint32_t>(c.coleg)});
    }
    sign *= add_factor(den, {static_cast<std::uint32_t>(c.arm), 0}, {0, static_cast<std::uint32_t>(c.leg + 1)});
    sign *= add_factor(den, {0, static_cast<std::uint32_t>(c.leg)}, {static_cast<std::uint32_t>(c.arm + 1), 0});
  }
  // Cancel binomials common to numerator and denominator.
  for (auto& [f, k] : num) {
    auto it = den.find(f);
    if (it == den.end()) continue;
    const int common = std::min(k, it->second);
    k -= common;
    it->second -= common;
  }
  ReducedSummand r;
  r.numerator = b.times_monomial({tq * static_cast<std::uint32_t>(m + 1), tt * static_cast<std::uint32_t>(m + 1)},
                                 Integer(sign));
  for (const auto& [f, k] : num) {
    for (int i = 0; i < k; ++i) r.numerator *= f.poly();
  }
  for (const auto& [f, k] : den) {
    if (k > 0) r.denominator[f] = k;
  }
  return r;
}

}  // namespace

MuQuantities mu_quantities(const Partition& mu) {
  MuQuantities out{Polynomial(1), Polynomial(), Polynomial(1), Polynomial(1)};
  for (const CellData& c : cell_stats(mu)) {
    const auto ca = static_cast<std::uint32_t>(c.coarm), cl = static_cast<std::uint32_t>(c.coleg);
    const auto a = static_cast<std::uint32_t>(c.arm), l = static_cast<std::uint32_t>(c.leg);
    out.t_mu = out.t_mu.times_monomial({ca, cl});
    out.b_mu.add_term(ca, cl, 1);
    if (c.row != 1 || c.col != 1) out.pi_mu *= Polynomial(1) - mono(ca, cl);
    out.w_mu *= (mono(a, 0) - mono(0, l + 1)) * (mono(0, l) - mono(a + 1, 0));
  }
  return out;
}

RationalFunction gh_summand(const Partition& mu, int m) {
  const MuQuantities k = mu_quantities(mu);
  const Polynomial one_q = Polynomial(1) - Polynomial::q();
  const Polynomial one_t = Polynomial(1) - Polynomial::t();
  return RationalFunction(k.t_mu.pow(static_cast<unsigned>(m + 1)) * one_q * one_t * k.b_mu * k.pi_mu, k.w_mu);
}

Polynomial ac_genfun(int n, int m) {
  if (n < 1 || m < 1) throw BadParameters("ac_genfun needs positive n and m");
  std::vector<ReducedSummand> terms;
  FactorCount common;
  for (const Partition& mu : partitions(n)) {
    terms.push_back(reduced_summand(mu, m));
    for (const auto& [f, k] : terms.back().denominator) common[f] = std::max(common[f], k);
  }
  Polynomial total;
  for (const ReducedSummand& s : terms) {
    Polynomial scaled = s.numerator;
    for (const auto& [f, k] : common) {
      auto it = s.denominator.find(f);
      const int have = it == s.denominator.end() ? 0 : it->second;
      for (int i = have; i < k; ++i) scaled *= f.poly();
    }
    total += scaled;
  }
  for (const auto& [f, k] : common) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_exact(total, f.poly());
      if (!q) throw InternalCheckFailed("partition sum is not a polynomial for n=" + std::to_string(n));
      total = std::move(*q);
    }
  }
  if (!total.has_nonnegative_coefficients()) {
    throw InternalCheckFailed("partition sum has a negative coefficient for n=" + std::to_string(n));
  }
  return total;
}

RationalFunction ac_naive_sum(const std::vector<Partition>& order, int m) {
  RationalFunction sum;
  for (const Partition& mu : order) sum += gh_summand(mu, m);
  return sum;
}

Polynomial sigma_form(SigmaCase which, int m) {
  if (m < 1) throw BadParameters("sigma_form needs positive m");
  const auto M = static_cast<std::uint32_t>(m);
  const Polynomial q = Polynomial::q(), t = Polynomial::t(), one(1);
  auto Q = [](std::uint32_t e) { return Polynomial::q(e); };
  auto T = [](std::uint32_t e) { return Polynomial::t(e); };
  auto qt = [](std::uint32_t a, std::uint32_t b) { return Polynomial::monomial(1, a, b); };
  RationalFunction f;
  switch (which) {
    case SigmaCase::C3:
      f = sigma(RationalFunction(Q(3 * M + 3), (Q(2) - t) * (q - t))) +
          RationalFunction(qt(M + 1, M + 1) * (one + q + t), (q - T(2)) * (t - Q(2)));
      break;
    case SigmaCase::AC4:
      f = sigma(RationalFunction(Q(6 * M + 6), (q - t) * (Q(2) - t) * (Q(3) - t))) -
          sigma(RationalFunction(qt(3 * M + 3, M) * (qt(2, 1) + qt(1, 1) + t + T(2)),
                                 (Q(2) - T(2)) * (q - t) * (Q(3) - t))) +
          RationalFunction(qt(2 * M + 2, 2 * M + 2) * (one - qt(1, 1)), (q - T(2)) * (t - Q(2)) * (q - t) * (t - q));
      break;
    case SigmaCase::C2m122:
      f = sigma(RationalFunction(Q(6 * M + 8), (q - t) * (Q(2) - t) * (Q(3) - t)) -
                RationalFunction(qt(3 * M + 4, M + 1) * (one + q), (q - t).pow(2) * (Q(3) - t))) +
          RationalFunction(qt(2 * M + 2, 2 * M + 2) * (qt(2, 1) + qt(1, 2) - Q(2) - T(2)),
                           (q - t).pow(2) * (Q(2) - t) * (T(2) - q));
      break;
    case SigmaCase::C4m141:
      f = sigma(RationalFunction(Q(6 * M + 3), (q - t) * (Q(2) - t) * (Q(3) - t)) -
                RationalFunction(qt(3 * M + 1, M) * (t + qt(1, 1) + Q(2) + qt(2, 1)),
                                 (q - t) * (Q(2) - T(2)) * (Q(3) - t))) +
          RationalFunction(qt(2 * M + 1, 2 * M + 1) * (qt(1, 1) - one), (q - t).pow(2) * (Q(2) - t) * (T(2) - q));
      break;
  }
  return to_polynomial(f);
}

}  // namespace qtcat
