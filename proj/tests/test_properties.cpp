// Randomized properties with fixed seeds.
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qtcat/chain_system.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/mchains.hpp"
#include "qtcat/rational_function.hpp"

using namespace qtcat;

namespace {

Polynomial random_polynomial(std::mt19937& rng, int max_deg = 5, int max_terms = 6) {
  Polynomial p;
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9), count(0, max_terms);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p.add_term(deg(rng), deg(rng), coeff(rng));
  return p;
}

Polynomial random_nonzero(std::mt19937& rng) {
  Polynomial p;
  while (p.is_zero()) p = random_polynomial(rng);
  return p;
}

}  // namespace

TEST_CASE("ring laws") {
  std::mt19937 rng(20261016);
  for (int iter = 0; iter < 300; ++iter) {
    const Polynomial a = random_polynomial(rng), b = random_polynomial(rng), c = random_polynomial(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    CHECK(swap_qt(a * b) == swap_qt(a) * swap_qt(b));
    CHECK(swap_qt(swap_qt(a)) == a);
    CHECK((a * b).evaluate(2, -3) == a.evaluate(2, -3) * b.evaluate(2, -3));
  }
}

TEST_CASE("division round trips") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const Polynomial a = random_polynomial(rng);
    const Polynomial b = random_nonzero(rng);
    const auto exact = divide_exact(a * b, b);
    REQUIRE(exact);
    CHECK(*exact == a);
    const auto r = divide(a, b);
    CHECK(r.quotient * b + r.remainder == a);
    CHECK(to_polynomial(RationalFunction(a)) == a);
  }
}

TEST_CASE("fraction field laws") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const RationalFunction x(random_polynomial(rng, 3, 4), random_nonzero(rng));
    const RationalFunction y(random_polynomial(rng, 3, 4), random_nonzero(rng));
    const RationalFunction z(random_nonzero(rng), random_nonzero(rng));
    CHECK(x + y == y + x);
    CHECK((x + y) - y == x);
    CHECK((x * z) / z == x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(sigma(x) == swap_qt(sigma(x)));
  }
}

TEST_CASE("chain identity on random synthetic systems") {
  std::mt19937 rng(31337);
  const Polynomial q = Polynomial::q(), t = Polynomial::t();
  for (int iter = 0; iter < 300; ++iter) {
    const ChainSystem s = oracle::random_symmetric_system(rng);
    const auto g = endpoint_genfuns(s);
    // C_W (q - t) = q C_I - t C_T, the cleared form of the rational identity.
    CHECK(g.whole * (q - t) == q * g.initial - t * g.terminal);
    CHECK(to_polynomial(RationalFunction(q * g.initial, q - t) + RationalFunction(t * g.terminal, t - q)) == g.whole);
    CHECK(verify_symmetry_via_chains(s));
    const PartialMap h = oracle::random_h(s, rng);
    const Involution j = build_involution_j(s, h);
    CHECK(is_stat_swapping_involution(s, j));
  }
}

TEST_CASE("J commutes with relabelling") {
  // Relabelling moves the starting point of each drawing; J must not change.
  std::mt19937 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const ChainSystem s = oracle::random_symmetric_system(rng);
    const PartialMap h = oracle::random_h(s, rng);
    const Involution j = build_involution_j(s, h);
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ChainElement> els(s.size());
    PartialMap next(s.size()), h2(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      els[perm[i]] = s.element(i);
      if (s.next(i)) next[perm[i]] = perm[*s.next(i)];
      if (h[i]) h2[perm[i]] = perm[*h[i]];
    }
    const ChainSystem s2(els, next);
    const Involution j2 = build_involution_j(s2, h2);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(j2[perm[i]] == perm[j[i]]);
  }
}

TEST_CASE("random words keep the chain-map contract") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int m = std::uniform_int_distribution<int>(1, 12)(rng);
    std::vector<int> g{0};
    for (int i = 1; i < n; ++i) g.push_back(std::uniform_int_distribution<int>(0, g.back() + m)(rng));
    const MDyckWord w(m, g);
    if (w[1] == 0) continue;
    const MDyckWord v = chain_map(w);
    CHECK(area(v) == area(w) - 1);
    CHECK(dinv(v) == dinv(w) + 1);
    CHECK(dinv(w) == oracle::word_dinv(m, g));
  }
}
