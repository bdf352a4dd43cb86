#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qtcat/chain_system.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/errors.hpp"
#include "qtcat/mchains.hpp"

using namespace qtcat;

namespace {

std::pair<int, int> stats(const MDyckWord& w) { return {area(w), dinv(w)}; }

std::vector<std::string> compact(const std::vector<MDyckWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.text(true));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polynomial from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  Polynomial p;
  for (auto [a, b] : pairs) p.add_term(a, b, 1);
  return p;
}

// Chains of nonzero length for length 4, m = 2, as "word:area:dinv" entries.
const char* const kGoldenChains[] = {
    "246:12:0 245:11:1 244:10:2 243:9:3 233:8:4 232:7:5 222:6:6 221:5:7 211:4:8 111:3:9 110:2:10 100:1:11 000:0:12",
    "235:10:1 234:9:2 242:8:3 223:7:4 231:6:5 212:5:6 121:4:7 210:3:8 101:2:9 010:1:10",
    "124:7:2 240:6:3 113:5:4 130:4:5 102:3:6 020:2:7",
    "123:6:3 230:5:4 202:4:5 021:3:6",
    "224:8:2 241:7:3 213:6:4 131:5:5 112:4:6 120:3:7 200:2:8 001:1:9",
    "135:9:1 134:8:2 133:7:3 132:6:4 122:5:5 220:4:6 201:3:7 011:2:8",
};

}  // namespace

TEST_CASE("default step and its inverse") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (const auto& w : enumerate_words(n, m)) {
        if (in_default_domain(w)) {
          const MDyckWord v = default_step(w);
          CHECK(stats(v) == std::pair{area(w) - 1, dinv(w) + 1});
          CHECK(in_default_image(v));
          CHECK(default_step_inverse(v) == w);
        }
        if (in_default_image(w)) CHECK(default_step(default_step_inverse(w)) == w);
      }
    }
  }
  const MDyckWord top(2, {0, 2, 4, 6});
  CHECK(removal_index(top) == 4);
  CHECK(default_step(top) == MDyckWord(2, {0, 2, 4, 5}));
}

TEST_CASE("chain map shifts the statistics and is injective") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m <= (n == 5 ? 3 : 5); ++m) {
      std::set<MDyckWord> images;
      for (const auto& w : enumerate_words(n, m)) {
        if (w[1] == 0) {
          CHECK_THROWS_AS(chain_map(w), NotInDomain);
          continue;
        }
        const MDyckWord v = chain_map(w);
        CHECK(stats(v) == std::pair{area(w) - 1, dinv(w) + 1});
        CHECK(images.insert(v).second);
      }
    }
  }
  CHECK_THROWS_AS(chain_map(MDyckWord(1, {0, 1, 2, 3, 4, 5})), Unsupported);
  CHECK_THROWS_AS(endpoint_sets(6, 1), Unsupported);
}

TEST_CASE("the explicit four-branch form agrees") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& w : enumerate_words(4, m)) {
      if (w[1] != 0) CHECK(piecewise_step4(w) == chain_map(w));
      if (in_twist_domain(w)) CHECK_FALSE(in_default_domain(w));
    }
  }
  const MDyckWord w(2, {0, 2, 4, 0});
  REQUIRE(in_twist_domain(w));
  CHECK(twist_step(w) == MDyckWord(2, {0, 1, 1, 3}));
}

TEST_CASE("chains of length 4 words with m = 2") {
  const ChainSystem s = word_chain_system(4, 2);
  CHECK(s.size() == 55);
  const auto dec = decompose_chains(s);
  std::vector<std::size_t> lengths;
  for (const auto& c : dec.chains) lengths.push_back(c.size() - 1);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 3, 5, 7, 7, 9, 12});

  std::set<std::string> got;
  for (const auto& c : dec.chains) {
    if (c.size() < 2) continue;
    std::string line;
    for (std::size_t e : c) {
      const auto& el = s.element(e);
      if (!line.empty()) line += ' ';
      line += parse_word(2, el.id).text(true) + ":" + std::to_string(el.a) + ":" + std::to_string(el.d);
    }
    got.insert(line);
  }
  CHECK(got == std::set<std::string>(std::begin(kGoldenChains), std::end(kGoldenChains)));

  const auto g = endpoint_genfuns(s);
  CHECK(g.initial == from_pairs({{12, 0}, {10, 1}, {7, 2}, {6, 3}, {8, 2}, {9, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5},
                                 {2, 6}, {4, 4}}));
  CHECK(g.terminal == from_pairs({{0, 12}, {1, 10}, {2, 7}, {3, 6}, {1, 9}, {2, 8}, {6, 2}, {5, 3}, {4, 4}, {3, 5},
                                  {2, 6}, {4, 4}}));
  CHECK(g.terminal == swap_qt(g.initial));
}

TEST_CASE("endpoint parts for length 4, m = 2") {
  auto e = endpoint_sets(4, 2);
  CHECK(compact(e.parts[Part::D1]) == sorted({"246", "235", "135"}));
  CHECK(compact(e.parts[Part::D2]) == sorted({"224", "124", "123", "024", "023", "022"}));
  CHECK(compact(e.parts[Part::D3]) == sorted({"012", "002", "013"}));
  CHECK(compact(e.parts[Part::D1p]) == sorted({"010", "020", "021"}));
  CHECK(compact(e.parts[Part::D2p]) == sorted({"000", "001", "011", "022", "012", "002"}));
  CHECK(compact(e.parts[Part::D3p]) == sorted({"024", "023", "013"}));
}

TEST_CASE("part formulas") {
  for (int m = 1; m <= 8; ++m) {
    auto e = endpoint_sets(4, m);
    for (const auto& [part, words] : e.parts) {
      for (const auto& w : words) CHECK(stats_on_part(part, w) == stats(w));
    }
  }
  CHECK_THROWS_AS(stats_on_part(Part::D1, MDyckWord(2, {0, 0, 0, 0})), WrongPart);
}

TEST_CASE("endpoint symmetry for every supported length") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m <= (n == 5 ? 3 : 6); ++m) {
      const auto e = endpoint_sets(n, m);
      Polynomial ci, ct;
      for (const auto& w : e.initial) ci.add_term(area(w), dinv(w), 1);
      for (const auto& w : e.terminal) ct.add_term(area(w), dinv(w), 1);
      CHECK(ct == swap_qt(ci));
      for (const auto& w : e.terminal) CHECK(w[1] == 0);
    }
  }
  // Length 3: the initial words are (0, g, g + m).
  const auto e3 = endpoint_sets(3, 4);
  CHECK(e3.initial.size() == 5);
  for (const auto& w : e3.initial) CHECK(w[2] == w[1] + 4);
}

TEST_CASE("auxiliary chains") {
  for (int n = 3; n <= 4; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const auto e = endpoint_sets(n, m);
      std::set<MDyckWord> initial(e.initial.begin(), e.initial.end());
      std::set<MDyckWord> terminal(e.terminal.begin(), e.terminal.end());
      std::set<MDyckWord> seen;
      for (const auto& w : e.initial) {
        if (!in_aux_g_domain(w)) continue;
        const MDyckWord v = aux_g(w);
        CHECK(stats(v) == std::pair{area(w) - 2, dinv(w) + 1});
        CHECK(initial.count(v) == 1);
        CHECK(seen.insert(v).second);
      }
      seen.clear();
      for (const auto& w : e.terminal) {
        if (!in_aux_g_prime_domain(w)) continue;
        const MDyckWord v = aux_g_prime(w);
        CHECK(stats(v) == std::pair{area(w) + 1, dinv(w) - 2});
        CHECK(terminal.count(v) == 1);
        CHECK(seen.insert(v).second);
      }
    }
  }
  // Iterating g' from (0,0,0,c) reaches (0,0,m-c,m) after 2(m-c) steps.
  const int m = 5;
  for (int c = 0; c <= m; ++c) {
    MDyckWord w(m, {0, 0, 0, c});
    int steps = 0;
    while (w != MDyckWord(m, {0, 0, m - c, m})) {
      REQUIRE(in_aux_g_prime_domain(w));
      w = aux_g_prime(w);
      ++steps;
    }
    CHECK(steps == 2 * (m - c));
  }
}

TEST_CASE("closed coefficients against the oracle") {
  CHECK(half_floor_plus(-3) == 0);
  CHECK(half_floor_plus(-1) == 0);
  CHECK(half_floor_plus(5) == 2);
  CHECK(half_floor_plus(4) == 2);
  for (int m = 1; m <= 3; ++m) {
    const Polynomial c = oracle::word_genfun(4, m);
    for (int j = 0; j <= 6 * m + 2; ++j) {
      for (int k = 0; k <= 6 * m + 2; ++k) CHECK(mpz_class(closed_coeff_c4(m, j, k)) == c.coeff(j, k));
    }
  }
}

TEST_CASE("triangles") {
  const auto unit = triangle_points({0, 0}, {2, 0}, {0, 2});
  CHECK(unit.size() == 6);
  for (int m = 1; m <= 6; ++m) {
    CHECK(from_pairs(triangle_points(TriangleKind::C3, m)) == genfun(3, m));
    auto e = endpoint_sets(4, m);
    std::set<std::pair<int, int>> d12;
    for (Part p : {Part::D1p, Part::D2p}) {
      for (const auto& w : e.parts[p]) CHECK(d12.insert(stats(w)).second);
    }
    const auto tri = triangle_points(TriangleKind::Delta4, m);
    CHECK(d12 == std::set<std::pair<int, int>>(tri.begin(), tri.end()));
  }
}
