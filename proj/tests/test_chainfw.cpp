#include <doctest.h>

#include <map>

#include "qtcat/chain_system.hpp"
#include "qtcat/errors.hpp"

using namespace qtcat;

namespace {

// Builds a system from 1-based labels with explicit a, d and f.
ChainSystem labeled(const std::vector<int>& a, const std::vector<int>& d, const std::map<int, int>& f) {
  std::vector<ChainElement> els;
  for (std::size_t i = 0; i < a.size(); ++i) els.push_back({std::to_string(i + 1), a[i], d[i]});
  PartialMap next(a.size());
  for (auto [from, to] : f) next[from - 1] = to - 1;
  return ChainSystem(els, next);
}

PartialMap labeled_h(std::size_t size, const std::map<int, int>& h) {
  PartialMap out(size);
  for (auto [from, to] : h) out[from - 1] = to - 1;
  return out;
}

// Builds a system from chains given as lists of a - d, all of total degree deg.
ChainSystem from_offsets(int deg, const std::vector<std::vector<int>>& chains) {
  std::vector<ChainElement> els;
  PartialMap next;
  for (const auto& chain : chains) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const int a = (deg + chain[k]) / 2;
      els.push_back({std::to_string(els.size() + 1), a, deg - a});
      next.push_back(k + 1 < chain.size() ? std::optional<std::size_t>(els.size()) : std::nullopt);
    }
  }
  return ChainSystem(els, next);
}

void check_pairs(const Involution& j, const std::vector<std::pair<int, int>>& pairs) {
  for (auto [x, y] : pairs) {
    CHECK(j[x - 1] == static_cast<std::size_t>(y - 1));
    CHECK(j[y - 1] == static_cast<std::size_t>(x - 1));
  }
}

ChainSystem first_example() {
  return labeled({7, 6, 5, 6, 5, 4, 3, 2, 1, 3, 2, 7, 6, 2, 1}, {1, 2, 3, 2, 3, 4, 5, 6, 7, 5, 6, 1, 2, 6, 7},
                 {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {10, 11}, {12, 13}, {14, 15}});
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(ChainSystem({{"a", 1, 1}, {"b", 1, 1}}, {std::optional<std::size_t>(1), std::nullopt}),
                  InvalidChainMap);
  CHECK_THROWS_AS(ChainSystem({{"a", 2, 0}, {"b", 1, 1}, {"c", 2, 0}},
                              {std::optional<std::size_t>(1), std::nullopt, std::optional<std::size_t>(1)}),
                  InvalidChainMap);
  CHECK_THROWS_AS(ChainSystem({{"a", 2, 0}}, {}), InvalidChainMap);
  CHECK_THROWS_AS(ChainSystem({{"a", -1, 0}}, {std::nullopt}), InvalidChainMap);
}

TEST_CASE("endpoints and decomposition of the first worked example") {
  const ChainSystem s = first_example();
  CHECK(s.initial() == std::vector<std::size_t>{0, 3, 9, 11, 13});
  CHECK(s.terminal() == std::vector<std::size_t>{2, 8, 10, 12, 14});
  const auto dec = decompose_chains(s);
  CHECK(dec.chains.size() == 5);
  std::size_t covered = 0;
  for (const auto& c : dec.chains) covered += c.size();
  CHECK(covered == 15);
  CHECK(verify_symmetry_via_chains(s));
  const auto g = endpoint_genfuns(s);
  CHECK(swap_qt(g.initial) == g.terminal);
}

TEST_CASE("the first worked pairing") {
  const ChainSystem s = first_example();
  const PartialMap h = labeled_h(15, {{3, 10}, {9, 1}, {11, 4}, {13, 14}, {15, 12}});
  CHECK_NOTHROW(check_h(s, h));
  const Involution j = build_involution_j(s, h);
  check_pairs(j, {{1, 9}, {2, 11}, {3, 10}, {4, 8}, {5, 7}, {6, 6}, {12, 15}, {13, 14}});
  CHECK(is_stat_swapping_involution(s, j));
  const auto drawings = cycle_drawings(s, h);
  CHECK(drawings.size() == 2);
  // The drawing starts at an initial element of maximal a - d, height y = a - d.
  CHECK(drawings[0].front().element == 0);
  CHECK(drawings[0].front().y == 6);
  for (const auto& cyc : drawings) {
    for (const auto& dot : cyc) {
      const auto& e = s.element(dot.element);
      CHECK(dot.y == std::abs(e.a - e.d));
    }
  }
}

TEST_CASE("the second worked pairing and its reattachment") {
  const ChainSystem s = from_offsets(11, {{5, 3, 1, -1}, {3, 1, -1, -3, -5}, {5, 3, 1, -1, -3}, {1, -1, -3, -5}});
  const PartialMap h = labeled_h(18, {{4, 15}, {9, 1}, {14, 5}, {18, 10}});
  const Involution j = build_involution_j(s, h);
  check_pairs(j, {{1, 18}, {2, 17}, {3, 4}, {15, 16}, {10, 9}, {11, 14}, {12, 13}, {5, 8}, {6, 7}});
  const Reattachment r = reattach_chains(s, h);
  std::vector<std::vector<std::size_t>> expected{
      {0, 1, 2, 6, 7, 8}, {14, 3}, {9, 10, 11, 15, 16, 17}, {4, 5, 12, 13}};
  auto got = r.chains;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK(is_stat_swapping_involution(s, r.involution));
}

TEST_CASE("reattachment detects an asymmetric gluing") {
  const ChainSystem s = from_offsets(10, {{6, 4}, {-2, -4, -6}, {-4}, {4, 2}});
  // Initial offsets {6,-2,-4,4}, terminal offsets {4,-6,-4,2}: the endpoint
  // condition holds but no gluing is symmetric about the midline.
  const PartialMap h = canonical_h(s);
  CHECK_THROWS_AS(reattach_chains(s, h), MidlineViolation);
  // J itself is still a valid involution.
  CHECK(is_stat_swapping_involution(s, build_involution_j(s, h)));
}

TEST_CASE("canonical h and its failures") {
  const ChainSystem s = first_example();
  const PartialMap h = canonical_h(s);
  CHECK_NOTHROW(check_h(s, h));
  const ChainSystem lopsided({{"x", 2, 0}, {"y", 1, 1}}, {std::optional<std::size_t>(1), std::nullopt});
  CHECK_THROWS_AS(canonical_h(lopsided), NoSuchBijection);
  CHECK_FALSE(verify_symmetry_via_chains(lopsided));
  PartialMap bad = h;
  bad[2] = 3;  // 3 must go to an element with the transposed statistics.
  CHECK_THROWS_AS(check_h(s, bad), NoSuchBijection);
}

TEST_CASE("coefficients from endpoints") {
  const ChainSystem s = first_example();
  const auto whole = endpoint_genfuns(s).whole;
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= 8; ++k) CHECK(mpz_class(coeff_from_endpoints(s, j, k)) == whole.coeff(j, k));
  }
}

TEST_CASE("exports") {
  const ChainSystem s = first_example();
  const auto j = decomposition_json(s, decompose_chains(s));
  CHECK(j["chains"].size() == 5);
  CHECK(j["I"].size() == 5);
  CHECK(j["T"].size() == 5);
  const auto h = labeled_h(15, {{3, 10}, {9, 1}, {11, 4}, {13, 14}, {15, 12}});
  const auto dj = drawings_json(s, cycle_drawings(s, h));
  CHECK(dj.size() == 2);
  CHECK(dj[0][0].contains("color"));
  const std::string dot = fh_dot(s, h);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}
