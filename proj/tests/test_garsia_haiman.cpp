#include <doctest.h>

#include "oracles.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/errors.hpp"
#include "qtcat/garsia_haiman.hpp"
#include "qtcat/ratslope.hpp"

using namespace qtcat;

namespace {

const Polynomial q = Polynomial::q();
const Polynomial t = Polynomial::t();
const Polynomial one(1);

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(4).front() == make_partition({4}));
  CHECK(partitions(4).back() == make_partition({1, 1, 1, 1}));
  for (int n = 1; n <= 8; ++n) CHECK(partitions(n).size() == oracle::integer_partitions(n, n).size());
  CHECK(make_partition({3, 1}).conjugate() == make_partition({2, 1, 1}));
  CHECK(make_partition({3, 3, 1}).size() == 7);
  CHECK_THROWS_AS(make_partition({1, 2}), BadParameters);
  CHECK_THROWS_AS(make_partition({2, 0}), BadParameters);
}

TEST_CASE("cell statistics") {
  const auto cells = cell_stats(make_partition({3, 1}));
  REQUIRE(cells.size() == 4);
  // Top-left cell of (3,1): two cells to the right, one below.
  CHECK(cells[0].row == 1);
  CHECK(cells[0].col == 1);
  CHECK(cells[0].arm == 2);
  CHECK(cells[0].leg == 1);
  CHECK(cells[0].coarm == 0);
  CHECK(cells[0].coleg == 0);
  CHECK(cells[3].row == 2);
  CHECK(cells[3].coleg == 1);
  CHECK(cells[3].arm == 0);
  for (const auto& mu : partitions(6)) {
    const auto cs = cell_stats(mu);
    const auto ct = cell_stats(mu.conjugate());
    int arms = 0, legs = 0;
    for (const auto& c : cs) arms += c.arm;
    for (const auto& c : ct) legs += c.leg;
    CHECK(arms == legs);
  }
}

TEST_CASE("per-partition quantities") {
  const auto single = mu_quantities(make_partition({1}));
  CHECK(single.t_mu == one);
  CHECK(single.b_mu == one);
  CHECK(single.pi_mu == one);
  CHECK(single.w_mu == (one - t) * (one - q));
  const auto row = mu_quantities(make_partition({2}));
  CHECK(row.t_mu == q);
  CHECK(row.b_mu == one + q);
  CHECK(row.pi_mu == one - q);
}

TEST_CASE("small cases") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(ac_genfun(1, m) == one);
    Polynomial two;
    for (int i = 0; i <= m; ++i) two.add_term(i, m - i, 1);
    CHECK(ac_genfun(2, m) == two);
  }
  CHECK(to_polynomial(gh_summand(make_partition({1}), 3)) == one);
  CHECK(ac_genfun(3, 1) == t.pow(3) + q * t + q * t.pow(2) + q.pow(2) * t + q.pow(3));
}

TEST_CASE("partition sum matches rational evaluation") {
  const mpq_class q0(2), t0(3), q1(5, 7), t1(-2, 3);
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const Polynomial p = ac_genfun(n, m);
      CHECK(oracle::evaluate_at(p, q0, t0) == oracle::partition_sum_at(n, m, q0, t0));
      CHECK(oracle::evaluate_at(p, q1, t1) == oracle::partition_sum_at(n, m, q1, t1));
    }
  }
}

TEST_CASE("summation order does not matter") {
  for (int n = 2; n <= 4; ++n) {
    auto order = partitions(n);
    const RationalFunction forward = ac_naive_sum(order, 2);
    std::reverse(order.begin(), order.end());
    CHECK(ac_naive_sum(order, 2) == forward);
    CHECK(to_polynomial(forward) == ac_genfun(n, 2));
  }
}

TEST_CASE("equality with the combinatorial side") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) CHECK(ac_genfun(n, m) == oracle::word_genfun(n, m));
  }
}

TEST_CASE("closed expressions") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(sigma_form(SigmaCase::C3, m) == oracle::word_genfun(3, m));
    CHECK(sigma_form(SigmaCase::AC4, m) == oracle::word_genfun(4, m));
    CHECK(sigma_form(SigmaCase::C2m122, m) == oracle::path_genfun(4 * m + 2, 4));
    CHECK(sigma_form(SigmaCase::C4m141, m) == oracle::path_genfun(4 * m - 1, 4));
  }
  CHECK_THROWS_AS(sigma_form(SigmaCase::C3, 0), BadParameters);
}
