#pragma once

// Partitions, cell statistics and the partition-indexed rational sum AC_n^(m).

#include <vector>

#include "qtcat/polynomial.hpp"
#include "qtcat/rational_function.hpp"

namespace qtcat {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all positive

  int size() const;
  Partition conjugate() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws BadParameters on an increasing or nonpositive part.
Partition make_partition(std::vector<int> parts);

// Reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

// Row 1 is the top row, column 1 the leftmost; arm counts cells to the right,
// leg cells below, coarm cells to the left, coleg cells above.
struct CellData {
  int row = 0;
  int col = 0;
  int arm = 0;
  int coarm = 0;
  int leg = 0;
  int coleg = 0;
};

std::vector<CellData> cell_stats(const Partition& mu);

struct MuQuantities {
  Polynomial t_mu;   // product of q^coarm t^coleg
  Polynomial b_mu;   // sum of q^coarm t^coleg
  Polynomial pi_mu;  // product of (1 - q^coarm t^coleg) over cells other than (1,1)
  Polynomial w_mu;   // product of (q^arm - t^(leg+1)) (t^leg - q^(arm+1))
};

MuQuantities mu_quantities(const Partition& mu);

// T^(m+1) (1-q)(1-t) B Pi / w as a fraction.
RationalFunction gh_summand(const Partition& mu, int m);

// The full sum as a polynomial. Throws InternalCheckFailed if it is not a
// polynomial with nonnegative coefficients.
Polynomial ac_genfun(int n, int m);

// Direct fraction-field summation in the given partition order; slow, used to
// cross-check ac_genfun.
RationalFunction ac_naive_sum(const std::vector<Partition>& order, int m);

enum class SigmaCase { C3, AC4, C2m122, C4m141 };

// The symmetrized closed expressions, converted to polynomials by exact
// division. Throws NotPolynomial if the expression does not reduce.
Polynomial sigma_form(SigmaCase which, int m);

}  // namespace qtcat
