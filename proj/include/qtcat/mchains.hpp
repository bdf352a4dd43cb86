#pragma once

// Chain maps on m-Dyck words: the default step and its inverse for every
// length, the complete map for lengths 2..4, and a candidate map for length 5.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/chain_system.hpp"
#include "qtcat/dyck.hpp"

namespace qtcat {

// Least i in 2..n-1 with gamma_i - gamma_{i-2} <= m, or n.
int removal_index(const MDyckWord& w);
// Least i in 2..n with gamma_{i-2} >= gamma_{n-1} + 1 - m, or 0.
int insertion_index(const MDyckWord& w);

// Default step: drop gamma_{r-1} and append gamma_{r-1} - 1.
bool in_default_domain(const MDyckWord& w);
MDyckWord default_step(const MDyckWord& w);
// Its inverse: reinsert gamma_{n-1} + 1 at position r'-1.
bool in_default_image(const MDyckWord& w);
MDyckWord default_step_inverse(const MDyckWord& w);

// Length-4 twist (0, g3+1, g1-1, g2-1) on {g2 - g3 > m+1}.
bool in_twist_domain(const MDyckWord& w);
MDyckWord twist_step(const MDyckWord& w);
// The same length-4 map written as four explicit branches.
MDyckWord piecewise_step4(const MDyckWord& w);

// Defined on words with gamma_1 > 0 for lengths 2..5. Throws NotInDomain on
// terminal words and Unsupported for other lengths.
MDyckWord chain_map(const MDyckWord& w);

enum class Part { D1, D2, D3, D1p, D2p, D3p };
std::string part_name(Part p);
bool in_part(Part p, const MDyckWord& w);
// (area, dinv) from the closed formula of the part; throws WrongPart.
std::pair<int, int> stats_on_part(Part p, const MDyckWord& w);

struct EndpointSets {
  std::vector<MDyckWord> initial;
  std::vector<MDyckWord> terminal;
  // Length 4 only: D1..D3 split the initial set, D1'..D3' the terminal set.
  std::map<Part, std::vector<MDyckWord>> parts;
};

// For lengths up to 4 the initial set is built from its closed description and
// checked against the complement of the image; for length 5 it is that
// complement. Throws Unsupported outside 2..5.
EndpointSets endpoint_sets(int n, int m);

// The words of length n as a chain system under chain_map, ids in comma form.
ChainSystem word_chain_system(int n, int m);

// Auxiliary chains on the endpoint sets (lengths 3 and 4). g lowers area by 2
// and raises dinv by 1 on initial words; g' raises area by 1 and lowers dinv
// by 2 on terminal words.
bool in_aux_g_domain(const MDyckWord& w);
MDyckWord aux_g(const MDyckWord& w);
bool in_aux_g_prime_domain(const MDyckWord& w);
MDyckWord aux_g_prime(const MDyckWord& w);

// max(floor(num / 2), 0).
long half_floor_plus(long num);

// Coefficient of q^j t^k in the length-4 polynomial, from its closed formula.
long closed_coeff_c4(int m, int j, int k);

using LatticePoint = std::pair<int, int>;
// All lattice points inside or on the triangle.
std::vector<LatticePoint> triangle_points(LatticePoint a, LatticePoint b, LatticePoint c);

enum class TriangleKind { C3, Delta4 };
std::vector<LatticePoint> triangle_points(TriangleKind kind, int m);

}  // namespace qtcat
