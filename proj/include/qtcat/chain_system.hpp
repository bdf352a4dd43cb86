#pragma once

// A finite set with two statistics a, d and a partial map f that lowers a by
// one and raises d by one, together with its decomposition into f-chains.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtcat/polynomial.hpp"

namespace qtcat {

struct ChainElement {
  std::string id;
  int a = 0;
  int d = 0;
};

// Partial self-map on element positions.
using PartialMap = std::vector<std::optional<std::size_t>>;
// Total self-map on element positions.
using Involution = std::vector<std::size_t>;

class ChainSystem {
 public:
  // next[i] is f(i), or nullopt when i is terminal. The initial set is the
  // complement of the image of f.
  ChainSystem(std::vector<ChainElement> elements, PartialMap next);
  // Same, but with explicit endpoint sets that must agree with f.
  ChainSystem(std::vector<ChainElement> elements, PartialMap next, std::vector<std::size_t> initial,
              std::vector<std::size_t> terminal);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ChainElement>& elements() const { return elements_; }
  const ChainElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> next(std::size_t i) const { return next_[i]; }
  std::optional<std::size_t> prev(std::size_t i) const { return prev_[i]; }
  // Sorted by position.
  const std::vector<std::size_t>& initial() const { return initial_; }
  const std::vector<std::size_t>& terminal() const { return terminal_; }
  bool is_initial(std::size_t i) const { return !prev_[i].has_value(); }
  bool is_terminal(std::size_t i) const { return !next_[i].has_value(); }
  std::optional<std::size_t> find(const std::string& id) const;

 private:
  void validate();

  std::vector<ChainElement> elements_;
  PartialMap next_;
  PartialMap prev_;
  std::vector<std::size_t> initial_;
  std::vector<std::size_t> terminal_;
};

struct ChainDecomposition {
  // Each chain runs from an initial element to a terminal one, in f order.
  std::vector<std::vector<std::size_t>> chains;
};

ChainDecomposition decompose_chains(const ChainSystem& s);

struct EndpointGenfuns {
  Polynomial initial;
  Polynomial terminal;
  Polynomial whole;
};

// q carries a, t carries d.
EndpointGenfuns endpoint_genfuns(const ChainSystem& s);

// True iff C_T(q,t) = C_I(t,q). Also checks C_W(q - t) = q C_I - t C_T and,
// when the answer is true, that C_W is symmetric; those failing throws
// InternalCheckFailed.
bool verify_symmetry_via_chains(const ChainSystem& s);

// Coefficient of q^j t^k in C_W read off the endpoint sets alone:
// #{initial of degree j+k with a >= j} - #{terminal of degree j+k with a > j}.
long coeff_from_endpoints(const ChainSystem& s, int j, int k);

// Matches each terminal element of bidegree (a,d) with an initial element of
// bidegree (d,a); within a class both sides are taken in position order.
// Throws NoSuchBijection when the class sizes differ.
PartialMap canonical_h(const ChainSystem& s);

// Throws NoSuchBijection unless h is a bijection T -> I transposing (a,d).
void check_h(const ChainSystem& s, const PartialMap& h);

struct DrawnDot {
  std::size_t element;
  int x;
  int y;
  bool black;
};

// One drawing per cycle of f and h that is not entirely on the midline.
std::vector<std::vector<DrawnDot>> cycle_drawings(const ChainSystem& s, const PartialMap& h);

// Involution swapping a and d, matched from the cycle drawings.
Involution build_involution_j(const ChainSystem& s, const PartialMap& h);

struct Reattachment {
  std::vector<std::vector<std::size_t>> chains;
  Involution involution;
};

// Splits every chain at the midline a = d, glues the upper part of the chain
// starting at h(w) to the lower part of the chain ending at w, and reflects
// each glued chain. Throws MidlineViolation if a glued chain is not
// symmetric about the midline.
Reattachment reattach_chains(const ChainSystem& s, const PartialMap& h);

// Checks J(J(w)) = w and the statistic swap.
bool is_stat_swapping_involution(const ChainSystem& s, const Involution& j);

nlohmann::json decomposition_json(const ChainSystem& s, const ChainDecomposition& dec);
nlohmann::json drawings_json(const ChainSystem& s, const std::vector<std::vector<DrawnDot>>& drawings);
std::string fh_dot(const ChainSystem& s, const PartialMap& h);

}  // namespace qtcat
