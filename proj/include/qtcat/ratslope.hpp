#pragma once

// r x s Dyck paths, the h+/h- statistics, the three four-row and three-row
// word encodings with their chain maps, and the r x 3 bijection table.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtcat/chain_system.hpp"
#include "qtcat/mchains.hpp"
#include "qtcat/polynomial.hpp"

namespace qtcat {

// Rows are numbered 0..s-1 from the bottom. row_cells[i] counts the squares
// of row i strictly between the path and the diagonal.
struct RSDyckPath {
  int r = 0;
  int s = 0;
  std::vector<int> row_cells;

  // Cells of row i left of the diagonal: floor(r i / s).
  int row_capacity(int i) const;
  // Squares of row i left of the path, i.e. the row lengths of the diagram
  // of cells above the path.
  std::vector<int> offsets() const;
  std::string text() const;
  friend bool operator==(const RSDyckPath&, const RSDyckPath&) = default;
};

// Throws BadParameters unless row_cells describe a path above the diagonal.
RSDyckPath make_path(int r, int s, std::vector<int> row_cells);
RSDyckPath path_from_offsets(int r, int s, const std::vector<int>& offsets);

std::vector<RSDyckPath> enumerate_paths(int r, int s);

struct PathStats {
  int area = 0;
  int h_plus = 0;
  int h_minus = 0;
};

// Statistics at slope num/den, compared exactly.
PathStats path_stats(const RSDyckPath& p, int num, int den);

Polynomial rs_genfun(int r, int s);

enum class SlopeCase { S4m2, S4m1, S3m1 };
std::string slope_case_name(SlopeCase c);
// (r, s) for the case at parameter m.
std::pair<int, int> slope_case_dims(SlopeCase c, int m);

struct RSWord {
  SlopeCase kind;
  int m;
  std::vector<int> gamma;

  std::string text(bool compact = false) const;
  friend bool operator==(const RSWord&, const RSWord&) = default;
  friend bool operator<(const RSWord& a, const RSWord& b) { return a.gamma < b.gamma; }
};

bool is_rs_word(SlopeCase c, int m, const std::vector<int>& gamma);
// Throws InvalidWord.
RSWord make_rs_word(SlopeCase c, int m, std::vector<int> gamma);

// gamma_i = m i - (cells of row i above the path). Throws CaseMismatch when
// the path dimensions do not belong to the case.
RSWord rs_word(const RSDyckPath& p, SlopeCase c, int m);
RSDyckPath rs_path(const RSWord& w);

// All words of the case, sorted by gamma.
std::vector<RSWord> rs_words(SlopeCase c, int m);

// (area, h+_m) of the underlying path.
std::pair<int, int> rs_stats(const RSWord& w);

bool rs_is_terminal(const RSWord& w);
bool rs_in_default_domain(const RSWord& w);
RSWord rs_chain_map(const RSWord& w);

bool rs_in_part(Part p, const RSWord& w);
// Closed-form (area, h+_m) for the part; throws WrongPart.
std::pair<int, int> rs_stats_on_part(Part p, const RSWord& w);

struct RSEndpointSets {
  std::vector<RSWord> initial;
  std::vector<RSWord> terminal;
  std::map<Part, std::vector<RSWord>> parts;
};

// The initial set from its closed description, checked against the image
// complement; the terminal set likewise.
RSEndpointSets rs_endpoint_sets(SlopeCase c, int m);
ChainSystem rs_chain_system(SlopeCase c, int m);

enum class RsCoeffCase { C2m122, C4m141 };
long closed_coeff_rs(RsCoeffCase c, int m, int j, int k);

// r x 3 bijection table for gcd(r,3) = 1, r > 3.
struct GMTable {
  int r = 0;
  int k = 0;
  std::vector<std::pair<int, int>> x_points;  // (c, d): the path has row offsets (0, c, d)
  std::vector<std::pair<int, int>> y_points;  // (a, b)
  std::vector<int> x_region;
  std::vector<int> y_region;
  std::vector<int> area;
  std::vector<int> h_plus;
  std::vector<int> wt1;
  std::vector<int> wt2;
  std::vector<std::size_t> f;     // X -> Y
  std::vector<std::size_t> flip;  // Y -> Y
  std::vector<std::size_t> g;     // X -> X
};

// Throws BadParameters on invalid r and InternalCheckFailed if the piecewise
// map is not a bijection onto Y.
GMTable gm_construct(int r);
std::pair<int, int> gm_f(int r, int c, int d);
std::string gm_csv(const GMTable& t);

}  // namespace qtcat
