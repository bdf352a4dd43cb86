#include "qtcat/ratslope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qtcat/errors.hpp"

namespace qtcat {

int RSDyckPath::row_capacity(int i) const { return static_cast<int>(static_cast<long>(r) * i / s); }

std::vector<int> RSDyckPath::offsets() const {
  std::vector<int> p(row_cells.size());
  for (int i = 0; i < s; ++i) p[i] = row_capacity(i) - row_cells[i];
  return p;
}

std::string RSDyckPath::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < row_cells.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(row_cells[i]);
  }
  return out + ")";
}

RSDyckPath make_path(int r, int s, std::vector<int> row_cells) {
  if (r < 1 || s < 1) throw BadParameters("path dimensions must be positive");
  RSDyckPath p{r, s, std::move(row_cells)};
  if (static_cast<int>(p.row_cells.size()) != s) throw BadParameters("need one cell count per row");
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    const int off = p.row_capacity(i) - p.row_cells[i];
    if (p.row_cells[i] < 0 || off < prev) throw BadParameters("row cells " + p.text() + " describe no Dyck path");
    prev = off;
  }
  return p;
}

RSDyckPath path_from_offsets(int r, int s, const std::vector<int>& offsets) {
  if (static_cast<int>(offsets.size()) != s) throw BadParameters("need one offset per row");
  std::vector<int> cells(s);
  for (int i = 0; i < s; ++i) cells[i] = static_cast<int>(static_cast<long>(r) * i / s) - offsets[i];
  return make_path(r, s, std::move(cells));
}

namespace {

void paths_rec(int r, int s, int row, std::vector<int>& off, std::vector<RSDyckPath>& out) {
  if (row == s) {
    out.push_back(path_from_offsets(r, s, off));
    return;
  }
  const int cap = static_cast<int>(static_cast<long>(r) * row / s);
  for (int p = row == 0 ? 0 : off[row - 1]; p <= cap; ++p) {
    off[row] = p;
    paths_rec(r, s, row + 1, off, out);
  }
}

}  // namespace

std::vector<RSDyckPath> enumerate_paths(int r, int s) {
  if (r < 1 || s < 1) throw BadParameters("path dimensions must be positive");
  std::vector<RSDyckPath> out;
  std::vector<int> off(s, 0);
  paths_rec(r, s, 0, off, out);
  return out;
}

PathStats path_stats(const RSDyckPath& p, int num, int den) {
  if (num < 1 || den < 1) throw BadParameters("slope must be positive");
  PathStats st;
  st.area = std::accumulate(p.row_cells.begin(), p.row_cells.end(), 0);
  const std::vector<int> off = p.offsets();
  const long n = num, d = den;
  for (int i = 0; i < p.s; ++i) {
    for (int x = 0; x < off[i]; ++x) {
      const long arm = off[i] - x - 1;
      long leg = 0;
      for (int below = 0; below < i; ++below) leg += off[below] > x ? 1 : 0;
      // a/(l+1) against num/den, and (a+1)/l against num/den with l = 0 as infinity.
      const bool low_le = arm * d <= n * (leg + 1);
      const bool low_lt = arm * d < n * (leg + 1);
      const bool high_gt = leg == 0 || n * leg < (arm + 1) * d;
      const bool high_ge = leg == 0 || n * leg <= (arm + 1) * d;
      if (low_le && high_gt) ++st.h_plus;
      if (low_lt && high_ge) ++st.h_minus;
    }
  }
  return st;
}

Polynomial rs_genfun(int r, int s) {
  std::map<std::pair<int, int>, long> counts;
  for (const RSDyckPath& p : enumerate_paths(r, s)) {
    const PathStats st = path_stats(p, r, s);
    ++counts[{st.area, st.h_plus}];
  }
  Polynomial out;
  for (const auto& [ad, c] : counts) {
    out.add_term(static_cast<std::uint32_t>(ad.first), static_cast<std::uint32_t>(ad.second), Integer(c));
  }
  return out;
}

std::string slope_case_name(SlopeCase c) {
  switch (c) {
    case SlopeCase::S4m2: return "4m+2";
    case SlopeCase::S4m1: return "4m-1";
    case SlopeCase::S3m1: return "3m-1";
  }
  return "?";
}

std::pair<int, int> slope_case_dims(SlopeCase c, int m) {
  switch (c) {
    case SlopeCase::S4m2: return {4 * m + 2, 4};
    case SlopeCase::S4m1: return {4 * m - 1, 4};
    case SlopeCase::S3m1: return {3 * m - 1, 3};
  }
  return {0, 0};
}

std::string RSWord::text(bool compact) const {
  bool digits = true;
  for (int g : gamma) digits = digits && g >= 0 && g <= 9;
  std::string s;
  if (compact && digits) {
    for (std::size_t i = 1; i < gamma.size(); ++i) s += static_cast<char>('0' + gamma[i]);
    return s;
  }
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(gamma[i]);
  }
  return s;
}

bool is_rs_word(SlopeCase c, int m, const std::vector<int>& g) {
  if (m < 1 || g.empty() || g[0] != 0) return false;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] > g[i - 1] + m) return false;
  }
  switch (c) {
    case SlopeCase::S4m2: return g.size() == 4 && g[1] >= 0 && g[2] >= -1 && g[3] >= -1;
    case SlopeCase::S4m1: return g.size() == 4 && g[1] >= 1 && g[2] >= 1 && g[3] >= 1;
    case SlopeCase::S3m1: return g.size() == 3 && g[1] >= 1 && g[1] <= m && g[2] >= 1;
  }
  return false;
}

RSWord make_rs_word(SlopeCase c, int m, std::vector<int> gamma) {
  RSWord w{c, m, std::move(gamma)};
  if (!is_rs_word(c, m, w.gamma)) throw InvalidWord("not a " + slope_case_name(c) + " word: " + w.text());
  return w;
}

RSWord rs_word(const RSDyckPath& p, SlopeCase c, int m) {
  if (std::make_pair(p.r, p.s) != slope_case_dims(c, m)) {
    throw CaseMismatch(std::to_string(p.r) + "x" + std::to_string(p.s) + " paths do not belong to the " +
                       slope_case_name(c) + " case at m=" + std::to_string(m));
  }
  const std::vector<int> off = p.offsets();
  std::vector<int> g(off.size());
  for (std::size_t i = 0; i < off.size(); ++i) g[i] = m * static_cast<int>(i) - off[i];
  return make_rs_word(c, m, std::move(g));
}

RSDyckPath rs_path(const RSWord& w) {
  const auto [r, s] = slope_case_dims(w.kind, w.m);
  std::vector<int> off(w.gamma.size());
  for (std::size_t i = 0; i < off.size(); ++i) off[i] = w.m * static_cast<int>(i) - w.gamma[i];
  return path_from_offsets(r, s, off);
}

std::vector<RSWord> rs_words(SlopeCase c, int m) {
  if (m < 1) throw BadParameters("m must be positive");
  const auto [r, s] = slope_case_dims(c, m);
  std::vector<RSWord> out;
  for (const RSDyckPath& p : enumerate_paths(r, s)) out.push_back(rs_word(p, c, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> rs_stats(const RSWord& w) {
  const PathStats st = path_stats(rs_path(w), w.m, 1);
  return {st.area, st.h_plus};
}

namespace {

int rs_removal_index(const RSWord& w) {
  const auto& g = w.gamma;
  const int n = static_cast<int>(g.size());
  for (int i = 2; i <= n - 1; ++i) {
    if (g[i] - g[i - 2] <= w.m) return i;
  }
  return n;
}

bool rs_in_twist_domain(const RSWord& w) {
  return w.kind != SlopeCase::S3m1 && w.gamma[2] - w.gamma[3] > w.m + 1;
}

}  // namespace

bool rs_is_terminal(const RSWord& w) {
  switch (w.kind) {
    case SlopeCase::S4m2: return w.gamma[2] == -1;
    case SlopeCase::S4m1: return w.gamma[1] == 1 && w.gamma[2] <= w.m;
    case SlopeCase::S3m1: return w.gamma[1] == 1;
  }
  return false;
}

bool rs_in_default_domain(const RSWord& w) {
  const auto& g = w.gamma;
  const int n = static_cast<int>(g.size());
  const int r = rs_removal_index(w);
  const int removed = g[r - 1];
  switch (w.kind) {
    case SlopeCase::S4m2: return removed - 1 <= g[n - 1] + w.m && removed >= 0 && g[2] != -1;
    case SlopeCase::S4m1: return removed - 1 <= g[n - 1] + w.m && removed > 1;
    case SlopeCase::S3m1: return g[1] > 1;
  }
  return false;
}

RSWord rs_chain_map(const RSWord& w) {
  if (rs_is_terminal(w)) throw NotInDomain("terminal word " + w.text());
  const bool in_default = rs_in_default_domain(w);
  const bool in_twist = rs_in_twist_domain(w);
  if (in_default && in_twist) throw InternalCheckFailed("default and twist domains overlap at " + w.text());
  const auto& g = w.gamma;
  if (in_default) {
    const int r = rs_removal_index(w);
    std::vector<int> out(g.begin(), g.begin() + (r - 1));
    out.insert(out.end(), g.begin() + r, g.end());
    out.push_back(g[r - 1] - 1);
    return make_rs_word(w.kind, w.m, std::move(out));
  }
  if (in_twist) return make_rs_word(w.kind, w.m, {0, g[3] + 1, g[1] - 1, g[2] - 1});
  throw NotInDomain("chain map undefined on " + w.text());
}

bool rs_in_part(Part p, const RSWord& w) {
  const int m = w.m;
  const auto& g = w.gamma;
  switch (w.kind) {
    case SlopeCase::S4m2: {
      const int g1 = g[1], g2 = g[2], g3 = g[3];
      switch (p) {
        case Part::D1: return g3 == g2 + m && 0 <= g1 && g1 <= m && m <= g2 && g2 <= g1 + m;
        case Part::D2: return g2 == m && 0 <= g1 && g1 <= m - 1 && g1 + m <= g3 && g3 <= 2 * m - 1;
        case Part::D1p: return g2 == -1 && g1 > g3;
        case Part::D2p: return g2 == -1 && g1 <= g3;
        default: return false;
      }
    }
    case SlopeCase::S4m1: {
      const int g1 = g[1], g2 = g[2], g3 = g[3];
      switch (p) {
        case Part::D1:
          return (g3 == g2 + m && 2 <= g1 && g1 <= m && m <= g2 && g2 <= g1 + m) ||
                 (g1 == 1 && g2 == m + 1 && g3 == 2 * m + 1);
        case Part::D2: return g2 == m && g1 >= 2 && g1 + m <= g3 && g3 <= 2 * m - 1;
        case Part::D3: return g1 == 1 && 1 <= g2 && g2 <= m && 1 + m <= g3 && g3 <= g2 + m;
        case Part::D1p: return g1 == 1 && g3 < g2 && g2 <= m;
        case Part::D2p: return g1 == 1 && g2 <= g3 && g3 <= m;
        case Part::D3p: return g1 == 1 && g2 <= m && g3 > m;
      }
      return false;
    }
    case SlopeCase::S3m1: {
      const int g1 = g[1], g2 = g[2];
      switch (p) {
        case Part::D1: return g2 == g1 + m && 1 <= g1 && g1 <= m;
        case Part::D2: return g1 == 1 && g2 == m;
        case Part::D1p: return g1 == 1 && 1 <= g2 && g2 <= m;
        case Part::D2p: return g1 == 1 && g2 == m + 1;
        default: return false;
      }
    }
  }
  return false;
}

std::pair<int, int> rs_stats_on_part(Part p, const RSWord& w) {
  if (!rs_in_part(p, w)) throw WrongPart(w.text() + " is not in " + part_name(p));
  const int m = w.m;
  const auto& g = w.gamma;
  switch (w.kind) {
    case SlopeCase::S4m2:
      switch (p) {
        case Part::D1p: return {g[1] + g[3] + 1, 6 * m + 1 - 3 * g[1] - g[3]};
        case Part::D2p: return {g[1] + g[3] + 1, 6 * m - g[1] - 3 * g[3]};
        case Part::D1: return {g[1] + 2 * g[2] + m + 2, 2 * m - g[2]};
        case Part::D2: return {g[1] + g[3] + m + 2, 3 * m - g[3]};
        default: break;
      }
      break;
    case SlopeCase::S4m1:
      switch (p) {
        case Part::D1p: return {g[2] + g[3] - 2, 6 * m + 2 - 3 * g[2] - g[3]};
        case Part::D2p: return {g[2] + g[3] - 2, 6 * m + 1 - g[2] - 3 * g[3]};
        case Part::D3p:
        case Part::D3: return {g[2] + g[3] - 2, 4 * m - g[2] - g[3]};
        case Part::D1: return {g[1] + 2 * g[2] + m - 3, 2 * m - g[2]};
        case Part::D2: return {g[1] + g[3] + m - 3, 3 * m - g[3]};
      }
      break;
    case SlopeCase::S3m1:
      switch (p) {
        case Part::D1p: return {g[2] - 1, 3 * m - 2 * g[2]};
        case Part::D2p: return {m, m - 1};
        case Part::D1: return {2 * g[1] + m - 2, m - g[1]};
        case Part::D2: return {m - 1, m};
        default: break;
      }
      break;
  }
  throw WrongPart("no closed formula for " + part_name(p));
}

namespace {

std::vector<Part> initial_parts(SlopeCase c) {
  if (c == SlopeCase::S4m1) return {Part::D1, Part::D2, Part::D3};
  return {Part::D1, Part::D2};
}

std::vector<Part> terminal_parts(SlopeCase c) {
  if (c == SlopeCase::S4m1) return {Part::D1p, Part::D2p, Part::D3p};
  return {Part::D1p, Part::D2p};
}

std::string rs_list(const std::vector<RSWord>& ws) {
  std::string s;
  for (const auto& w : ws) s += " " + w.text();
  return s;
}

}  // namespace

RSEndpointSets rs_endpoint_sets(SlopeCase c, int m) {
  const std::vector<RSWord> all = rs_words(c, m);
  std::set<std::vector<int>> image;
  RSEndpointSets e;
  for (const auto& w : all) {
    if (rs_is_terminal(w)) {
      e.terminal.push_back(w);
    } else {
      image.insert(rs_chain_map(w).gamma);
    }
  }
  std::vector<RSWord> complement;
  for (const auto& w : all) {
    if (!image.count(w.gamma)) complement.push_back(w);
  }
  std::vector<RSWord> closed;
  for (Part p : initial_parts(c)) e.parts[p] = {};
  for (Part p : terminal_parts(c)) e.parts[p] = {};
  for (const auto& w : all) {
    int hits = 0;
    for (Part p : initial_parts(c)) {
      if (rs_in_part(p, w)) {
        e.parts[p].push_back(w);
        ++hits;
      }
    }
    if (hits > 1) throw InternalCheckFailed("initial parts overlap at " + w.text());
    if (hits == 1) closed.push_back(w);
    int terminal_hits = 0;
    for (Part p : terminal_parts(c)) {
      if (rs_in_part(p, w)) {
        e.parts[p].push_back(w);
        ++terminal_hits;
      }
    }
    if (terminal_hits != (rs_is_terminal(w) ? 1 : 0)) {
      throw InternalCheckFailed("terminal parts do not split at " + w.text());
    }
  }
  if (closed != complement) {
    throw InternalCheckFailed("closed-form initial set differs from the image complement; closed:" + rs_list(closed) +
                              " complement:" + rs_list(complement));
  }
  e.initial = std::move(closed);
  return e;
}

ChainSystem rs_chain_system(SlopeCase c, int m) {
  const std::vector<RSWord> all = rs_words(c, m);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<ChainElement> elements;
  for (std::size_t i = 0; i < all.size(); ++i) {
    index.emplace(all[i].gamma, i);
    const auto [a, h] = rs_stats(all[i]);
    elements.push_back({all[i].text(), a, h});
  }
  PartialMap next(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!rs_is_terminal(all[i])) next[i] = index.at(rs_chain_map(all[i]).gamma);
  }
  const RSEndpointSets ends = rs_endpoint_sets(c, m);
  std::vector<std::size_t> initial, terminal;
  for (const auto& w : ends.initial) initial.push_back(index.at(w.gamma));
  for (const auto& w : ends.terminal) terminal.push_back(index.at(w.gamma));
  return ChainSystem(std::move(elements), std::move(next), std::move(initial), std::move(terminal));
}

long closed_coeff_rs(RsCoeffCase c, int m, int j, int k) {
  const long M = m, J = j, K = k;
  if (c == RsCoeffCase::C2m122) {
    if (J + K < 4 * M + 2 || J + K > 6 * M + 2) return 0;
    return std::min({half_floor_plus(-6 * M + 3 * J + K), half_floor_plus(6 * M + 4 - J - K),
                     half_floor_plus(-6 * M + J + 3 * K)});
  }
  if (4 * M - 1 <= J + K && J + K <= 6 * M - 3) {
    return std::min({half_floor_plus(-6 * M + 5 + 3 * J + K), half_floor_plus(6 * M - 1 - J - K),
                     half_floor_plus(-6 * M + 5 + J + 3 * K)});
  }
  if (J + K == 4 * M - 2) return std::min(half_floor_plus(-M + 2 + J), half_floor_plus(-M + 2 + K));
  return 0;
}

std::pair<int, int> gm_f(int r, int c, int d) {
  const int k = r / 3;
  if (d <= k) return {d - c, c};
  if (d - c <= k) return {3 * d - 2 * k - c, c - d + k};
  return {3 * c - d + 2 * k + 2, d - c - k - 1};
}

GMTable gm_construct(int r) {
  if (r <= 3 || std::gcd(r, 3) != 1) throw BadParameters("need r > 3 with gcd(r,3) = 1, got " + std::to_string(r));
  GMTable t;
  t.r = r;
  t.k = r / 3;
  const int k = t.k;
  for (int c = 0; c <= k; ++c) {
    for (int d = c; d <= 2 * r / 3; ++d) {
      t.x_points.push_back({c, d});
      t.x_region.push_back(d <= k ? 1 : (d - c <= k ? 2 : 3));
      t.area.push_back(r - 1 - c - d);
      // Row 1 holds c cells and row 2 holds d cells of the diagram above the path.
      int h = 0;
      auto count = [&](int arm, int leg) {
        const int v = 3 * arm - r * leg;
        if (-2 <= v && v <= r) ++h;
      };
      for (int x = 0; x < c; ++x) count(c - x - 1, 0);
      for (int x = 0; x < d; ++x) count(d - x - 1, x < c ? 1 : 0);
      t.h_plus.push_back(h);
    }
  }
  std::map<std::pair<int, int>, std::size_t> y_index;
  for (int b = 0; 3 * b <= r - 1; ++b) {
    for (int a = 0; a + 3 * b <= r - 1; ++a) {
      y_index[{a, b}] = t.y_points.size();
      t.y_points.push_back({a, b});
      t.y_region.push_back(a + b <= k ? 1 : ((a + b + k) % 2 == 0 ? 2 : 3));
      t.wt1.push_back(r - 1 - (a + 2 * b));
      t.wt2.push_back(a + b);
    }
  }
  if (t.x_points.size() != t.y_points.size()) {
    throw InternalCheckFailed("X and Y differ in size for r=" + std::to_string(r));
  }
  std::vector<std::size_t> f_inv(t.y_points.size(), t.x_points.size());
  for (std::size_t i = 0; i < t.x_points.size(); ++i) {
    const auto img = gm_f(r, t.x_points[i].first, t.x_points[i].second);
    auto it = y_index.find(img);
    if (it == y_index.end()) throw InternalCheckFailed("f leaves Y for r=" + std::to_string(r));
    if (f_inv[it->second] != t.x_points.size()) throw InternalCheckFailed("f is not injective for r=" + std::to_string(r));
    f_inv[it->second] = i;
    t.f.push_back(it->second);
  }
  for (const auto& [a, b] : t.y_points) t.flip.push_back(y_index.at({r - 1 - a - 3 * b, b}));
  for (std::size_t i = 0; i < t.x_points.size(); ++i) t.g.push_back(f_inv[t.flip[t.f[i]]]);
  return t;
}

std::string gm_csv(const GMTable& t) {
  std::ostringstream out;
  out << "c,d,region,a,b,wt1,wt2\n";
  for (std::size_t i = 0; i < t.x_points.size(); ++i) {
    const std::size_t y = t.f[i];
    out << t.x_points[i].first << ',' << t.x_points[i].second << ',' << t.x_region[i] << ',' << t.y_points[y].first
        << ',' << t.y_points[y].second << ',' << t.wt1[y] << ',' << t.wt2[y] << '\n';
  }
  return out.str();
}

}  // namespace qtcat
