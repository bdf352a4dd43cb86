#include "qtcat/mchains.hpp"

#include <algorithm>
#include <set>

#include "qtcat/errors.hpp"

namespace qtcat {

namespace {

void require_length(const MDyckWord& w, int lo, int hi, const char* what) {
  if (w.n() < lo || w.n() > hi) {
    throw Unsupported(std::string(what) + " is not defined for words of length " + std::to_string(w.n()));
  }
}

MDyckWord word(int m, std::vector<int> g) { return MDyckWord(m, std::move(g)); }

std::string word_list(const std::vector<MDyckWord>& ws) {
  std::string s;
  for (const auto& w : ws) s += " " + w.text(true);
  return s;
}

}  // namespace

int removal_index(const MDyckWord& w) {
  require_length(w, 2, 1 << 20, "removal index");
  const auto& g = w.gamma();
  for (int i = 2; i <= w.n() - 1; ++i) {
    if (g[i] - g[i - 2] <= w.m()) return i;
  }
  return w.n();
}

int insertion_index(const MDyckWord& w) {
  require_length(w, 2, 1 << 20, "insertion index");
  const auto& g = w.gamma();
  const int last = g[w.n() - 1];
  for (int i = 2; i <= w.n(); ++i) {
    if (g[i - 2] >= last + 1 - w.m()) return i;
  }
  return 0;
}

bool in_default_domain(const MDyckWord& w) {
  if (w.n() < 2) return false;
  const auto& g = w.gamma();
  const int r = removal_index(w);
  return g[r - 1] - 1 <= g[w.n() - 1] + w.m() && g[1] > 0;
}

MDyckWord default_step(const MDyckWord& w) {
  if (!in_default_domain(w)) throw NotInDomain("default step undefined on " + w.text());
  const auto& g = w.gamma();
  const int r = removal_index(w);
  std::vector<int> out(g.begin(), g.begin() + (r - 1));
  out.insert(out.end(), g.begin() + r, g.end());
  out.push_back(g[r - 1] - 1);
  return word(w.m(), std::move(out));
}

bool in_default_image(const MDyckWord& w) {
  if (w.n() < 2) return false;
  const auto& g = w.gamma();
  const int rp = insertion_index(w);
  if (rp == 0) return false;
  if (g[rp - 1] > g[w.n() - 1] + 1 + w.m()) return false;
  for (int i = 2; i <= rp - 2; ++i) {
    if (g[i] - g[i - 2] <= w.m()) return false;
  }
  return true;
}

MDyckWord default_step_inverse(const MDyckWord& w) {
  if (!in_default_image(w)) throw NotInDomain("inverse default step undefined on " + w.text());
  const auto& g = w.gamma();
  const int rp = insertion_index(w);
  std::vector<int> out(g.begin(), g.begin() + (rp - 1));
  out.push_back(g[w.n() - 1] + 1);
  out.insert(out.end(), g.begin() + (rp - 1), g.end() - 1);
  return word(w.m(), std::move(out));
}

bool in_twist_domain(const MDyckWord& w) { return w.n() == 4 && w[2] - w[3] > w.m() + 1; }

MDyckWord twist_step(const MDyckWord& w) {
  if (!in_twist_domain(w)) throw NotInDomain("twist step undefined on " + w.text());
  return word(w.m(), {0, w[3] + 1, w[1] - 1, w[2] - 1});
}

MDyckWord piecewise_step4(const MDyckWord& w) {
  require_length(w, 4, 4, "piecewise length-4 step");
  if (w[1] == 0) throw NotInDomain("terminal word " + w.text());
  const int m = w.m();
  const int g1 = w[1], g2 = w[2], g3 = w[3];
  if (g2 <= m) return word(m, {0, g2, g3, g1 - 1});
  if (g3 - g1 > m) return word(m, {0, g1, g2, g3 - 1});
  if (g2 - g3 > m + 1) return word(m, {0, g3 + 1, g1 - 1, g2 - 1});
  return word(m, {0, g1, g3, g2 - 1});
}

namespace {

MDyckWord step5(const MDyckWord& w) {
  const int m = w.m();
  const int g1 = w[1], g2 = w[2], g3 = w[3], g4 = w[4];
  if (g2 <= m) return word(m, {0, g2, g3, g4, g1 - 1});
  if (g4 >= m) {
    if (g3 - g1 <= m) return word(m, {0, g1, g3, g4, g2 - 1});
    if (g4 - g2 <= m) {
      if (g3 - g4 <= m + 1) return word(m, {0, g1, g2, g4, g3 - 1});
      return word(m, {0, g1, g4 + 1, g2 - 1, g3 - 1});
    }
    return word(m, {0, g1, g2, g3, g4 - 1});
  }
  if (g3 - g1 <= m) {
    if (g2 - g4 <= m + 1) return word(m, {0, g1, g3, g4, g2 - 1});
    if (g3 - g4 <= m + 1) {
      if (g2 - g3 > m || g3 <= m) return word(m, {0, g4 + 1, g3, g1 - 1, g2 - 1});
      return word(m, {0, g4 + 1, g1, g3 - 1, g2 - 1});
    }
    return word(m, {0, g4 + 1, g1, g2 - 1, g3 - 1});
  }
  if (g2 - g4 <= m + 1) {
    if (g3 - g4 <= m + 1) return word(m, {0, g1, g2, g4, g3 - 1});
    return word(m, {0, g4 + 1, g1, g2 - 1, g3 - 1});
  }
  if (g3 - g4 > m + 2 && g2 - g4 > m + 2) return word(m, {0, g4 + 2, g1 - 1, g2 - 1, g3 - 1});
  return word(m, {0, g1, g4 + 1, g2 - 1, g3 - 1});
}

}  // namespace

MDyckWord chain_map(const MDyckWord& w) {
  require_length(w, 2, 5, "chain map");
  if (w[1] == 0) throw NotInDomain("terminal word " + w.text());
  if (w.n() == 5) return step5(w);
  if (in_default_domain(w)) return default_step(w);
  if (in_twist_domain(w)) return twist_step(w);
  throw NotInDomain("chain map undefined on " + w.text());
}

std::string part_name(Part p) {
  switch (p) {
    case Part::D1: return "D1";
    case Part::D2: return "D2";
    case Part::D3: return "D3";
    case Part::D1p: return "D1'";
    case Part::D2p: return "D2'";
    case Part::D3p: return "D3'";
  }
  return "?";
}

bool in_part(Part p, const MDyckWord& w) {
  if (w.n() != 4) return false;
  const int m = w.m();
  const int g1 = w[1], g2 = w[2], g3 = w[3];
  switch (p) {
    case Part::D1: return g3 == g2 + m && 0 < g1 && g1 <= m && m < g2 && g2 <= g1 + m;
    case Part::D2: return g2 == m && 0 <= g1 && g1 <= m && g1 + m <= g3 && g3 <= 2 * m;
    case Part::D3: return g1 == 0 && 0 <= g2 && g2 < m && m <= g3 && g3 <= g2 + m;
    case Part::D1p: return g1 == 0 && g2 > g3;
    case Part::D2p: return g1 == 0 && g2 <= g3 && g3 <= m;
    case Part::D3p: return g1 == 0 && g3 > m;
  }
  return false;
}

std::pair<int, int> stats_on_part(Part p, const MDyckWord& w) {
  if (!in_part(p, w)) throw WrongPart(w.text() + " is not in " + part_name(p));
  const int m = w.m();
  const int g2 = w[2], g3 = w[3];
  const int a = area(w);
  switch (p) {
    case Part::D1p: return {a, 6 * m + 1 - 3 * g2 - g3};
    case Part::D2p: return {a, 6 * m - g2 - 3 * g3};
    case Part::D3p: return {a, 4 * m - g2 - g3};
    case Part::D1: return {a, 2 * m - g2};
    case Part::D2: return {a, 3 * m - g3};
    case Part::D3: return {a, 4 * m - g2 - g3};
  }
  return {a, 0};
}

EndpointSets endpoint_sets(int n, int m) {
  if (n < 2 || n > 5) throw Unsupported("endpoint sets are available for lengths 2..5 only, not " + std::to_string(n));
  EndpointSets e;
  std::set<std::vector<int>> image;
  std::vector<MDyckWord> all = enumerate_words(n, m);
  for (const auto& w : all) {
    if (w[1] == 0) {
      e.terminal.push_back(w);
    } else {
      image.insert(chain_map(w).gamma());
    }
  }
  std::vector<MDyckWord> complement;
  for (const auto& w : all) {
    if (!image.count(w.gamma())) complement.push_back(w);
  }
  if (n == 5) {
    e.initial = std::move(complement);
    return e;
  }

  std::vector<MDyckWord> closed;
  if (n == 2) {
    closed.push_back(word(m, {0, m}));
  } else if (n == 3) {
    for (int i = 0; i <= m; ++i) closed.push_back(word(m, {0, i, i + m}));
  } else {
    for (Part p : {Part::D1, Part::D2, Part::D3, Part::D1p, Part::D2p, Part::D3p}) e.parts[p] = {};
    for (const auto& w : all) {
      int hits = 0;
      for (Part p : {Part::D1, Part::D2, Part::D3}) {
        if (in_part(p, w)) {
          e.parts[p].push_back(w);
          ++hits;
        }
      }
      if (hits > 0) closed.push_back(w);
      if (hits > 1) throw InternalCheckFailed("initial parts overlap at " + w.text());
      int terminal_hits = 0;
      for (Part p : {Part::D1p, Part::D2p, Part::D3p}) {
        if (in_part(p, w)) {
          e.parts[p].push_back(w);
          ++terminal_hits;
        }
      }
      if (terminal_hits != (w[1] == 0 ? 1 : 0)) throw InternalCheckFailed("terminal parts do not split at " + w.text());
    }
  }
  std::sort(closed.begin(), closed.end());
  if (closed != complement) {
    throw InternalCheckFailed("closed-form initial set differs from the image complement; closed:" + word_list(closed) +
                              " complement:" + word_list(complement));
  }
  e.initial = std::move(closed);
  return e;
}

ChainSystem word_chain_system(int n, int m) {
  if (n < 1 || n > 5) throw Unsupported("no chain map for length " + std::to_string(n));
  std::vector<MDyckWord> all = enumerate_words(n, m);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<ChainElement> elements;
  elements.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    index.emplace(all[i].gamma(), i);
    elements.push_back({all[i].text(), area(all[i]), dinv(all[i])});
  }
  PartialMap next(all.size());
  if (n >= 2) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i][1] == 0) continue;
      next[i] = index.at(chain_map(all[i]).gamma());
    }
  }
  if (n == 1) return ChainSystem(std::move(elements), std::move(next));
  const EndpointSets ends = endpoint_sets(n, m);
  std::vector<std::size_t> initial, terminal;
  for (const auto& w : ends.initial) initial.push_back(index.at(w.gamma()));
  for (const auto& w : ends.terminal) terminal.push_back(index.at(w.gamma()));
  return ChainSystem(std::move(elements), std::move(next), std::move(initial), std::move(terminal));
}

bool in_aux_g_domain(const MDyckWord& w) {
  const int m = w.m();
  if (w.n() == 3) return w[2] == w[1] + m && !(w[1] == 0);
  if (w.n() == 4) {
    if (!in_part(Part::D1, w) && !in_part(Part::D2, w)) return false;
    return !(w[1] == 0 && w[2] == m && w[3] >= m);
  }
  return false;
}

MDyckWord aux_g(const MDyckWord& w) {
  if (!in_aux_g_domain(w)) throw NotInDomain("auxiliary map g undefined on " + w.text());
  if (w.n() == 3) return word(w.m(), {0, w[1] - 1, w[2] - 1});
  if (in_part(Part::D1, w)) return word(w.m(), {0, w[1], w[2] - 1, w[3] - 1});
  return word(w.m(), {0, w[1] - 1, w[2], w[3] - 1});
}

bool in_aux_g_prime_domain(const MDyckWord& w) {
  const int m = w.m();
  if (w.n() == 3) return w[1] == 0 && w[2] < m;
  if (w.n() == 4) return (in_part(Part::D1p, w) || in_part(Part::D2p, w)) && w[3] != m;
  return false;
}

MDyckWord aux_g_prime(const MDyckWord& w) {
  if (!in_aux_g_prime_domain(w)) throw NotInDomain("auxiliary map g' undefined on " + w.text());
  if (w.n() == 3) return word(w.m(), {0, 0, w[2] + 1});
  return word(w.m(), {0, 0, w[3] + 1, w[2]});
}

long half_floor_plus(long num) {
  // Floor division rounding toward minus infinity.
  const long q = num >= 0 ? num / 2 : -((-num + 1) / 2);
  return std::max(q, 0L);
}

long closed_coeff_c4(int m, int j, int k) {
  const long M = m, J = j, K = k;
  if (J + K > 4 * M) {
    return std::min({half_floor_plus(-6 * M + 2 + 3 * J + K), half_floor_plus(6 * M + 2 - J - K),
                     half_floor_plus(-6 * M + 2 + J + 3 * K)});
  }
  if (J + K == 4 * M) return std::min(half_floor_plus(-M + 2 + J), half_floor_plus(-M + 2 + K));
  return 0;
}

std::vector<LatticePoint> triangle_points(LatticePoint a, LatticePoint b, LatticePoint c) {
  auto cross = [](LatticePoint o, LatticePoint p, LatticePoint x) {
    return static_cast<long>(p.first - o.first) * (x.second - o.second) -
           static_cast<long>(p.second - o.second) * (x.first - o.first);
  };
  const int x0 = std::min({a.first, b.first, c.first}), x1 = std::max({a.first, b.first, c.first});
  const int y0 = std::min({a.second, b.second, c.second}), y1 = std::max({a.second, b.second, c.second});
  std::vector<LatticePoint> out;
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) {
      const LatticePoint p{x, y};
      const long s1 = cross(a, b, p), s2 = cross(b, c, p), s3 = cross(c, a, p);
      const bool nonneg = s1 >= 0 && s2 >= 0 && s3 >= 0;
      const bool nonpos = s1 <= 0 && s2 <= 0 && s3 <= 0;
      if (nonneg || nonpos) out.push_back(p);
    }
  }
  return out;
}

std::vector<LatticePoint> triangle_points(TriangleKind kind, int m) {
  if (m < 1) throw BadParameters("triangle parameter must be positive");
  if (kind == TriangleKind::C3) return triangle_points({0, 3 * m}, {m, m}, {3 * m, 0});
  return triangle_points({0, 6 * m}, {m, 3 * m}, {2 * m, 2 * m});
}

}  // namespace qtcat
