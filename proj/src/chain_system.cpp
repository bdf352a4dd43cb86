#include "qtcat/chain_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qtcat/errors.hpp"

namespace qtcat {

ChainSystem::ChainSystem(std::vector<ChainElement> elements, PartialMap next)
    : elements_(std::move(elements)), next_(std::move(next)) {
  validate();
}

ChainSystem::ChainSystem(std::vector<ChainElement> elements, PartialMap next, std::vector<std::size_t> initial,
                         std::vector<std::size_t> terminal)
    : ChainSystem(std::move(elements), std::move(next)) {
  std::sort(initial.begin(), initial.end());
  std::sort(terminal.begin(), terminal.end());
  if (initial != initial_) throw InvalidChainMap("initial set is not the complement of the image of f");
  if (terminal != terminal_) throw InvalidChainMap("terminal set is not the complement of the domain of f");
}

void ChainSystem::validate() {
  const std::size_t n = elements_.size();
  if (next_.size() != n) throw InvalidChainMap("chain map size differs from element count");
  prev_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].a < 0 || elements_[i].d < 0) {
      throw InvalidChainMap("negative statistic on element " + elements_[i].id);
    }
    if (!next_[i]) continue;
    const std::size_t j = *next_[i];
    if (j >= n) throw InvalidChainMap("chain map leaves the element set at " + elements_[i].id);
    if (prev_[j]) throw InvalidChainMap("chain map is not injective at " + elements_[j].id);
    prev_[j] = i;
    if (elements_[j].a != elements_[i].a - 1 || elements_[j].d != elements_[i].d + 1) {
      throw InvalidChainMap("chain map does not shift (a,d) by (-1,+1) at " + elements_[i].id);
    }
  }
  initial_.clear();
  terminal_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!prev_[i]) initial_.push_back(i);
    if (!next_[i]) terminal_.push_back(i);
  }
}

std::optional<std::size_t> ChainSystem::find(const std::string& id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].id == id) return i;
  }
  return std::nullopt;
}

ChainDecomposition decompose_chains(const ChainSystem& s) {
  ChainDecomposition dec;
  std::size_t covered = 0;
  for (std::size_t start : s.initial()) {
    std::vector<std::size_t> chain{start};
    // The statistic shift makes a strictly decreasing, so this terminates.
    for (auto cur = s.next(start); cur; cur = s.next(*cur)) chain.push_back(*cur);
    covered += chain.size();
    dec.chains.push_back(std::move(chain));
  }
  if (covered != s.size()) throw InvalidChainMap("some elements lie on no chain from the initial set");
  return dec;
}

EndpointGenfuns endpoint_genfuns(const ChainSystem& s) {
  EndpointGenfuns g;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Monomial mono{static_cast<std::uint32_t>(s.element(i).a), static_cast<std::uint32_t>(s.element(i).d)};
    g.whole.add_term(mono, 1);
    if (s.is_initial(i)) g.initial.add_term(mono, 1);
    if (s.is_terminal(i)) g.terminal.add_term(mono, 1);
  }
  return g;
}

bool verify_symmetry_via_chains(const ChainSystem& s) {
  decompose_chains(s);
  const EndpointGenfuns g = endpoint_genfuns(s);
  const bool symmetric_ends = g.terminal == swap_qt(g.initial);
  // C_W = C_I / (1 - t/q) + C_T / (1 - q/t), cleared of denominators.
  const Polynomial lhs = g.whole * (Polynomial::q() - Polynomial::t());
  const Polynomial rhs = g.initial * Polynomial::q() - g.terminal * Polynomial::t();
  if (lhs != rhs) throw InternalCheckFailed("telescoping identity for chain generating functions fails");
  if (symmetric_ends && !is_symmetric(g.whole)) {
    throw InternalCheckFailed("endpoint symmetry holds but the whole generating function is not symmetric");
  }
  return symmetric_ends;
}

long coeff_from_endpoints(const ChainSystem& s, int j, int k) {
  long count = 0;
  for (std::size_t i : s.initial()) {
    const auto& e = s.element(i);
    if (e.a + e.d == j + k && e.a >= j) ++count;
  }
  for (std::size_t i : s.terminal()) {
    const auto& e = s.element(i);
    if (e.a + e.d == j + k && e.a > j) --count;
  }
  return count;
}

PartialMap canonical_h(const ChainSystem& s) {
  std::map<std::pair<int, int>, std::vector<std::size_t>> ends;
  std::map<std::pair<int, int>, std::vector<std::size_t>> starts;
  for (std::size_t i : s.terminal()) ends[{s.element(i).a, s.element(i).d}].push_back(i);
  for (std::size_t i : s.initial()) starts[{s.element(i).d, s.element(i).a}].push_back(i);
  if (ends.size() != starts.size()) throw NoSuchBijection("endpoint bidegrees do not transpose");
  PartialMap h(s.size());
  for (const auto& [key, from] : ends) {
    auto it = starts.find(key);
    if (it == starts.end() || it->second.size() != from.size()) {
      throw NoSuchBijection("no initial partner class for terminal bidegree (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
    }
    for (std::size_t i = 0; i < from.size(); ++i) h[from[i]] = it->second[i];
  }
  return h;
}

void check_h(const ChainSystem& s, const PartialMap& h) {
  if (h.size() != s.size()) throw NoSuchBijection("h has the wrong size");
  std::vector<bool> hit(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (h[i].has_value() != s.is_terminal(i)) throw NoSuchBijection("h must be defined exactly on the terminal set");
    if (!h[i]) continue;
    const std::size_t j = *h[i];
    if (j >= s.size() || !s.is_initial(j)) throw NoSuchBijection("h must land in the initial set");
    if (hit[j]) throw NoSuchBijection("h is not injective");
    hit[j] = true;
    if (s.element(j).a != s.element(i).d || s.element(j).d != s.element(i).a) {
      throw NoSuchBijection("h does not transpose the statistics at " + s.element(i).id);
    }
  }
}

namespace {

int diff(const ChainSystem& s, std::size_t i) { return s.element(i).a - s.element(i).d; }

std::size_t successor(const ChainSystem& s, const PartialMap& h, std::size_t i) {
  return s.is_terminal(i) ? *h[i] : *s.next(i);
}

}  // namespace

std::vector<std::vector<DrawnDot>> cycle_drawings(const ChainSystem& s, const PartialMap& h) {
  check_h(s, h);
  std::vector<std::vector<DrawnDot>> drawings;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t start = 0; start < s.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t cur = start; !seen[cur]; cur = successor(s, h, cur)) {
      seen[cur] = true;
      cycle.push_back(cur);
    }
    if (std::all_of(cycle.begin(), cycle.end(), [&](std::size_t i) { return diff(s, i) == 0; })) continue;

    // Lowest position among the initial elements of largest a - d.
    std::optional<std::size_t> origin;
    for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
      const std::size_t i = cycle[pos];
      if (!s.is_initial(i)) continue;
      if (!origin || diff(s, i) > diff(s, cycle[*origin]) ||
          (diff(s, i) == diff(s, cycle[*origin]) && i < cycle[*origin])) {
        origin = pos;
      }
    }
    if (!origin || diff(s, cycle[*origin]) <= 0) {
      throw InternalCheckFailed("cycle through " + s.element(start).id + " has no initial element above the midline");
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(*origin), cycle.end());

    std::vector<DrawnDot> dots;
    dots.push_back({cycle[0], 0, diff(s, cycle[0]), true});
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      const DrawnDot& cur = dots.back();
      DrawnDot nxt{cycle[i + 1], cur.x + 1, 0, false};
      if (s.is_terminal(cur.element)) {
        nxt.y = cur.y;
        nxt.black = !cur.black;
      } else if (cur.y == 0) {
        nxt.y = 2;
      } else if (cur.black && cur.y > 1) {
        nxt.y = cur.y - 2;
        nxt.black = true;
      } else if (cur.black) {
        nxt.y = 1;
      } else {
        nxt.y = cur.y + 2;
      }
      dots.push_back(nxt);
    }

    const int top = dots.front().y;
    for (const DrawnDot& dot : dots) {
      const int dd = diff(s, dot.element);
      if (dot.y != std::abs(dd) || (dd != 0 && dot.black != (dd > 0)) || dot.y > top) {
        throw InternalCheckFailed("drawing of the cycle through " + s.element(start).id + " is inconsistent");
      }
    }
    if (dots.back().black || dots.back().y != top) {
      throw InternalCheckFailed("drawing of the cycle through " + s.element(start).id + " does not close up");
    }
    drawings.push_back(std::move(dots));
  }
  return drawings;
}

Involution build_involution_j(const ChainSystem& s, const PartialMap& h) {
  Involution j(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) j[i] = i;
  for (const auto& dots : cycle_drawings(s, h)) {
    for (std::size_t i = 0; i < dots.size(); ++i) {
      if (!dots[i].black || dots[i].y == 0) continue;
      std::size_t k = i + 1;
      while (k < dots.size() && dots[k].y != dots[i].y) ++k;
      if (k == dots.size() || dots[k].black) {
        throw InternalCheckFailed("black dot for " + s.element(dots[i].element).id + " has no white partner");
      }
      j[dots[i].element] = dots[k].element;
      j[dots[k].element] = dots[i].element;
    }
  }
  if (!is_stat_swapping_involution(s, j)) throw InternalCheckFailed("matched dots do not form an involution");
  return j;
}

Reattachment reattach_chains(const ChainSystem& s, const PartialMap& h) {
  check_h(s, h);
  const ChainDecomposition dec = decompose_chains(s);
  std::vector<std::size_t> chain_starting(s.size()), chain_ending(s.size());
  for (std::size_t c = 0; c < dec.chains.size(); ++c) {
    chain_starting[dec.chains[c].front()] = c;
    chain_ending[dec.chains[c].back()] = c;
  }
  // a - d drops by two along a chain, so the upper part is a prefix.
  auto split = [&](std::size_t c) {
    const auto& chain = dec.chains[c];
    std::size_t cut = 0;
    while (cut < chain.size() && diff(s, chain[cut]) >= 0) ++cut;
    return cut;
  };

  Reattachment out;
  out.involution.resize(s.size());
  for (std::size_t w : s.terminal()) {
    const auto& upper_chain = dec.chains[chain_starting[*h[w]]];
    const auto& lower_chain = dec.chains[chain_ending[w]];
    std::vector<std::size_t> glued(upper_chain.begin(),
                                   upper_chain.begin() + static_cast<std::ptrdiff_t>(split(chain_starting[*h[w]])));
    glued.insert(glued.end(), lower_chain.begin() + static_cast<std::ptrdiff_t>(split(chain_ending[w])),
                 lower_chain.end());
    if (glued.empty()) continue;
    const std::size_t len = glued.size();
    for (std::size_t i = 0; i < len; ++i) {
      const auto& x = s.element(glued[i]);
      const auto& y = s.element(glued[len - 1 - i]);
      if (x.a != y.d || x.d != y.a) {
        throw MidlineViolation("reattached chain through " + x.id + " is not symmetric about the midline");
      }
      out.involution[glued[i]] = glued[len - 1 - i];
    }
    out.chains.push_back(std::move(glued));
  }
  return out;
}

bool is_stat_swapping_involution(const ChainSystem& s, const Involution& j) {
  if (j.size() != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (j[i] >= s.size() || j[j[i]] != i) return false;
    if (s.element(j[i]).a != s.element(i).d || s.element(j[i]).d != s.element(i).a) return false;
  }
  return true;
}

nlohmann::json decomposition_json(const ChainSystem& s, const ChainDecomposition& dec) {
  auto ids = [&](const std::vector<std::size_t>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i : v) arr.push_back(s.element(i).id);
    return arr;
  };
  nlohmann::json chains = nlohmann::json::array();
  for (const auto& c : dec.chains) chains.push_back(ids(c));
  return {{"chains", chains}, {"I", ids(s.initial())}, {"T", ids(s.terminal())}};
}

nlohmann::json drawings_json(const ChainSystem& s, const std::vector<std::vector<DrawnDot>>& drawings) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& dots : drawings) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DrawnDot& d : dots) {
      arr.push_back({{"id", s.element(d.element).id}, {"x", d.x}, {"y", d.y}, {"color", d.black ? "black" : "white"}});
    }
    cycles.push_back(arr);
  }
  return cycles;
}

std::string fh_dot(const ChainSystem& s, const PartialMap& h) {
  std::ostringstream out;
  out << "digraph fh {\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s.element(i);
    out << "  \"" << e.id << "\" [label=\"" << e.id << "\\n(" << e.a << "," << e.d << ")\"];\n";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.next(i)) {
      out << "  \"" << s.element(i).id << "\" -> \"" << s.element(*s.next(i)).id << "\";\n";
    } else if (i < h.size() && h[i]) {
      out << "  \"" << s.element(i).id << "\" -> \"" << s.element(*h[i]).id << "\" [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qtcat
