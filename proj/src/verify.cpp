#include "qtcat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qtcat/chain_system.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/errors.hpp"
#include "qtcat/garsia_haiman.hpp"
#include "qtcat/mchains.hpp"
#include "qtcat/ratslope.hpp"

namespace qtcat {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Report {
 public:
  Report(const std::string& suite, int m_max) {
    json_ = {{"suite", suite}, {"m_max", m_max}, {"pass", true}, {"checks", nlohmann::json::array()}};
  }

  void check(const std::string& name, const std::function<Outcome()>& body, bool fatal = true) {
    Outcome out{false, ""};
    try {
      out = body();
    } catch (const std::exception& e) {
      out = {false, e.what()};
    }
    json_["checks"].push_back({{"name", name}, {"pass", out.pass}, {"fatal", fatal}, {"detail", out.detail}});
    if (fatal && !out.pass) json_["pass"] = false;
  }

  nlohmann::json take() { return std::move(json_); }

 private:
  nlohmann::json json_;
};

std::string nm(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

Outcome same(const Polynomial& got, const Polynomial& want) {
  if (got == want) return {true, ""};
  return {false, "got " + to_text(got) + ", expected " + to_text(want)};
}

Outcome antidiagonals_unimodal(const Polynomial& p) {
  for (std::uint32_t d = 0; d <= p.total_degree(); ++d) {
    const auto seq = antidiagonal(p, d);
    if (!is_unimodal(seq)) return {false, "antidiagonal " + std::to_string(d) + " is not unimodal"};
  }
  return {true, ""};
}

Outcome chain_certificate(const ChainSystem& s) {
  // Throws on a broken rational identity; returns the endpoint verdict.
  if (!verify_symmetry_via_chains(s)) return {false, "C_T(q,t) differs from C_I(t,q)"};
  return {true, std::to_string(s.size()) + " elements"};
}

Outcome involution_checks(const ChainSystem& s, bool with_reattach) {
  const PartialMap h = canonical_h(s);
  check_h(s, h);
  if (!is_stat_swapping_involution(s, build_involution_j(s, h))) return {false, "J is not a stat-swapping involution"};
  if (with_reattach) {
    const Reattachment r = reattach_chains(s, h);
    if (!is_stat_swapping_involution(s, r.involution)) return {false, "reattached involution fails"};
  }
  return {true, ""};
}

void suite_symmetry(Report& rep, int m_max) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      rep.check("direct swap " + nm(n, m), [&] {
        const Polynomial c = genfun(n, m);
        return same(swap_qt(c), c);
      });
      rep.check("chain certificate " + nm(n, m), [&] { return chain_certificate(word_chain_system(n, m)); });
    }
  }
}

void suite_gh(Report& rep, int m_max) {
  for (int m = 1; m <= m_max; ++m) rep.check("AC_1 = 1 m=" + std::to_string(m), [&] { return same(ac_genfun(1, m), Polynomial(1)); });
  for (int m = 1; m <= m_max; ++m) {
    rep.check("AC_2 closed form m=" + std::to_string(m), [&] {
      Polynomial want;
      for (int i = 0; i <= m; ++i) want.add_term(i, m - i, 1);
      return same(ac_genfun(2, m), want);
    });
  }
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= m_max; ++m) rep.check("AC = C " + nm(n, m), [&] { return same(ac_genfun(n, m), genfun(n, m)); });
  }
  for (int n = 5; n <= 6; ++n) {
    for (int m = 1; m <= std::min(m_max, 2); ++m) {
      rep.check("AC = C (open) " + nm(n, m), [&] { return same(ac_genfun(n, m), genfun(n, m)); }, false);
    }
  }
}

void suite_coeffs(Report& rep, int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    rep.check("closed coefficients n=4 " + tag, [&]() -> Outcome {
      const Polynomial c = genfun(4, m);
      const int top = static_cast<int>(c.total_degree()) + 2;
      for (int j = 0; j <= top; ++j) {
        for (int k = 0; k <= top; ++k) {
          if (c.coeff(j, k) != closed_coeff_c4(m, j, k)) {
            return {false, "mismatch at q^" + std::to_string(j) + " t^" + std::to_string(k)};
          }
        }
      }
      return {true, ""};
    });
    rep.check("unimodal antidiagonals n=4 " + tag, [&] { return antidiagonals_unimodal(genfun(4, m)); });
  }
}

void suite_n5(Report& rep, int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    rep.check("n=5 chain certificate m=" + std::to_string(m), [&] { return chain_certificate(word_chain_system(5, m)); });
  }
}

std::multiset<std::pair<int, int>> stat_multiset(const std::vector<RSDyckPath>& paths, int num, int den, bool plus) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& p : paths) {
    const PathStats st = path_stats(p, num, den);
    out.insert({st.area, plus ? st.h_plus : st.h_minus});
  }
  return out;
}

void suite_ratslope(Report& rep, int m_max) {
  const std::vector<SlopeCase> cases{SlopeCase::S4m2, SlopeCase::S4m1, SlopeCase::S3m1};
  for (int m = 1; m <= std::min(m_max, 5); ++m) {
    const std::string tag = "m=" + std::to_string(m);
    rep.check("h+ at m equals h- at (4m+2)/4 pointwise " + tag, [&]() -> Outcome {
      for (const auto& p : enumerate_paths(4 * m + 2, 4)) {
        if (path_stats(p, m, 1).h_plus != path_stats(p, 4 * m + 2, 4).h_minus) return {false, p.text()};
      }
      return {true, ""};
    });
    rep.check("h- at m equals h+ at (4m-1)/4 pointwise " + tag, [&]() -> Outcome {
      for (const auto& p : enumerate_paths(4 * m - 1, 4)) {
        if (path_stats(p, m, 1).h_minus != path_stats(p, 4 * m - 1, 4).h_plus) return {false, p.text()};
      }
      return {true, ""};
    });
    // For 4m-1 the exchange happens at slope m; for 4m+2 it happens at the
    // path's own slope (at slope m the two multisets differ already for m=1).
    rep.check("(area,h+) and (area,h-) equidistributed on 4m-1 at slope m " + tag, [&]() -> Outcome {
      const auto paths = enumerate_paths(4 * m - 1, 4);
      if (stat_multiset(paths, m, 1, true) != stat_multiset(paths, m, 1, false)) return {false, "multisets differ"};
      return {true, ""};
    });
    rep.check("(area,h+) and (area,h-) equidistributed on 4m+2 at slope (4m+2)/4 " + tag, [&]() -> Outcome {
      const auto paths = enumerate_paths(4 * m + 2, 4);
      if (stat_multiset(paths, 4 * m + 2, 4, true) != stat_multiset(paths, 4 * m + 2, 4, false)) {
        return {false, "multisets differ"};
      }
      return {true, ""};
    });
    rep.check("slopes 4m and 4m+1 give C_4^(m) " + tag, [&]() -> Outcome {
      const Polynomial c = genfun(4, m);
      if (rs_genfun(4 * m, 4) != c) return {false, "r=4m"};
      if (rs_genfun(4 * m + 1, 4) != c) return {false, "r=4m+1"};
      return {true, ""};
    });
  }
  for (SlopeCase c : cases) {
    for (int m = 1; m <= m_max; ++m) {
      const std::string tag = slope_case_name(c) + " m=" + std::to_string(m);
      const auto [r, s] = slope_case_dims(c, m);
      rep.check("direct swap " + tag, [&] {
        const Polynomial p = rs_genfun(r, s);
        return same(swap_qt(p), p);
      });
      rep.check("chain certificate " + tag, [&] { return chain_certificate(rs_chain_system(c, m)); });
      rep.check("part formulas " + tag, [&]() -> Outcome {
        const RSEndpointSets ends = rs_endpoint_sets(c, m);
        for (const auto& [part, words] : ends.parts) {
          for (const auto& w : words) {
            if (rs_stats_on_part(part, w) != rs_stats(w)) return {false, part_name(part) + " at " + w.text()};
          }
        }
        return {true, ""};
      });
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    for (auto [which, r] : {std::pair{RsCoeffCase::C2m122, 4 * m + 2}, std::pair{RsCoeffCase::C4m141, 4 * m - 1}}) {
      const std::string tag = std::string(which == RsCoeffCase::C2m122 ? "4m+2" : "4m-1") + " m=" + std::to_string(m);
      rep.check("closed coefficients " + tag, [&, which = which, r = r]() -> Outcome {
        const Polynomial p = rs_genfun(r, 4);
        const int top = static_cast<int>(p.total_degree()) + 2;
        for (int j = 0; j <= top; ++j) {
          for (int k = 0; k <= top; ++k) {
            if (p.coeff(j, k) != closed_coeff_rs(which, m, j, k)) {
              return {false, "mismatch at q^" + std::to_string(j) + " t^" + std::to_string(k)};
            }
          }
        }
        return {true, ""};
      });
      rep.check("unimodal antidiagonals " + tag, [&, r = r] { return antidiagonals_unimodal(rs_genfun(r, 4)); });
    }
  }
}

void suite_gm(Report& rep, int r_max) {
  for (int r = 4; r <= r_max; ++r) {
    if (std::gcd(r, 3) != 1) continue;
    rep.check("construction r=" + std::to_string(r), [&]() -> Outcome {
      const GMTable t = gm_construct(r);
      Polynomial from_x;
      for (std::size_t i = 0; i < t.x_points.size(); ++i) {
        const std::size_t y = t.f[i];
        if (t.area[i] != t.wt1[y] || t.h_plus[i] != t.wt2[y]) return {false, "f does not carry (area,h+) to (wt1,wt2)"};
        if (t.g[t.g[i]] != i) return {false, "g is not an involution"};
        if (t.area[t.g[i]] != t.h_plus[i] || t.h_plus[t.g[i]] != t.area[i]) return {false, "g does not swap area and h+"};
        from_x.add_term(t.area[i], t.h_plus[i], 1);
      }
      for (std::size_t y = 0; y < t.y_points.size(); ++y) {
        if (t.flip[t.flip[y]] != y || t.wt1[t.flip[y]] != t.wt2[y]) return {false, "flip fails on Y"};
      }
      if (!is_symmetric(from_x)) return {false, "X generating function is not symmetric"};
      return same(from_x, rs_genfun(r, 3));
    });
  }
}

void suite_involution(Report& rep, int m_max) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      rep.check("J and reattachment " + nm(n, m), [&] { return involution_checks(word_chain_system(n, m), true); });
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    rep.check("J " + nm(5, m), [&] { return involution_checks(word_chain_system(5, m), false); });
  }
  for (SlopeCase c : {SlopeCase::S4m2, SlopeCase::S4m1, SlopeCase::S3m1}) {
    for (int m = 1; m <= m_max; ++m) {
      rep.check("J and reattachment " + slope_case_name(c) + " m=" + std::to_string(m),
                [&] { return involution_checks(rs_chain_system(c, m), true); });
    }
  }
}

const std::map<std::string, std::pair<int, void (*)(Report&, int)>>& registry() {
  static const std::map<std::string, std::pair<int, void (*)(Report&, int)>> r{
      {"symmetry", {10, suite_symmetry}}, {"gh", {5, suite_gh}},       {"coeffs", {10, suite_coeffs}},
      {"n5", {10, suite_n5}},             {"ratslope", {10, suite_ratslope}}, {"gm", {40, suite_gm}},
      {"involution", {5, suite_involution}}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symmetry", "gh", "coeffs", "n5", "ratslope", "gm", "involution"};
  return names;
}

int default_m_max(const std::string& suite) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw BadParameters("unknown suite '" + suite + "'");
  return it->second.first;
}

nlohmann::json run_suite(const std::string& suite, int m_max) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw BadParameters("unknown suite '" + suite + "'");
  if (m_max < 1) throw BadParameters("m-max must be positive");
  Report rep(suite, m_max);
  it->second.second(rep, m_max);
  return rep.take();
}

}  // namespace qtcat
