#include "qtcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qtcat/chain_system.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/errors.hpp"
#include "qtcat/garsia_haiman.hpp"
#include "qtcat/mchains.hpp"
#include "qtcat/ratslope.hpp"
#include "qtcat/verify.hpp"

namespace qtcat::cli {

namespace {

// Raised for parameter combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::optional<int> n, m, r, s, m_max;
  std::vector<int> rational;
  std::string kind = "comb";
  std::string format = "text";
  std::string out_path;
  std::string suite;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  if (*v < 1) throw UsageError(std::string(flag) + " must be positive");
  return *v;
}

void need_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("format '" + c.format + "' is not available for this command");
}

std::optional<std::pair<int, int>> rational_dims(const Config& c) {
  if (!c.rational.empty()) return std::pair{c.rational[0], c.rational[1]};
  if (c.r || c.s) return std::pair{need(c.r, "--r"), need(c.s, "--s")};
  return std::nullopt;
}

// The slope case and m whose dimensions are (r, s), if any.
std::optional<std::pair<SlopeCase, int>> slope_case_of(int r, int s) {
  for (SlopeCase k : {SlopeCase::S4m2, SlopeCase::S4m1, SlopeCase::S3m1}) {
    for (int m = 1; m <= r; ++m) {
      if (slope_case_dims(k, m) == std::pair{r, s}) return std::pair{k, m};
    }
  }
  return std::nullopt;
}

std::string compact_id(const std::string& id) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  const bool digits = parts.size() >= 2 && std::all_of(parts.begin(), parts.end(), [](const std::string& p) {
                        return p.size() == 1 && p[0] >= '0' && p[0] <= '9';
                      });
  if (!digits) return id;
  std::string out;
  for (std::size_t i = 1; i < parts.size(); ++i) out += parts[i];
  return out;
}

std::string bidegree(const ChainElement& e) {
  return "(q^" + std::to_string(e.a) + " t^" + std::to_string(e.d) + ")";
}

void emit_polynomial(const Polynomial& p, const Config& c, std::ostream& out) {
  need_format(c, {"text", "json", "csv"});
  if (c.format == "json") {
    out << to_json(p).dump() << '\n';
  } else if (c.format == "csv") {
    out << "q,t,c\n";
    const nlohmann::json j = to_json(p);
    for (const auto& t : j["terms"]) {
      out << t["q"].get<int>() << ',' << t["t"].get<int>() << ',' << t["c"].get<std::string>() << '\n';
    }
  } else {
    out << to_text(p) << '\n';
  }
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  need_format(c, {"text", "json", "csv"});
  nlohmann::json rows = nlohmann::json::array();
  if (auto dims = rational_dims(c)) {
    for (const auto& p : enumerate_paths(dims->first, dims->second)) {
      const PathStats st = path_stats(p, dims->first, dims->second);
      rows.push_back({{"object", p.text()}, {"area", st.area}, {"second", st.h_plus}, {"h_minus", st.h_minus}});
    }
  } else {
    const int n = need(c.n, "--n"), m = need(c.m, "--m");
    for_each_gamma(n, m, [&](const std::vector<int>& g) {
      rows.push_back({{"object", MDyckWord(m, g).text()}, {"area", area_of(g)}, {"second", dinv_of(m, g)}});
    });
  }
  const bool paths = rational_dims(c).has_value();
  const char* second = paths ? "h_plus" : "dinv";
  if (c.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json o = {{paths ? "row_cells" : "word", row["object"]}, {"area", row["area"]}, {second, row["second"]}};
      if (paths) o["h_minus"] = row["h_minus"];
      arr.push_back(o);
    }
    out << arr.dump() << '\n';
  } else if (c.format == "csv") {
    out << (paths ? "row_cells,area,h_plus,h_minus\n" : "word,area,dinv\n");
    for (const auto& row : rows) {
      out << '"' << row["object"].get<std::string>() << "\"," << row["area"] << ',' << row["second"];
      if (paths) out << ',' << row["h_minus"];
      out << '\n';
    }
  } else {
    for (const auto& row : rows) {
      out << row["object"].get<std::string>() << " area=" << row["area"] << ' ' << second << '=' << row["second"];
      if (paths) out << " h_minus=" << row["h_minus"];
      out << '\n';
    }
  }
  return kOk;
}

int cmd_genfun(const Config& c, std::ostream& out) {
  if (auto dims = rational_dims(c)) {
    const auto [r, s] = *dims;
    if (c.kind == "comb") {
      emit_polynomial(rs_genfun(r, s), c, out);
    } else if (c.kind == "sigma") {
      const auto hit = slope_case_of(r, s);
      if (!hit || hit->first == SlopeCase::S3m1) throw UsageError("no closed expression for this slope");
      emit_polynomial(sigma_form(hit->first == SlopeCase::S4m2 ? SigmaCase::C2m122 : SigmaCase::C4m141, hit->second),
                      c, out);
    } else {
      throw UsageError("kind '" + c.kind + "' is not available for rational slopes");
    }
    return kOk;
  }
  const int n = need(c.n, "--n"), m = need(c.m, "--m");
  if (c.kind == "comb") {
    emit_polynomial(genfun(n, m), c, out);
  } else if (c.kind == "gh") {
    emit_polynomial(ac_genfun(n, m), c, out);
  } else if (c.kind == "sigma") {
    if (n != 3 && n != 4) throw UsageError("closed expressions exist only for n = 3 and n = 4");
    emit_polynomial(sigma_form(n == 3 ? SigmaCase::C3 : SigmaCase::AC4, m), c, out);
  } else {
    throw UsageError("unknown kind '" + c.kind + "'");
  }
  return kOk;
}

int cmd_chains(const Config& c, std::ostream& out) {
  need_format(c, {"text", "json", "dot"});
  std::optional<ChainSystem> sys;
  if (auto dims = rational_dims(c)) {
    const auto hit = slope_case_of(dims->first, dims->second);
    if (!hit) throw UsageError("no chain construction for this slope");
    sys.emplace(rs_chain_system(hit->first, hit->second));
  } else {
    const int n = need(c.n, "--n"), m = need(c.m, "--m");
    if (n < 2 || n > 5) throw UsageError("unsupported n: chains exist for n = 2..5");
    sys.emplace(word_chain_system(n, m));
  }
  const ChainSystem& s = *sys;
  bool symmetric = false;
  try {
    symmetric = verify_symmetry_via_chains(s);
  } catch (const InternalCheckFailed&) {
    symmetric = false;
  }
  const ChainDecomposition dec = decompose_chains(s);
  if (c.format == "json") {
    nlohmann::json j = decomposition_json(s, dec);
    j["symmetric"] = symmetric;
    out << j.dump() << '\n';
  } else if (c.format == "dot") {
    out << fh_dot(s, canonical_h(s));
  } else {
    std::vector<std::vector<std::size_t>> chains = dec.chains;
    std::stable_sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
    for (std::size_t i = 0; i < chains.size(); ++i) {
      out << "chain " << i + 1 << " (length " << chains[i].size() - 1 << ")\n";
      for (std::size_t e : chains[i]) out << "  " << compact_id(s.element(e).id) << ' ' << bidegree(s.element(e)) << '\n';
    }
    auto list = [&](const char* label, const std::vector<std::size_t>& v) {
      out << label << ':';
      for (std::size_t e : v) out << ' ' << compact_id(s.element(e).id);
      out << '\n';
    };
    list("I", s.initial());
    list("T", s.terminal());
    const EndpointGenfuns g = endpoint_genfuns(s);
    out << "C_I(q,t) = " << to_text(g.initial) << '\n';
    out << "C_T(q,t) = " << to_text(g.terminal) << '\n';
    out << "C_T(q,t) = C_I(t,q): " << (symmetric ? "PASS" : "FAIL") << '\n';
  }
  return symmetric ? kOk : kCheckFailed;
}

int cmd_gh(const Config& c, std::ostream& out) {
  need_format(c, {"text", "json"});
  const int n = need(c.n, "--n"), m = need(c.m, "--m");
  const Polynomial ac = ac_genfun(n, m);
  const Polynomial comb = genfun(n, m);
  const bool equal = ac == comb;
  if (c.format == "json") {
    out << nlohmann::json{{"n", n}, {"m", m}, {"ac", to_json(ac)}, {"equal_to_combinatorial", equal}}.dump() << '\n';
  } else {
    out << "AC(q,t) = " << to_text(ac) << '\n';
    out << "AC = C: " << (equal ? "PASS" : "FAIL") << '\n';
  }
  return equal ? kOk : kCheckFailed;
}

int cmd_rational(const Config& c, std::ostream& out) {
  const auto dims = rational_dims(c);
  if (!dims) throw UsageError("rational needs --r and --s (or --rational R S)");
  Config paths = c;
  if (c.format == "text" || c.format == "csv") return cmd_enumerate(paths, out);
  need_format(c, {"json"});
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : enumerate_paths(dims->first, dims->second)) {
    const PathStats st = path_stats(p, dims->first, dims->second);
    arr.push_back({{"row_cells", p.row_cells}, {"area", st.area}, {"h_plus", st.h_plus}, {"h_minus", st.h_minus}});
  }
  out << nlohmann::json{{"r", dims->first}, {"s", dims->second}, {"paths", arr},
                        {"genfun", to_json(rs_genfun(dims->first, dims->second))}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_gm(const Config& c, std::ostream& out) {
  const int r = need(c.r ? c.r : c.m, "--r");
  const GMTable t = gm_construct(r);
  if (c.format == "csv" || c.format == "text") {
    out << gm_csv(t);
    return kOk;
  }
  need_format(c, {"json"});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.x_points.size(); ++i) {
    const std::size_t y = t.f[i];
    rows.push_back({{"c", t.x_points[i].first}, {"d", t.x_points[i].second}, {"region", t.x_region[i]},
                    {"area", t.area[i]}, {"h_plus", t.h_plus[i]}, {"a", t.y_points[y].first},
                    {"b", t.y_points[y].second}, {"wt1", t.wt1[y]}, {"wt2", t.wt2[y]},
                    {"g", {t.x_points[t.g[i]].first, t.x_points[t.g[i]].second}}});
  }
  out << nlohmann::json{{"r", r}, {"k", t.k}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  if (c.suite.empty()) throw UsageError("verify needs a suite name");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  const int bound = c.m_max ? need(c.m_max, "--m-max") : default_m_max(c.suite);
  const nlohmann::json report = run_suite(c.suite, bound);
  out << report.dump(2) << '\n';
  return report["pass"].get<bool>() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q,t-Catalan enumeration, chain certificates and verification"};
  app.require_subcommand(1);
  Config c;

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--n", c.n, "word length");
    sub->add_option("--m", c.m, "slope parameter m");
    sub->add_option("--r", c.r, "path width");
    sub->add_option("--s", c.s, "path height");
    sub->add_option("--rational", c.rational, "R S: rational slope R/S")->expected(2);
    sub->add_option("--format", c.format, "json, csv, text or dot")
        ->check(CLI::IsMember({"json", "csv", "text", "dot"}));
    sub->add_option("--out", c.out_path, "write to a file instead of stdout");
  };
  std::map<std::string, int (*)(const Config&, std::ostream&)> handlers{
      {"enumerate", cmd_enumerate}, {"genfun", cmd_genfun}, {"chains", cmd_chains}, {"gh", cmd_gh},
      {"rational", cmd_rational},   {"gm", cmd_gm},         {"verify", cmd_verify}};
  std::map<std::string, CLI::App*> subs;
  subs["enumerate"] = app.add_subcommand("enumerate", "list words or paths with their statistics");
  subs["genfun"] = app.add_subcommand("genfun", "generating function");
  subs["chains"] = app.add_subcommand("chains", "chain decomposition and symmetry certificate");
  subs["gh"] = app.add_subcommand("gh", "partition-sum polynomial compared with the combinatorial one");
  subs["rational"] = app.add_subcommand("rational", "rational-slope paths and statistics");
  subs["gm"] = app.add_subcommand("gm", "r x 3 involution table");
  subs["verify"] = app.add_subcommand("verify", "run a verification suite");
  for (auto& [name, sub] : subs) common(sub);
  subs["genfun"]->add_option("--kind", c.kind, "comb, gh or sigma")->check(CLI::IsMember({"comb", "gh", "sigma"}));
  subs["verify"]->add_option("suite", c.suite, "symmetry, gh, coeffs, n5, ratslope, gm or involution")->required();
  subs["verify"]->add_option("--m-max", c.m_max, "upper bound for m (for gm: for r)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  std::string chosen;
  for (auto& [name, sub] : subs) {
    if (sub->parsed()) chosen = name;
  }
  if (c.format == "text" && chosen == "verify") c.format = "json";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "usage error: cannot write " << c.out_path << '\n';
      return kUsage;
    }
    sink = &file;
  }
  try {
    return handlers.at(chosen)(c, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameters& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidWord& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CaseMismatch& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Unsupported& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace qtcat::cli
