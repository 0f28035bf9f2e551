#include "f3_connection.hpp"

#include "resmirror/cache.hpp"
#include "resmirror/jfunction.hpp"
#include "resmirror/series.hpp"
#include "resmirror/vsc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace resmirror;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "table";
  std::string cache_path;
  bool no_cache = false;
  std::string config_path;

  std::string geometry = "cpn";
  int N = 5, k = 5;
  std::string ring_k = "1";
  std::string degree;
  std::string a = "1", b = "1";
  int n = 0;
  int D = 0;
  bool transformed = false;
  bool inverse = false;
  std::string method = "recursive";
  int dmax = 6;
};

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {
    if (o.no_cache) return;
    cache_.emplace(o.cache_path.empty() ? Cache::default_path() : std::filesystem::path(o.cache_path));
    for (const auto& w : cache_->warnings()) std::cerr << "warning: " << w << "\n";
  }

  TwoPointFn two_point_fn() {
    if (!cache_) return two_point;
    return cached_two_point(*cache_);
  }

  Rational vsc(int N, int k, int d, int n) {
    auto compute = [&] {
      if (o_.method == "residue") return vsc_residue(N, k, d, n);
      if (o_.method == "contour") return vsc_contour(N, k, d, n);
      return vsc_recursive(N, k, d, n);
    };
    if (!cache_) return compute();
    const std::string key = vsc_key(N, k, d, n);
    if (auto v = cache_->lookup(key)) return *v;
    Rational v = compute();
    cache_->store(key, v, "vsc/" + o_.method);
    return v;
  }

 private:
  const Options& o_;
  std::optional<Cache> cache_;
};

GeometrySpec geometry_of(const Options& o) { return make_geometry(o.geometry, o.N, o.k, parse_rational(o.ring_k)); }

BiDegree parse_degree(const GeometrySpec& g, const std::string& text) {
  if (text.empty()) throw InvalidDegree("--d is required");
  const auto comma = text.find(',');
  try {
    if (g.two_forms()) {
      if (comma == std::string::npos) throw InvalidDegree(g.name() + " needs --d da,db");
      return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    }
    if (comma != std::string::npos) throw InvalidDegree(g.name() + " takes a single degree --d d");
    return {std::stoi(text), 0};
  } catch (const std::logic_error&) {
    throw InvalidDegree("malformed degree: " + text);
  }
}

Insertion parse_for(const GeometrySpec& g, const std::string& text) {
  const Insertion ins = parse_insertion(text);
  if (!g.in_basis(ins)) throw InvalidInsertion(text + " is not an insertion of " + g.name());
  return ins;
}

int truncation(const Options& o, const GeometrySpec& g) {
  if (o.D > 0) return o.D;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ValidationError("cannot read config " + o.config_path);
    json cfg;
    try {
      cfg = json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad config: ") + e.what());
    }
    if (cfg.contains("truncation") && cfg["truncation"].contains(g.name())) return cfg["truncation"][g.name()].get<int>();
  }
  return 3;
}

std::pair<std::string, std::string> variable_names(const GeometrySpec& g) {
  return g.two_forms() ? std::pair{"x1", "x2"} : std::pair{"x", "x2"};
}

void print_series(const Options& o, const GeometrySpec& g, const GradedSeries& s) {
  if (o.format == "json") {
    std::cout << s.to_json() << "\n";
    return;
  }
  const auto [v1, v2] = variable_names(g);
  std::cout << s.str(v1, v2) << "\n";
}

int cmd_vsc(const Options& o, Session& s) {
  const Rational v = s.vsc(o.N, o.k, std::stoi(o.degree.empty() ? "0" : o.degree), o.n);
  if (o.format == "json")
    std::cout << json{{"N", o.N}, {"k", o.k}, {"d", o.degree}, {"n", o.n}, {"value", to_string(v)}}.dump() << "\n";
  else
    std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_two_point(const Options& o, Session& s) {
  const GeometrySpec g = geometry_of(o);
  const BiDegree d = parse_degree(g, o.degree);
  const Insertion a = parse_for(g, o.a), b = parse_for(g, o.b);
  const Rational v = s.two_point_fn()(g, d, a, b);
  if (o.format == "json")
    std::cout << json{{"geometry", g.name()}, {"degree", {d.da, d.db}}, {"a", o.a}, {"b", o.b}, {"value", to_string(v)}}.dump()
              << "\n";
  else
    std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_series(const Options& o, Session& s) {
  const GeometrySpec g = geometry_of(o);
  const int D = truncation(o, g);
  const Insertion a = parse_for(g, o.a), b = parse_for(g, o.b);
  GradedSeries F = build_generating_function(g, a, b, D, s.two_point_fn());
  if (o.transformed) {
    MirrorMap m = mirror_map(g, D, s.two_point_fn());
    invert_mirror_map(m);
    F = transform(F, m);
  }
  print_series(o, g, F);
  return 0;
}

int cmd_mirror_map(const Options& o, Session& s) {
  const GeometrySpec g = geometry_of(o);
  MirrorMap m = mirror_map(g, truncation(o, g), s.two_point_fn());
  if (o.inverse) invert_mirror_map(m);
  const auto& out = o.inverse ? m.x : m.t;
  const auto [v1, v2] = variable_names(g);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& t : out) j.push_back(json::parse(t.to_json()));
    std::cout << json{{o.inverse ? "x" : "t", j}}.dump() << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::string lhs = (o.inverse ? "x" : "t") + (out.size() > 1 ? std::to_string(i + 1) : std::string());
    std::cout << lhs << " = " << (o.inverse ? out[i].str("t1", "t2") : out[i].str(v1, v2)) << "\n";
  }
  return 0;
}

int cmd_gw(const Options& o, Session& s) {
  const GeometrySpec g = geometry_of(o);
  if (g.kind == GeometryKind::cpn && o.N != o.k) {
    const auto table = gmt_upto3(o.N, o.k, [&](int n, int d) { return s.vsc(o.N, o.k, d, n); });
    json j = json::array();
    for (const auto& e : table) {
      if (o.format == "json")
        j.push_back({{"d", e.d}, {"a", e.a}, {"b", e.b}, {"value", to_string(e.value)}});
      else
        std::cout << "<h" << e.a << " h" << e.b << ">_" << e.d << " = " << to_string(e.value) << "\n";
    }
    if (o.format == "json") std::cout << j.dump() << "\n";
    return 0;
  }
  Options t = o;
  t.transformed = true;
  return cmd_series(t, s);
}

int cmd_j(const Options& o) {
  if (o.dmax < 1 || o.dmax > 12) throw InvalidDegree("--dmax must lie in 1..12");
  const JExpansion e = j_coefficients(o.dmax);
  if (o.format == "json") {
    json j = json::array(), w = json::array();
    for (const auto& v : e.j) j.push_back(to_string(v));
    for (const auto& v : e.w) w.push_back(to_string(v));
    std::cout << json{{"j", j}, {"w", w}}.dump() << "\n";
    return 0;
  }
  for (std::size_t d = 0; d < e.j.size(); ++d) std::cout << "j_" << d + 1 << " = " << to_string(e.j[d]) << "\n";
  for (std::size_t d = 0; d < e.w.size(); ++d) std::cout << "w_" << d + 1 << " = " << to_string(e.w[d]) << "\n";
  return 0;
}

int cmd_check_theorem1(const Options& o) {
  const int d = std::stoi(o.degree.empty() ? "0" : o.degree);
  const Theorem1Report rep = check_theorem1(o.N, o.k, d);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"n", r.n}, {"recursive", to_string(r.recursive)}, {"residue", to_string(r.residue)}});
    std::cout << json{{"N", o.N}, {"k", o.k}, {"d", d}, {"ok", rep.ok()}, {"rows", rows}}.dump() << "\n";
  } else {
    for (const auto& r : rep.rows)
      std::cout << "n=" << r.n << "  " << to_string(r.recursive) << "  " << to_string(r.residue) << (r.agree() ? "" : "  MISMATCH")
                << "\n";
    std::cout << (rep.ok() ? "all n agree" : "mismatch") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_check_conjecture2(const Options& o, Session& s) {
  const GeometrySpec g = make_geometry("f3");
  auto tp = s.two_point_fn();
  int total = 0;
  json bad = json::array();
  auto run = [&](const std::vector<f3_connection::Entry>& entries, bool by_a, const char* name) {
    for (const auto& e : entries) {
      ++total;
      const Rational got = Rational(by_a ? e.d.da : e.d.db) * tp(g, e.d, e.a, e.b);
      if (got != parse_rational(e.value))
        bad.push_back({{"matrix", name}, {"a", label(e.a)}, {"b", label(e.b)}, {"degree", {e.d.da, e.d.db}},
                       {"expected", e.value}, {"got", to_string(got)}});
    }
  };
  run(f3_connection::cz, true, "C_z");
  run(f3_connection::cw, false, "C_w");
  if (o.format == "json") {
    std::cout << json{{"entries", total}, {"ok", bad.empty()}, {"mismatches", bad}}.dump() << "\n";
  } else {
    for (const auto& m : bad)
      std::cout << m["matrix"].get<std::string>() << "(" << m["a"].get<std::string>() << "," << m["b"].get<std::string>()
                << ") " << m["degree"].dump() << ": expected " << m["expected"].get<std::string>() << ", got "
                << m["got"].get<std::string>() << "\n";
    if (bad.empty()) std::cout << "d_a w = C_z and d_b w = C_w hold for all " << total << " entries\n";
  }
  return bad.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact two-point numbers, virtual structure constants and mirror maps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache", o.cache_path, "Cache file (default: $RESMIRROR_CACHE or ~/.cache/resmirror/cache.jsonl)");
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the cache");
  app.add_option("--config", o.config_path, "JSON config with default truncations");

  auto geometry = [&](CLI::App* c) {
    c->add_option("--geometry,-g", o.geometry, "cpn | kf0 | f3 | wp1 | wp2 | wp3");
    c->add_option("--N", o.N, "cpn: ambient CP^{N-1}");
    c->add_option("--k", o.k, "cpn: hypersurface degree");
    c->add_option("--ring-k", o.ring_k, "kf0: virtual ring parameter");
  };
  auto insertions = [&](CLI::App* c) {
    c->add_option("--a", o.a, "First insertion, e.g. 1, z, w, zw, w2, h3");
    c->add_option("--b", o.b, "Second insertion");
  };
  auto truncation_opts = [&](CLI::App* c) {
    c->add_option("--D", o.D, "Truncation (total degree)");
  };

  auto* vsc = app.add_subcommand("vsc", "Virtual structure constant L_n^{N,k,d}");
  vsc->add_option("--N", o.N)->required();
  vsc->add_option("--k", o.k)->required();
  vsc->add_option("--d", o.degree)->required();
  vsc->add_option("--n", o.n)->required();
  vsc->add_option("--method", o.method)->check(CLI::IsMember({"recursive", "residue", "contour"}));

  auto* tp = app.add_subcommand("two-point", "Two-point number w(O_a O_b)_{0,d}");
  geometry(tp);
  insertions(tp);
  tp->add_option("--d", o.degree, "Degree: d, or da,db for two-form geometries")->required();

  auto* series = app.add_subcommand("series", "Generating function of two-point numbers");
  geometry(series);
  insertions(series);
  truncation_opts(series);
  series->add_flag("--transform", o.transformed, "Substitute the inverted mirror map");

  auto* mm = app.add_subcommand("mirror-map", "Mirror map t(x)");
  geometry(mm);
  truncation_opts(mm);
  mm->add_flag("--inverse", o.inverse, "Print x(t) instead");

  auto* gw = app.add_subcommand("gw", "Two-point Gromov-Witten invariants");
  geometry(gw);
  insertions(gw);
  truncation_opts(gw);

  auto* j = app.add_subcommand("j", "Coefficients of the j-function");
  j->add_option("--dmax", o.dmax, "Highest degree");

  auto* check = app.add_subcommand("check", "Consistency checks");
  check->require_subcommand(1);
  auto* th1 = check->add_subcommand("theorem1", "Recursion against residue formula");
  th1->add_option("--N", o.N)->required();
  th1->add_option("--k", o.k)->required();
  th1->add_option("--d", o.degree)->required();
  auto* c2 = check->add_subcommand("conjecture2", "F3 two-point numbers against the connection matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*th1) return cmd_check_theorem1(o);
    if (*j) return cmd_j(o);
    Session s(o);
    if (*vsc) return cmd_vsc(o, s);
    if (*tp) return cmd_two_point(o, s);
    if (*series) return cmd_series(o, s);
    if (*mm) return cmd_mirror_map(o, s);
    if (*gw) return cmd_gw(o, s);
    if (*c2) return cmd_check_conjecture2(o, s);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
