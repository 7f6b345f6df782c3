// zetacone: command-line front end.
//
// Exit status: 0 success, 1 verification mismatch, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/cone.hpp"
#include "zetacone/covers.hpp"
#include "zetacone/cycles.hpp"
#include "zetacone/error.hpp"
#include "zetacone/json_io.hpp"
#include "zetacone/polyring.hpp"
#include "zetacone/verify.hpp"
#include "zetacone/zeta.hpp"

namespace {

using namespace zetacone;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string input_path;
  std::string input_format;  // empty = by extension
  std::string output = "text";
  bool allow_multigraph = false;

  // zeta / verify
  int max_degree = -1;  // -1 = 2n
  int max_exponent = -1;
  // cone
  std::string check;
  int enumerate = -1;
  // covers
  std::size_t degree = 2;
  std::string spec_path;
  std::uint64_t seed = 0;
  std::size_t samples = 1;
  std::string codewords = "enumerate";
  bool summary = false;
  // cycles
  int max_length = -1;
  std::string lift;
};

ParityCheckMatrix load(const RunConfig& cfg) {
  MatrixFormat fmt = guess_format(cfg.input_path);
  if (!cfg.input_format.empty()) {
    auto f = parse_matrix_format(cfg.input_format);
    if (!f) throw ValidationError("unknown input format '" + cfg.input_format + "'");
    fmt = *f;
  }
  return load_parity_check(cfg.input_path, fmt);
}

bool json_out(const RunConfig& cfg) { return cfg.output == "json"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q.get_str();
}

std::optional<std::uint16_t> exponent_cap(const RunConfig& cfg) {
  if (cfg.max_exponent < 0) return std::nullopt;
  return static_cast<std::uint16_t>(cfg.max_exponent);
}

// ---------------------------------------------------------------------------

int cmd_zeta(const RunConfig& cfg) {
  const auto h = load(cfg);
  const auto g = build_normal_graph(h, {cfg.allow_multigraph});
  const std::uint32_t d = cfg.max_degree >= 0 ? static_cast<std::uint32_t>(cfg.max_degree)
                                              : static_cast<std::uint32_t>(2 * g.num_edges());
  const ZetaInverse z = zeta_inverse(g);
  ZetaSeries s = zeta_series(z, d);
  const auto cap = exponent_cap(cfg);
  if (cap) s = ZetaSeries{TruncatedSeries(s.series.restricted_to_box(*cap), d)};
  const auto support = support_exponents(s);

  if (json_out(cfg)) {
    json report = json_io::zeta_report(z, s, support);
    if (cap) report["max_exponent"] = *cap;
    if (g.multigraph) report["outside_hypotheses"] = true;
    std::cout << report.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "n: " << g.num_edges() << '\n';
  if (g.multigraph) std::cout << "note: parallel edges present; outside the simple-graph hypotheses\n";
  std::cout << "zeta_inverse: " << z.poly.to_string() << '\n';
  std::cout << "series_max_degree: " << d << '\n';
  if (cap) std::cout << "max_exponent: " << *cap << '\n';
  std::cout << "series: " << s.series.polynomial().to_string() << '\n';
  std::cout << "support: " << support.size() << '\n';
  for (const auto& e : support) std::cout << "  " << e.to_string() << '\n';
  return kExitOk;
}

int cmd_cone(const RunConfig& cfg) {
  const auto h = load(cfg);
  const auto k = cone_system(h);

  if (!cfg.check.empty()) {
    std::vector<Rational> w;
    bool integral = true;
    for (const auto& tok : split(cfg.check, ',')) {
      Rational q;
      if (tok.empty() || q.set_str(tok, 10) != 0) throw ValidationError("bad vector entry '" + tok + "'");
      q.canonicalize();
      integral &= q.get_den() == 1;
      w.push_back(q);
    }
    if (w.size() != k.dimension())
      throw ValidationError("vector has " + std::to_string(w.size()) + " entries, code length is " +
                            std::to_string(k.dimension()));
    const auto m = cone_contains(k, w);
    std::optional<bool> parity;
    if (integral) {
      bool nonneg = true;
      for (const auto& q : w) nonneg &= q >= 0;
      if (nonneg) {
        ExponentVector e(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) e.set(i, static_cast<std::uint16_t>(w[i].get_num().get_ui()));
        parity = parity_ok(h, e);
      }
    }
    if (json_out(cfg)) {
      json out = {{"in_cone", m.inside}};
      if (m.violated) {
        out["violated"] = k.inequalities()[*m.violated].to_string();
        out["value"] = m.value.get_str();
      }
      if (parity) out["even_parity"] = *parity;
      std::cout << out.dump(2) << '\n';
    } else {
      if (m.inside)
        std::cout << "in cone: yes\n";
      else
        std::cout << "in cone: no; violated: " << k.inequalities()[*m.violated].to_string() << " (value "
                  << m.value.get_str() << ")\n";
      if (parity) std::cout << "even parity: " << (*parity ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }

  if (cfg.enumerate >= 0) {
    std::vector<ExponentVector> points;
    LatticeBounds bounds{static_cast<std::uint32_t>(cfg.enumerate), exponent_cap(cfg)};
    for_each_integer_point(k, h, bounds, [&](const IntegerConePoint& p) {
      if (p.pseudo_codeword()) points.push_back(p.p);
    });
    if (json_out(cfg)) {
      json pts = json::array();
      for (const auto& p : points) pts.push_back(json_io::to_json(p));
      json out = {{"degree_bound", cfg.enumerate}, {"count", points.size()}, {"points", pts}};
      if (bounds.max_exponent) out["max_exponent"] = *bounds.max_exponent;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "pseudo-codeword lattice points: " << points.size() << '\n';
      for (const auto& p : points) std::cout << "  " << p.to_string() << '\n';
    }
    return kExitOk;
  }

  if (json_out(cfg)) {
    json rows = json::array();
    for (const auto& r : k.inequalities()) rows.push_back({{"coeffs", r.coeffs}, {"text", r.to_string()}});
    std::cout << json{{"n", k.dimension()}, {"inequalities", rows}}.dump(2) << '\n';
  } else {
    std::cout << "fundamental cone: " << k.inequalities().size() << " inequalities\n";
    for (const auto& r : k.inequalities()) std::cout << "  " << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_covers(const RunConfig& cfg) {
  const auto h = load(cfg);
  const auto k = cone_system(h);
  std::vector<CoverSpec> specs;
  if (!cfg.spec_path.empty()) {
    std::ifstream in(cfg.spec_path);
    if (!in) throw ValidationError("cannot open '" + cfg.spec_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("cover spec: ") + e.what());
    }
    specs.push_back(json_io::cover_spec_from_json(j));
  } else {
    if (cfg.degree == 0) throw ValidationError("--degree must be at least 1");
    for (std::size_t s = 0; s < cfg.samples; ++s) specs.push_back(random_cover_spec(h, cfg.degree, cfg.seed + s));
  }

  CodewordSampling how;
  if (cfg.codewords != "enumerate") {
    how.mode = CodewordSampling::Mode::sample;
    try {
      how.count = std::stoul(cfg.codewords);
    } catch (const std::exception&) {
      throw ValidationError("--codewords takes 'enumerate' or a sample count");
    }
  }

  json covers = json::array();
  std::size_t total = 0, violations = 0;
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    const auto lifted = build_cover(h, specs[idx]);
    how.seed = cfg.seed + idx;
    const auto words = cover_codewords(lifted, how);
    json listed = json::array();
    if (!json_out(cfg)) {
      std::cout << "cover " << idx + 1 << ": M=" << specs[idx].degree
                << " spec=" << json_io::to_json(specs[idx]).dump() << '\n';
    }
    if (!json_out(cfg) && !cfg.summary) {
      std::cout << "lifted H (" << lifted.lifted.num_rows() << "x" << lifted.lifted.num_cols() << "):\n"
                << to_dense(lifted.lifted);
      std::cout << "lifted code dimension: " << lifted_code_dimension(lifted) << '\n';
    }
    for (const auto& c : words) {
      ++total;
      const auto w = pseudo_codeword(c, h.num_cols());
      std::vector<std::int64_t> unscaled(w.unscaled.begin(), w.unscaled.end());
      const bool inside = cone_contains(k, unscaled).inside;
      violations += !inside;
      std::string bits, omega, unsc;
      for (auto b : c.bits) bits += static_cast<char>('0' + b);
      for (std::size_t i = 0; i < w.unscaled.size(); ++i) {
        omega += (i ? "," : "") + fraction(w.unscaled[i], w.degree);
        unsc += (i ? "," : "") + std::to_string(w.unscaled[i]);
      }
      if (json_out(cfg)) {
        if (!cfg.summary)
          listed.push_back({{"codeword", bits}, {"omega", split(omega, ',')}, {"unscaled", w.unscaled},
                            {"in_cone", inside}});
      } else if (!cfg.summary) {
        std::cout << "  c=" << bits << " omega=(" << omega << ") unscaled=(" << unsc << ")"
                  << (inside ? "" : " NOT IN CONE") << '\n';
      }
    }
    if (json_out(cfg))
      covers.push_back({{"spec", json_io::to_json(specs[idx])},
                        {"lifted_dense", to_dense(lifted.lifted)},
                        {"dimension", lifted_code_dimension(lifted)},
                        {"codewords", listed}});
  }
  if (json_out(cfg)) {
    std::cout << json{{"covers", covers}, {"codeword_count", total}, {"outside_cone", violations}}.dump(2)
              << '\n';
  } else {
    std::cout << "covers: " << specs.size() << ", codewords: " << total << ", outside cone: " << violations
              << '\n';
  }
  return violations == 0 ? kExitOk : kExitMismatch;
}

int cmd_cycles(const RunConfig& cfg) {
  const auto h = load(cfg);
  const auto g = build_normal_graph(h, {cfg.allow_multigraph});
  const auto d = orient_edges(g);

  if (!cfg.lift.empty()) {
    std::vector<std::size_t> edges;
    for (const auto& tok : split(cfg.lift, ',')) {
      std::string t = tok;
      if (!t.empty() && (t[0] == 'e' || t[0] == 'E')) t = t.substr(1);
      std::size_t v = 0;
      try {
        v = std::stoul(t);
      } catch (const std::exception&) {
        throw ValidationError("bad edge label '" + tok + "'");
      }
      if (v == 0 || v > g.num_edges()) throw ValidationError("edge label '" + tok + "' out of range");
      edges.push_back(v - 1);
    }
    const CycleWord walk = cycle_from_edges(d, edges);
    const CycleLift lift = lift_cycle(g, d, walk);
    const LiftAudit audit = audit_lift(g, d, walk, lift);
    if (json_out(cfg)) {
      json steps = json::array();
      for (const auto& st : lift.cycle)
        steps.push_back({{"edge", st.edge + 1}, {"copy", st.copy + 1},
                         {"from", {st.from_vertex + 1, st.from_sheet + 1}},
                         {"to", {st.to_vertex + 1, st.to_sheet + 1}}});
      std::cout << json{{"M", lift.spec.degree}, {"spec", json_io::to_json(lift.spec)}, {"cycle", steps},
                        {"audit_passed", audit.ok()}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "cover degree: " << lift.spec.degree << '\n';
      std::cout << "spec: " << json_io::to_json(lift.spec).dump() << '\n';
      std::cout << "lifted cycle:";
      for (const auto& st : lift.cycle) std::cout << " e" << st.edge + 1 << "#" << st.copy + 1;
      std::cout << '\n';
      std::cout << "audit: " << (audit.ok() ? "pass" : "FAIL") << '\n';
    }
    return audit.ok() ? kExitOk : kExitMismatch;
  }

  const std::size_t max_len = cfg.max_length >= 0 ? static_cast<std::size_t>(cfg.max_length) : 2 * g.num_edges();
  const auto simple = enumerate_simple_cycles(g);
  const auto classes = enumerate_btt_classes(d, max_len);
  if (json_out(cfg)) {
    json sc = json::array();
    for (const auto& c : simple) {
      json e = json::array();
      for (auto x : c) e.push_back(x + 1);
      sc.push_back(e);
    }
    std::cout << json{{"max_length", max_len}, {"simple_cycles", sc}, {"classes", json_io::to_json(classes)}}.dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << "simple cycles: " << simple.size() << '\n';
  for (const auto& c : simple) {
    std::cout << " ";
    for (auto x : c) std::cout << " e" << x + 1;
    std::cout << '\n';
  }
  std::cout << "backtrackless tailless primitive classes (length <= " << max_len << "): " << classes.size() << '\n';
  for (const auto& c : classes) {
    std::cout << "  [" << c.length() << "]";
    for (auto k : c.representative.steps) std::cout << " f" << k + 1;
    std::cout << "  " << c.monomial.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto h = load(cfg);
  const std::uint32_t d = cfg.max_degree >= 0 ? static_cast<std::uint32_t>(cfg.max_degree)
                                              : static_cast<std::uint32_t>(2 * h.num_cols());
  const auto r = verify_equivalence(h, d, {cfg.allow_multigraph});
  auto list = [](const std::vector<ExponentVector>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(json_io::to_json(e));
    return a;
  };
  if (json_out(cfg)) {
    std::cout << json{{"degree_bound", d},
                      {"zeta_support_count", r.zeta_support_count},
                      {"lattice_count", r.newton.lattice_count},
                      {"oracle_support_count", r.oracle_support_count},
                      {"missing_from_support", list(r.newton.missing_from_support)},
                      {"outside_cone", list(r.newton.outside_cone)},
                      {"oracle_mismatches", list(r.oracle_mismatches)},
                      {"passed", r.passed()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "degree bound: " << d << '\n';
    std::cout << "zeta support: " << r.zeta_support_count << '\n';
    std::cout << "cone lattice points (even parity): " << r.newton.lattice_count << '\n';
    std::cout << "cycle-oracle support: " << r.oracle_support_count << '\n';
    for (const auto& e : r.newton.missing_from_support) std::cout << "  missing from support: " << e.to_string() << '\n';
    for (const auto& e : r.newton.outside_cone) std::cout << "  outside cone: " << e.to_string() << '\n';
    for (const auto& e : r.oracle_mismatches) std::cout << "  oracle mismatch: " << e.to_string() << '\n';
    std::cout << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return r.passed() ? kExitOk : kExitMismatch;
}

int cmd_stats(const RunConfig& cfg) {
  const auto h = load(cfg);
  const std::size_t rank = gf2_rank(h);
  json out = {{"checks", h.num_rows()}, {"bits", h.num_cols()}, {"ones", h.num_ones()},
              {"rank", rank},          {"dimension", h.num_cols() - rank}, {"cycle_code", is_cycle_code(h)}};
  if (is_cycle_code(h)) {
    const auto g = build_normal_graph(h, {cfg.allow_multigraph});
    const auto s = graph_stats(g);
    out["normal_graph"] = {{"vertices", g.num_vertices},
                           {"edges", g.num_edges()},
                           {"components", s.num_components},
                           {"girth", s.girth ? json(*s.girth) : json("infinity")},
                           {"cycle_rank", s.cycle_rank},
                           {"euler_characteristic", s.euler_characteristic},
                           {"multigraph", g.multigraph}};
  }
  if (json_out(cfg)) {
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "checks: " << h.num_rows() << "\nbits: " << h.num_cols() << "\nones: " << h.num_ones()
            << "\nrank: " << rank << "\ndimension: " << h.num_cols() - rank
            << "\ncycle code: " << (is_cycle_code(h) ? "yes" : "no") << '\n';
  if (out.contains("normal_graph")) {
    const auto& n = out["normal_graph"];
    std::cout << "normal graph: " << n["vertices"] << " vertices, " << n["edges"] << " edges, " << n["components"]
              << " component(s)\n";
    std::cout << "girth: " << (n["girth"].is_string() ? n["girth"].get<std::string>() : n["girth"].dump()) << '\n';
    std::cout << "cycle rank: " << n["cycle_rank"] << "\neuler characteristic: " << n["euler_characteristic"] << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge zeta functions, graph covers and the fundamental cone of binary cycle codes"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("ZETACONE_FORMAT")) cfg.output = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "Parity-check matrix file")->required();
    sub->add_option("--input-format", cfg.input_format, "dense or alist (default: by extension)")
        ->check(CLI::IsMember({"dense", "alist"}));
    sub->add_option("--format", cfg.output, "Output format (default: $ZETACONE_FORMAT or text)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-multigraph", cfg.allow_multigraph, "Accept parallel edges in the normal graph");
  };

  auto* zeta = app.add_subcommand("zeta", "Zeta inverse det(I-UM), its series and support");
  common(zeta);
  zeta->add_option("--max-degree", cfg.max_degree, "Series total-degree bound (default 2n)")->check(CLI::NonNegativeNumber);
  zeta->add_option("--max-exponent", cfg.max_exponent, "Keep only terms with every exponent <= E")
      ->check(CLI::Range(0, 65535));

  auto* cone = app.add_subcommand("cone", "Fundamental cone: system, membership, lattice points");
  common(cone);
  cone->add_option("--check", cfg.check, "Comma-separated vector (integers or p/q)");
  cone->add_option("--enumerate", cfg.enumerate, "List even-parity cone lattice points of degree <= D")
      ->check(CLI::NonNegativeNumber);
  cone->add_option("--max-exponent", cfg.max_exponent, "Limit --enumerate to the box p_i <= E")
      ->check(CLI::Range(0, 65535));

  auto* covers = app.add_subcommand("covers", "Graph covers, cover codewords and pseudo-codewords");
  common(covers);
  covers->add_option("--degree,-M", cfg.degree, "Cover degree for random covers");
  covers->add_option("--spec", cfg.spec_path, "Cover spec JSON (overrides --degree/--samples)");
  covers->add_option("--seed", cfg.seed, "Base seed");
  covers->add_option("--samples", cfg.samples, "Number of random covers");
  covers->add_option("--codewords", cfg.codewords, "'enumerate' or a sample count per cover");
  covers->add_flag("--summary", cfg.summary, "Only print totals");

  auto* cycles = app.add_subcommand("cycles", "Simple cycles, cycle classes, and cycle lifting");
  common(cycles);
  cycles->add_option("--max-length", cfg.max_length, "Class length bound (default 2n)")->check(CLI::NonNegativeNumber);
  cycles->add_option("--lift", cfg.lift, "Lift an edge sequence such as e1,e2,e4,e5,e6,e7,e4,e3");

  auto* verify = app.add_subcommand("verify", "Zeta support = cone lattice points = cycle oracle");
  common(verify);
  verify->add_option("--max-degree", cfg.max_degree, "Degree bound (default 2n)")->check(CLI::NonNegativeNumber);

  auto* stats = app.add_subcommand("stats", "Matrix and normal-graph statistics");
  common(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (cfg.output != "text" && cfg.output != "json") {
    std::cerr << "error: output format must be text or json\n";
    return kExitInput;
  }

  try {
    if (zeta->parsed()) return cmd_zeta(cfg);
    if (cone->parsed()) return cmd_cone(cfg);
    if (covers->parsed()) return cmd_covers(cfg);
    if (cycles->parsed()) return cmd_cycles(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
