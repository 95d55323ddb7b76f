// Command-line driver: JSON results on stdout, a short summary on stderr.
// Exit codes: 0 ok, 1 property check failed, 2 input error, 3 budget.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "khof/braid.hpp"
#include "khof/detection.hpp"
#include "khof/gf2.hpp"
#include "khof/io.hpp"
#include "khof/jones.hpp"
#include "khof/khovanov.hpp"
#include "khof/raag.hpp"

using namespace khof;

namespace {

struct Config {
  int budget = 16;
  int threads = 1;
  bool csv = false;
  bool simplify = false;
  std::string kernel;
};

struct Report {
  json doc;
  bool ok = true;
  std::ostringstream summary;

  void check(const std::string& name, bool pass) {
    doc["checks"][name] = pass;
    ok = ok && pass;
    summary << name << ": " << (pass ? "pass" : "FAIL") << '\n';
  }
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

OrientedPDDiagram load(const std::string& path, Report& rep) {
  const std::string text = slurp(path);
  rep.doc["input"] = {{"file", path}, {"digest", fnv1a(text)}};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  OrientedPDDiagram d = diagram_from_json(j);
  ensure_valid(d);
  return d;
}

KhOptions kh_options(const Config& cfg) { return {cfg.budget, cfg.threads}; }

json ranks_out(const BigradedRanks& b, const Config& cfg) {
  json j = ranks_to_json(b);
  j["total_rank"] = b.total_rank();
  if (cfg.csv) j["csv"] = ranks_to_csv(b);
  return j;
}

Basepoint parse_basepoint(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "basepoint must be component:arc, got '" + s + "'");
  }
}

// "1-2,2-3" with 1-based vertices; "1-2:-1" gives a negative clasp.
ForestGraph parse_edges(const std::string& text, int vertices) {
  ForestGraph g;
  std::stringstream ss(text);
  std::string tok;
  int maxv = 0;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int a = 0, b = 0, sign = 1;
    char dash = 0, colon = 0;
    std::istringstream ts(tok);
    ts >> a >> dash >> b;
    if (!ts || dash != '-' || a < 1 || b < 1)
      throw Error(ErrorKind::ParseError, "bad edge '" + tok + "'");
    if (ts >> colon) {
      if (colon != ':' || !(ts >> sign) || (sign != 1 && sign != -1))
        throw Error(ErrorKind::ParseError, "bad edge sign in '" + tok + "'");
    }
    g.edges.push_back({a - 1, b - 1, sign});
    maxv = std::max({maxv, a, b});
  }
  g.vertex_count = std::max(vertices, maxv);
  if (g.vertex_count == 0) g.vertex_count = 1;
  return g;
}

BraidWord parse_braid(int strands, const std::string& text) {
  BraidWord b{strands, {}};
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      b.letters.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad braid letter '" + tok + "'");
    }
  }
  b.check();
  return b;
}

void cmd_invariants(const std::string& file, const std::string& coeff_name, const std::string& bp_text,
                    bool want_jones, bool want_kh, bool want_khr, bool want_internal, const Config& cfg,
                    Report& rep) {
  OrientedPDDiagram d = load(file, rep);
  if (cfg.simplify) d = simplify(d);
  if (!want_jones && !want_kh && !want_khr && !want_internal) want_jones = want_kh = true;
  const Coeff coeff = coeff_name == "z" ? Coeff::Z : Coeff::F2;
  json& res = rep.doc["results"];
  res["crossings"] = d.crossing_count();
  res["components"] = d.component_count();
  if (want_jones) {
    const LaurentPoly v = jones(d).as_t();
    res["jones"] = to_string(v);
    rep.summary << "jones: " << to_string(v) << '\n';
  }
  if (want_kh || want_internal) {
    const BigradedRanks b = kh(d, coeff, kh_options(cfg));
    if (want_kh) res["kh"] = ranks_out(b, cfg);
    if (want_internal) res["kh_internal"] = internal_to_json(internal_ranks(b));
    rep.summary << "Kh(" << to_string(coeff) << ") total rank " << b.total_rank() << '\n';
  }
  if (want_khr) {
    Basepoint p{0, 0};
    if (!bp_text.empty()) p = parse_basepoint(bp_text);
    else if (!d.basepoints().empty()) p = {d.basepoints().begin()->first, d.basepoints().begin()->second};
    else p = {0, d.components().at(0).at(0)};
    const BigradedRanks b = khr(d, p, coeff, kh_options(cfg));
    res["khr"] = ranks_out(b, cfg);
    res["basepoint"] = {p.component, p.arc};
    if (want_internal) res["khr_internal"] = internal_to_json(internal_ranks(b));
    rep.summary << "Khr(" << to_string(coeff) << ") total rank " << b.total_rank() << '\n';
  }
}

void family_common(const OrientedPDDiagram& built, bool skip_kh, const Config& cfg, Report& rep) {
  json& res = rep.doc["results"];
  const OrientedPDDiagram d = simplify(built);
  res["crossings"] = built.crossing_count();
  res["crossings_simplified"] = d.crossing_count();
  res["components"] = d.component_count();
  res["jones"] = to_string(jones(d).as_t());
  rep.summary << "jones: " << res["jones"].get<std::string>() << '\n';
  if (!skip_kh) {
    const BigradedRanks b = kh(d, Coeff::F2, kh_options(cfg));
    res["kh"] = ranks_out(b, cfg);
    rep.summary << "Kh(F2) total rank " << b.total_rank() << '\n';
  }
  if (cfg.csv) res["diagram"] = diagram_to_json(built);
}

void cmd_luv(int u, int v, bool skip_kh, const Config& cfg, Report& rep) {
  rep.doc["input"] = {{"family", "luv"}, {"u", u}, {"v", v}};
  const OrientedPDDiagram d = luv_diagram(u, v);
  family_common(d, skip_kh, cfg, rep);
  const GaussianInt got = eval_gaussian(jones(d)), want = vuv_closed_form(u, v);
  rep.doc["results"]["jones_at_minus_one"] = to_string(got);
  rep.doc["results"]["closed_form"] = to_string(want);
  rep.check("closed_form", got == want);
}

void cmd_forest(const std::string& edges, int vertices, bool skip_kh, const Config& cfg, Report& rep) {
  rep.doc["input"] = {{"family", "forest"}, {"edges", edges}, {"vertices", vertices}};
  const ForestGraph g = parse_edges(edges, vertices);
  const OrientedPDDiagram d = forest_link(g);
  family_common(d, skip_kh, cfg, rep);
  if (!skip_kh) {
    bool default_signs = true;
    for (const auto& e : g.edges) default_signs = default_signs && e.sign == 1;
    const BigradedRanks b = kh(simplify(d), Coeff::F2, kh_options(cfg));
    rep.check("rank_2^n", b.total_rank() == (1LL << g.vertex_count));
    if (default_signs) {
      const BiLaurent want = forest_poincare(g);
      rep.doc["results"]["poincare"] = to_string(b.poincare(), 't', 'q');
      rep.doc["results"]["formula"] = to_string(want, 't', 'q');
      rep.check("forest_formula", b.poincare() == want);
    }
  }
}

void cmd_detect(const std::string& file, const Config& cfg, Report& rep) {
  OrientedPDDiagram d = load(file, rep);
  if (cfg.simplify) d = simplify(d);
  const Classification c = classify(d, kh_options(cfg));
  rep.doc["results"] = classification_to_json(c);
  rep.summary << to_string(c.kind) << " (rank " << c.rank << ", 2^n = " << c.bound << ")\n";
}

void cmd_raag(int m, const std::string& op, const std::vector<std::string>& words, bool minus, Report& rep) {
  rep.doc["input"] = {{"m", m}, {"op", op}, {"words", words}};
  const PathRaag G(m);
  auto word = [&](std::size_t i) {
    if (i >= words.size()) throw Error(ErrorKind::ParseError, op + " needs " + std::to_string(i + 1) + " word(s)");
    RaagWord w = parse_word(words[i]);
    G.check(w);
    return w;
  };
  json& res = rep.doc["results"];
  if (op == "reduce") {
    const RaagWord w = word(0);
    const NormalForm c = G.canonical(w);
    res = {{"reduced", G.is_reduced(w)}, {"canonical", to_string(c)}, {"length", c.size()}};
    rep.summary << (c.empty() ? "1" : to_string(c)) << '\n';
  } else if (op == "equal") {
    const bool eq = G.equal(word(0), word(1));
    res = {{"equal", eq}};
    rep.summary << (eq ? "true" : "false") << '\n';
  } else if (op == "solve") {
    const RaagWord u = word(0), v = word(1);
    const ConjVariant var = minus ? ConjVariant::Minus : ConjVariant::Plus;
    const bool sol = G.is_conj_solution(u, v, var);
    res = {{"variant", minus ? "minus" : "plus"}, {"solution", sol}};
    if (sol) {
      const ConjDecomposition dc = G.conj_solution_decompose(u, v, var);
      res["k"] = dc.k;
      res["u_prime"] = to_string(dc.u_prime);
      res["v_prime"] = to_string(dc.v_prime);
      rep.summary << "solution with k = " << dc.k << '\n';
    } else {
      rep.summary << "not a solution\n";
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown raag operation '" + op + "' (reduce, equal, solve)");
  }
}

void cmd_alexander(int strands, const std::string& text, Report& rep) {
  rep.doc["input"] = {{"strands", strands}, {"braid", text}};
  const BraidWord b = parse_braid(strands, text);
  const BiLaurent delta = alexander_axis(b);
  const TermTest tt = delta_term_test(delta);
  rep.doc["results"] = {{"alexander", to_string(delta)},
                        {"delta_term_test", {{"count", tt.count}, {"exceeds_four", tt.exceeds_four}}}};
  rep.summary << to_string(delta) << '\n';
}

int exit_code_for(ErrorKind k) {
  return k == ErrorKind::BudgetExceeded || k == ErrorKind::CrossingBudgetExceeded ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology, Jones and Alexander polynomials, forests of unknots, path RAAGs"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--budget", cfg.budget, "Crossing budget for Khovanov homology")->envname("KHOF_BUDGET");
  app.add_option("--threads", cfg.threads, "Worker threads")->envname("KHOF_THREADS");
  app.add_flag("--csv", cfg.csv, "Include CSV rank tables");
  app.add_flag("--simplify", cfg.simplify, "Apply Reidemeister I/II reductions to input diagrams");
  app.add_option("--kernel", cfg.kernel, "GF(2) row kernel")->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  std::string file, coeff = "f2", bp;
  bool f_jones = false, f_kh = false, f_khr = false, f_internal = false;
  auto* inv = app.add_subcommand("invariants", "Invariants of a JSON diagram");
  inv->add_option("diagram", file, "Diagram file")->required();
  inv->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"f2", "z"}));
  inv->add_option("--basepoint", bp, "component:arc for reduced homology");
  inv->add_flag("--jones", f_jones);
  inv->add_flag("--kh", f_kh);
  inv->add_flag("--khr", f_khr);
  inv->add_flag("--internal", f_internal, "Ranks by internal grading h - q");

  auto* fam = app.add_subcommand("family", "Generated link families");
  fam->require_subcommand(1);
  bool skip_kh = false;
  fam->add_flag("--skip-kh", skip_kh, "Jones polynomial and formula checks only");
  int u = 0, v = 0;
  auto* luv = fam->add_subcommand("luv", "The u-component cycle L(u,v)");
  luv->add_option("u", u)->required();
  luv->add_option("v", v)->required();
  std::string edges;
  int vertices = 0;
  auto* forest = fam->add_subcommand("forest", "Forest of unknots from a 1-based edge list, e.g. 1-2,2-3");
  luv->fallthrough();
  forest->fallthrough();
  forest->add_option("edges", edges, "Edge list; a:b:-1 style signs as 1-2:-1")->required();
  forest->add_option("--vertices", vertices, "Vertex count when isolated vertices are wanted");

  auto* det = app.add_subcommand("detect", "Classify a diagram from Z/2 rank and linking numbers");
  det->add_option("diagram", file)->required();

  int m = 0;
  std::string op;
  std::vector<std::string> words;
  bool minus = false;
  auto* raag = app.add_subcommand("raag", "Path RAAG word problem");
  raag->add_option("m", m)->required();
  raag->add_option("op", op, "reduce | equal | solve")->required();
  raag->add_option("words", words, "Words such as g1,g3^-1");
  raag->add_flag("--minus", minus, "solve: use g_1 g_m^-1 on the right-hand side");

  int strands = 0;
  std::string braid;
  auto* alex = app.add_subcommand("alexander", "Two-variable Alexander polynomial of a braid closure with its axis");
  alex->add_option("strands", strands)->required();
  alex->add_option("braid", braid, "Letters such as \"1,-2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!cfg.kernel.empty())
      gf2::set_kernel(cfg.kernel == "avx2" ? gf2::Kernel::Avx2
                      : cfg.kernel == "neon" ? gf2::Kernel::Neon
                                             : gf2::Kernel::Scalar);
    if (inv->parsed()) {
      rep.doc["command"] = "invariants";
      cmd_invariants(file, coeff, bp, f_jones, f_kh, f_khr, f_internal, cfg, rep);
    } else if (luv->parsed()) {
      rep.doc["command"] = "family luv";
      cmd_luv(u, v, skip_kh, cfg, rep);
    } else if (forest->parsed()) {
      rep.doc["command"] = "family forest";
      cmd_forest(edges, vertices, skip_kh, cfg, rep);
    } else if (det->parsed()) {
      rep.doc["command"] = "detect";
      cmd_detect(file, cfg, rep);
    } else if (raag->parsed()) {
      rep.doc["command"] = "raag";
      cmd_raag(m, op, words, minus, rep);
    } else if (alex->parsed()) {
      rep.doc["command"] = "alexander";
      cmd_alexander(strands, braid, rep);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.doc["elapsed_ms"] = std::round(ms * 1000) / 1000;
  rep.doc["kernel"] = gf2::kernel_name(gf2::active_kernel());
  std::cout << rep.doc.dump(2) << '\n';
  std::cerr << rep.summary.str();
  return rep.ok ? 0 : 1;
}
