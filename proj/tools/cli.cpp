#include "cli.hpp"

#include "fkext/canonical.hpp"
#include "fkext/error.hpp"
#include "fkext/graph.hpp"
#include "fkext/matching.hpp"
#include "fkext/polynomial.hpp"
#include "fkext/spectral.hpp"
#include "fkext/theorem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fkext::cli {

using Json = nlohmann::ordered_json;

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// Definitional oracle enumerates every k-matching; beyond this order it is skipped.
constexpr int kDefinitionalMaxOrder = 14;

Json num(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

struct Config {
  std::string command;
  std::string k_text = "1";
  int n = 0;
  int s = 0;
  int delta = 0;
  std::string theorem;
  std::string lemma;
  std::string family;
  std::string source;
  std::string format = "text";
  std::string output;
  double tol = kDefaultTolerance;
  int jobs = 1;
  bool deterministic = false;
  bool connected = false;
  int max_missing = -1;
  int max_edges = -1;
};

struct Outcome {
  Json doc;
  std::string text;
  int code = kOk;
};

int default_jobs() {
  if (const char* env = std::getenv("FKEXT_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw DomainError("invalid -k value '" + text + "'");
  }
}

int parse_k(const std::string& text) {
  const auto [lo, hi] = parse_k_range(text);
  if (lo != hi) throw DomainError("this command takes a single k");
  if (lo < 1) throw DomainError("k must be positive");
  return lo;
}

Json vertex_list(VertexSet s) {
  Json a = Json::array();
  for (int v : s.members()) a.push_back(v);
  return a;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["answer"] = v.answer;
  j["reason"] = std::string(reason_name(v.reason));
  if (v.violating_set) {
    j["violating_set"] = vertex_list(*v.violating_set);
  }
  if (v.failing_matching) {
    Json m = Json::array();
    for (auto [a, b] : v.failing_matching->edges) m.push_back({a, b});
    j["failing_matching"] = m;
  }
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.answer ? "extendable" : "not extendable") << " (" << reason_name(v.reason) << ")";
  if (v.violating_set) {
    os << " S = {";
    const auto members = v.violating_set->members();
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? ", " : "") << members[i];
    os << "}";
  }
  if (v.failing_matching) {
    os << " M =";
    for (auto [a, b] : v.failing_matching->edges) os << " " << a << "-" << b;
  }
  return os.str();
}

Json config_json(const Config& c) {
  Json j;
  j["k"] = c.k_text;
  if (!c.theorem.empty()) j["theorem"] = c.theorem;
  if (!c.lemma.empty()) j["lemma"] = c.lemma;
  if (!c.family.empty()) j["family"] = c.family;
  if (c.n) j["n"] = c.n;
  if (c.s) j["s"] = c.s;
  if (c.delta) j["delta"] = c.delta;
  if (!c.source.empty()) j["source"] = c.source;
  j["tol"] = c.tol;
  j["deterministic"] = c.deterministic;
  return j;
}

Json make_doc(const Config& c) {
  Json doc;
  doc["command"] = c.command;
  doc["config"] = config_json(c);
  doc["results"] = Json::array();
  doc["summary"] = {{"scanned", 0}, {"confirmed", 0}, {"equality_cases", 0}, {"counterexamples", 0}};
  return doc;
}

std::vector<std::pair<std::size_t, std::string>> load_corpus(const std::string& path, std::istream& in) {
  if (path == "-") return read_corpus(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open corpus '" + path + "'");
  return read_corpus(file);
}

Json spectral_json(const SpectralReport& r) {
  Json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["min_degree"] = r.min_degree;
  j["connected"] = r.connected;
  j["rho"] = num(r.rho);
  j["q"] = num(r.q);
  j["wiener"] = r.wiener ? Json(*r.wiener) : Json(nullptr);
  j["mu"] = r.mu ? num(*r.mu) : Json(nullptr);
  return j;
}

std::string spectral_text(const SpectralReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", e = " << r.e << ", delta = " << r.min_degree
     << ", connected = " << (r.connected ? "yes" : "no") << "\n";
  os << "rho = " << format_number(r.rho) << ", q = " << format_number(r.q);
  if (r.mu) os << ", W = " << *r.wiener << ", mu = " << format_number(*r.mu);
  os << "\n";
  return os.str();
}

// Commands -----------------------------------------------------------------------------

Outcome cmd_check(const Config& c) {
  const int k = parse_k(c.k_text);
  const Graph g = parse_graph6(c.source);
  Outcome o{make_doc(c), {}, kOk};
  const SpectralReport rep = spectral_report(g, c.tol);
  const Verdict lemma = is_fext_lemma(g, k);

  Json r;
  r["graph6"] = c.source;
  r["spectral"] = spectral_json(rep);
  r["lemma"] = verdict_json(lemma);
  std::optional<Verdict> def;
  if (g.order() <= kDefinitionalMaxOrder) {
    def = is_fext_definitional(g, k, {.jobs = c.jobs, .deterministic = c.deterministic || c.jobs <= 1});
    r["definitional"] = verdict_json(*def);
  } else {
    r["definitional"] = nullptr;
  }
  const char* status = lemma.reason == VerdictReason::out_of_domain ? "out_of_domain"
                       : lemma.answer                               ? "extendable"
                                                                    : "not_extendable";
  r["status"] = status;
  o.doc["results"].push_back(r);
  o.doc["summary"]["scanned"] = 1;
  o.doc["summary"]["confirmed"] = lemma.answer ? 1 : 0;

  std::ostringstream os;
  os << spectral_text(rep);
  os << "status: " << status << "\n";
  os << "lemma oracle: " << verdict_text(lemma) << "\n";
  if (def) {
    os << "definitional oracle: " << verdict_text(*def) << "\n";
  } else {
    os << "definitional oracle: skipped (n > " << kDefinitionalMaxOrder << ")\n";
  }
  o.text = os.str();
  if (def && def->answer != lemma.answer) throw Error("oracles disagree on " + c.source);
  o.code = lemma.answer ? kOk : kNegative;
  return o;
}

Outcome cmd_extremal(const Config& c) {
  const int k = parse_k(c.k_text);
  const ExtremalParams p(c.n, k, c.s);
  Outcome o{make_doc(c), {}, kOk};
  const double q = largest_eigenvalue(extremal_matrix(p, MatrixKind::signless_laplacian), c.tol);
  const double mu = largest_eigenvalue(extremal_matrix(p, MatrixKind::distance), c.tol);

  Json polys;
  const FamilyParams fp{p.n(), k, p.s(), 0};
  if (p.s() == 2 * k && in_region(Family::f2, fp)) polys["f2"] = to_string(closed_form(Family::f2, fp));
  if (in_region(Family::f_pi_1, fp)) polys["f_pi_1"] = to_string(closed_form(Family::f_pi_1, fp));
  if (in_region(Family::f_pi_prime_1, fp)) polys["f_pi_prime_1"] = to_string(closed_form(Family::f_pi_prime_1, fp));
  if (in_region(Family::phi_b1, fp)) polys["phi_B1"] = to_string(closed_form(Family::phi_b1, fp));

  Json r;
  r["n"] = p.n();
  r["k"] = k;
  r["s"] = p.s();
  r["graph6"] = p.n() <= 62 ? Json(emit_graph6(extremal_graph(p))) : Json(nullptr);
  r["e"] = p.edge_count();
  r["q"] = num(q);
  r["wiener"] = extremal_wiener_index(p);
  r["mu"] = num(mu);
  r["polynomials"] = polys;
  o.doc["results"].push_back(r);
  o.doc["summary"]["scanned"] = 1;

  std::ostringstream os;
  if (p.n() <= 62) os << r["graph6"].get<std::string>() << "\n";
  os << "e = " << p.edge_count() << "\nq = " << format_number(q) << "\nmu = " << format_number(mu) << "\n";
  for (const auto& [name, coeffs] : polys.items()) os << name << ": " << coeffs.get<std::string>() << "\n";
  o.text = os.str();
  return o;
}

Json check_json(const TheoremCheck& t) {
  Json j;
  j["classification"] = std::string(classification_name(t.classification));
  j["n"] = t.n;
  j["e"] = t.e;
  j["min_degree"] = t.min_degree;
  j["value"] = t.value ? num(*t.value) : Json(nullptr);
  j["threshold"] = t.threshold ? num(*t.threshold) : Json(nullptr);
  if (!t.note.empty()) j["note"] = t.note;
  if (t.verdict) j["verdict"] = verdict_json(*t.verdict);
  if (t.spanning_subgraph) j["spanning_subgraph"] = *t.spanning_subgraph;
  return j;
}

Outcome cmd_sweep(const Config& c, std::istream& in) {
  const auto id = parse_theorem(c.theorem);
  if (!id) throw DomainError("unknown theorem '" + c.theorem + "'");
  const TheoremSpec spec{*id, parse_k(c.k_text)};
  const SweepReport rep = sweep(load_corpus(c.source, in), spec, {c.jobs, c.tol}, c.source);
  Outcome o{make_doc(c), {}, kOk};
  std::ostringstream os;
  for (const SweepEntry& e : rep.entries) {
    Json r;
    r["line"] = e.line;
    r["graph6"] = e.graph6;
    if (e.error) {
      r["error"] = *e.error;
      os << "line " << e.line << ": parse error: " << *e.error << "\n";
    } else {
      r.update(check_json(e.check));
      const Classification cls = e.check.classification;
      if (cls == Classification::equality_case || cls == Classification::counterexample) {
        os << classification_name(cls) << " line " << e.line << " " << e.graph6 << " n=" << e.check.n
           << " e=" << e.check.e << " delta=" << e.check.min_degree << " value=" << format_number(*e.check.value)
           << " threshold=" << format_number(*e.check.threshold) << " " << verdict_text(*e.check.verdict) << "\n";
      }
    }
    o.doc["results"].push_back(r);
  }
  const SweepSummary& s = rep.summary;
  o.doc["summary"] = {{"scanned", s.scanned},
                      {"confirmed", s.confirmed},
                      {"equality_cases", s.equality_cases},
                      {"counterexamples", s.counterexamples},
                      {"hypotheses_met", s.hypotheses_met},
                      {"bound_met", s.bound_met},
                      {"errors", s.errors},
                      {"spanning_failures", s.spanning_failures}};
  os << "theorem " << theorem_name(spec.id) << " k=" << spec.k << ": scanned " << s.scanned << ", hypotheses met "
     << s.hypotheses_met << ", bound met " << s.bound_met << ", confirmed " << s.confirmed << ", equality cases "
     << s.equality_cases << ", counterexamples " << s.counterexamples << ", errors " << s.errors << "\n";
  o.text = os.str();
  if (s.counterexamples > 0 || s.spanning_failures > 0) {
    o.code = kNegative;
  } else if (s.errors > 0) {
    o.code = kError;
  }
  return o;
}

Json grid_point_json(const GridPoint& p) {
  Json j;
  j["k"] = p.k;
  j["n"] = p.n;
  j["s"] = p.s;
  j["delta"] = p.delta;
  j["g1_full"] = num(p.g1_full);
  j["g1_root"] = num(p.g1_root);
  j["ref_full"] = num(p.ref_full);
  j["ref_root"] = num(p.ref_root);
  j["expect_equal"] = p.expect_equal;
  j["ok"] = p.ok;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

Outcome cmd_grid(const Config& c) {
  const auto lemma = parse_lemma(c.lemma);
  if (!lemma) throw DomainError("unknown lemma '" + c.lemma + "'");
  const auto [k_min, k_max] = parse_k_range(c.k_text);
  if (k_min < 1 || k_max < k_min) throw DomainError("invalid k range");
  GridBounds b;
  b.k_min = k_min;
  b.k_max = k_max;
  b.n_max = c.n > 0 ? c.n : b.n_max;
  b.delta_max = c.delta > 0 ? c.delta : b.delta_max;
  b.tol = c.tol;
  b.jobs = c.jobs;
  const GridReport rep = lemma_grid(*lemma, b);

  Outcome o{make_doc(c), {}, kOk};
  std::ostringstream os;
  std::size_t strict = 0, equal = 0;
  for (const GridPoint& p : rep.points) {
    o.doc["results"].push_back(grid_point_json(p));
    if (p.ok) ++(p.expect_equal ? equal : strict);
    if (!p.ok) {
      os << "VIOLATION k=" << p.k << " n=" << p.n << " s=" << p.s << " delta=" << p.delta
         << " G1=" << format_number(p.g1_full) << " ref=" << format_number(p.ref_full) << " " << p.note << "\n";
    }
  }
  Json probe = Json::array();
  for (const GridPoint& p : rep.probe) probe.push_back(grid_point_json(p));
  o.doc["probe"] = probe;
  o.doc["summary"] = {{"scanned", rep.points.size()},
                      {"confirmed", strict},
                      {"equality_cases", equal},
                      {"counterexamples", rep.violations},
                      {"max_root_discrepancy", num(rep.max_root_discrepancy)},
                      {"probe_points", rep.probe.size()},
                      {"probe_failures", rep.probe_failures}};
  os << "lemma " << lemma_name(*lemma) << ": " << rep.points.size() << " points, " << rep.violations
     << " violations, max root discrepancy " << format_number(rep.max_root_discrepancy);
  if (!rep.probe.empty()) os << "; probe " << rep.probe.size() << " points, " << rep.probe_failures << " failures";
  os << "\n";
  o.text = os.str();
  o.code = rep.violations > 0 ? kNegative : kOk;
  return o;
}

Json coeff_json(const Cubic& c) {
  Json a = Json::array();
  for (const Rational& x : c.coefficients()) a.push_back(to_string(x));
  return a;
}

Outcome cmd_polys(const Config& c) {
  const auto family = parse_family(c.family);
  if (!family) throw DomainError("unknown family '" + c.family + "'");
  const FamilyParams fp{c.n, parse_k(c.k_text), c.s, c.delta};
  const Cubic closed = closed_form(*family, fp);
  const Cubic direct = quotient_polynomial(*family, fp);
  const bool match = closed.coefficients() == direct.coefficients();
  Outcome o{make_doc(c), {}, kOk};
  Json r;
  r["family"] = std::string(family_name(*family));
  r["closed_form"] = coeff_json(closed);
  r["quotient"] = coeff_json(direct);
  r["match"] = match;
  r["largest_root"] = num(largest_real_root(closed, c.tol));
  o.doc["results"].push_back(r);
  o.doc["summary"]["scanned"] = 1;
  o.doc["summary"]["confirmed"] = match ? 1 : 0;
  o.doc["summary"]["counterexamples"] = match ? 0 : 1;
  o.text = to_string(closed) + "\n";
  if (!match) o.text += "quotient polynomial differs: " + to_string(direct) + "\n";
  o.code = match ? kOk : kNegative;
  return o;
}

Outcome cmd_report(const Config& c, std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> corpus;
  if (c.source == "-" || std::filesystem::is_regular_file(c.source)) {
    corpus = load_corpus(c.source, in);
  } else {
    corpus.emplace_back(1, c.source);
  }
  Outcome o{make_doc(c), {}, kOk};
  std::ostringstream os;
  for (const auto& [line, text] : corpus) {
    Json r;
    r["line"] = line;
    r["graph6"] = text;
    try {
      const SpectralReport rep = spectral_report(parse_graph6(text), c.tol);
      r.update(spectral_json(rep));
      os << text << ": " << spectral_text(rep);
    } catch (const Error& e) {
      r["error"] = e.what();
      os << "line " << line << ": " << e.what() << "\n";
      o.code = kError;
    }
    o.doc["results"].push_back(r);
  }
  o.doc["summary"]["scanned"] = corpus.size();
  o.text = os.str();
  return o;
}

Outcome cmd_enumerate(const Config& c) {
  std::vector<Graph> graphs;
  if (c.max_missing >= 0) {
    graphs = enumerate_dense_graphs(c.n, c.max_missing, c.connected);
  } else if (c.max_edges >= 0) {
    for (Graph& g : enumerate_sparse_graphs(c.n, c.max_edges)) {
      if (!c.connected || is_connected(g)) graphs.push_back(std::move(g));
    }
  } else {
    graphs = enumerate_graphs(c.n, c.connected);
  }
  Outcome o{make_doc(c), {}, kOk};
  std::ostringstream os;
  for (const Graph& g : graphs) {
    const std::string line = emit_graph6(g);
    o.doc["results"].push_back({{"graph6", line}});
    os << line << "\n";
  }
  o.doc["summary"]["scanned"] = graphs.size();
  o.text = os.str();
  return o;
}

// Rendering ------------------------------------------------------------------------------

void flatten(const Json& j, const std::string& prefix, Json& row) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, row);
    } else {
      row[name] = value;
    }
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return s;
}

std::string render_csv(const Json& results) {
  std::vector<Json> rows;
  std::vector<std::string> columns;
  for (const Json& r : results) {
    Json row = Json::object();
    flatten(r, "", row);
    for (const auto& [key, value] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const Json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(columns[i])) os << csv_cell(row[columns[i]]);
    }
    os << "\n";
  }
  return os.str();
}

void add_common(CLI::App* sub, Config& c, bool with_k = true) {
  if (with_k) sub->add_option("-k", c.k_text, "k (grid accepts a range a..b)");
  sub->add_option("--tol", c.tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "worker threads (default $FKEXT_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output,-o", c.output, "write the report to a file instead of stdout");
  sub->add_flag("--deterministic", c.deterministic, "reproducible witnesses regardless of --jobs");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  c.jobs = default_jobs();
  CLI::App app{"Fractional k-extendability verification toolkit", "fkext"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "inspect one graph: spectra and both oracle verdicts");
  check->add_option("graph6", c.source, "graph6 string")->required();
  add_common(check, c);

  auto* extremal = app.add_subcommand("extremal", "emit K_s v (K_{n1} u (s-2k+1)K_1) with its invariants");
  extremal->add_option("-n", c.n)->required();
  extremal->add_option("-s", c.s)->required();
  add_common(extremal, c);

  auto* sweep_cmd = app.add_subcommand("sweep", "check a theorem on every graph of a graph6 corpus");
  sweep_cmd->add_option("--theorem", c.theorem, "edge_1, edge_2, q_1, q_2 or mu")->required();
  sweep_cmd->add_option("corpus", c.source, "graph6 file, '-' for stdin")->required();
  add_common(sweep_cmd, c);

  auto* grid = app.add_subcommand("grid", "verify a comparison lemma over a parameter grid");
  grid->add_option("--lemma", c.lemma, "q1q2, q1q3 or mu_compare")->required();
  grid->add_option("-n", c.n, "largest order");
  grid->add_option("--delta", c.delta, "largest minimum degree");
  add_common(grid, c);

  auto* polys = app.add_subcommand("polys", "closed-form characteristic polynomial of a quotient matrix");
  polys->add_option("family", c.family, "f2, f_pi_1, f_pi_prime_1, f3_q, phi_B1, phi_B3_case1, phi_B3_case2")
      ->required();
  polys->add_option("-n", c.n);
  polys->add_option("-s", c.s);
  polys->add_option("--delta", c.delta);
  add_common(polys, c);

  auto* report = app.add_subcommand("report", "spectral report for a graph6 string or corpus");
  report->add_option("source", c.source, "graph6 string, corpus file or '-'")->required();
  add_common(report, c, false);

  auto* enumerate = app.add_subcommand("enumerate", "graphs of order n up to isomorphism, as graph6");
  enumerate->add_option("-n", c.n)->required()->check(CLI::Range(1, 12));
  enumerate->add_flag("--connected", c.connected);
  enumerate->add_option("--max-missing", c.max_missing, "only graphs missing at most this many edges");
  enumerate->add_option("--max-edges", c.max_edges, "only graphs with at most this many edges");
  add_common(enumerate, c, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    Outcome o;
    if (*check) {
      c.command = "check";
      o = cmd_check(c);
    } else if (*extremal) {
      c.command = "extremal";
      o = cmd_extremal(c);
    } else if (*sweep_cmd) {
      c.command = "sweep";
      o = cmd_sweep(c, in);
    } else if (*grid) {
      c.command = "grid";
      o = cmd_grid(c);
    } else if (*polys) {
      c.command = "polys";
      o = cmd_polys(c);
    } else if (*report) {
      c.command = "report";
      o = cmd_report(c, in);
    } else {
      c.command = "enumerate";
      o = cmd_enumerate(c);
    }
    o.doc["command"] = c.command;
    o.doc["config"] = config_json(c);

    std::string body;
    if (c.format == "json") {
      body = o.doc.dump(2) + "\n";
    } else if (c.format == "csv") {
      body = render_csv(o.doc["results"]);
    } else {
      body = o.text;
    }
    if (c.output.empty() || c.output == "-") {
      out << body;
    } else {
      std::ofstream file(c.output);
      if (!file) throw Error("cannot write '" + c.output + "'");
      file << body;
    }
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace fkext::cli
