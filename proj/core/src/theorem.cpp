#include "fkext/theorem.hpp"

#include "fkext/error.hpp"
#include "fkext/parallel.hpp"
#include "fkext/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace fkext {

namespace {

std::string normalise(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == '-') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

double relative_margin(double tol, double value) { return 10.0 * tol * std::max(1.0, std::abs(value)); }

double spectral_radius(const Graph& g, MatrixKind kind, double tol) {
  return largest_eigenvalue(build_matrix(g, kind), tol);
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::edge_1: return "edge_1";
    case TheoremId::edge_2: return "edge_2";
    case TheoremId::q_1: return "q_1";
    case TheoremId::q_2: return "q_2";
    case TheoremId::mu: return "mu";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  const std::string key = normalise(name);
  if (key == "edge1" || key == "e1") return TheoremId::edge_1;
  if (key == "edge2" || key == "e2") return TheoremId::edge_2;
  if (key == "q1") return TheoremId::q_1;
  if (key == "q2") return TheoremId::q_2;
  if (key == "mu") return TheoremId::mu;
  return std::nullopt;
}

Quantity TheoremSpec::quantity() const {
  switch (id) {
    case TheoremId::edge_1:
    case TheoremId::edge_2: return Quantity::edges;
    case TheoremId::q_1:
    case TheoremId::q_2: return Quantity::signless;
    case TheoremId::mu: return Quantity::distance;
  }
  return Quantity::edges;
}

bool TheoremSpec::hypotheses(int n, int delta) const {
  switch (id) {
    case TheoremId::edge_1: return n >= 2 * k + 9;
    case TheoremId::edge_2: return n >= 6 * delta && delta >= 2 * k + 1;
    case TheoremId::q_1: return n >= 2 * k + 6;
    case TheoremId::q_2: return 2 * n >= 13 * delta && delta >= 2 * k + 1;
    case TheoremId::mu: return n >= 12 * delta - 2 * k + 1 && delta >= 2 * k + 1;
  }
  return false;
}

ExtremalParams TheoremSpec::extremal(int n, int delta) const {
  if (id == TheoremId::edge_1 || id == TheoremId::q_1) return ExtremalParams::sparse_join(n, k);
  return ExtremalParams::min_degree(n, k, delta);
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::hypotheses_not_met: return "hypotheses_not_met";
    case Classification::bound_not_met: return "bound_not_met";
    case Classification::confirmed_extendable: return "confirmed_extendable";
    case Classification::equality_case: return "equality_case";
    case Classification::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

double TheoremEvaluator::threshold(int n, int delta) {
  const bool keyed_by_delta = !(spec_.id == TheoremId::edge_1 || spec_.id == TheoremId::q_1);
  const std::pair<int, int> key{n, keyed_by_delta ? delta : 0};
  {
    std::lock_guard lock(guard_);
    if (auto it = thresholds_.find(key); it != thresholds_.end()) return it->second;
  }
  const ExtremalParams p = spec_.extremal(n, delta);
  double t = 0;
  switch (spec_.quantity()) {
    case Quantity::edges: t = static_cast<double>(p.edge_count()); break;
    case Quantity::signless: t = largest_eigenvalue(extremal_matrix(p, MatrixKind::signless_laplacian), tol_); break;
    case Quantity::distance: t = largest_eigenvalue(extremal_matrix(p, MatrixKind::distance), tol_); break;
  }
  std::lock_guard lock(guard_);
  thresholds_.emplace(key, t);
  return t;
}

double TheoremEvaluator::value(const Graph& g) const {
  switch (spec_.quantity()) {
    case Quantity::edges: return g.edge_count();
    case Quantity::signless: return spectral_radius(g, MatrixKind::signless_laplacian, tol_);
    case Quantity::distance: return spectral_radius(g, MatrixKind::distance, tol_);
  }
  return 0;
}

bool TheoremEvaluator::meets_bound(double value, double threshold) const {
  switch (spec_.quantity()) {
    case Quantity::edges: return value >= threshold;
    case Quantity::signless: return value >= threshold - relative_margin(tol_, threshold);
    case Quantity::distance: return value <= threshold + relative_margin(tol_, threshold);
  }
  return false;
}

TheoremCheck TheoremEvaluator::check(const Graph& g) {
  TheoremCheck out;
  const GraphStats st = graph_stats(g);
  out.n = st.n;
  out.e = st.e;
  out.min_degree = st.min_degree;
  if (!st.connected) {
    out.note = "disconnected";
    return out;
  }
  if (!spec_.hypotheses(st.n, st.min_degree)) {
    out.note = "order or minimum degree outside hypotheses";
    return out;
  }
  out.threshold = threshold(st.n, st.min_degree);
  out.value = value(g);
  if (!meets_bound(*out.value, *out.threshold)) {
    out.classification = Classification::bound_not_met;
    return out;
  }
  const Verdict v = is_fext_lemma(g, spec_.k);
  out.verdict = v;
  if (v.answer) {
    out.classification = Classification::confirmed_extendable;
    return out;
  }
  if (v.violating_set) out.spanning_subgraph = spanning_embedding(g, spec_.k, *v.violating_set).has_value();
  if (matches_extremal(g, spec_.extremal(st.n, st.min_degree))) {
    out.classification = Classification::equality_case;
  } else {
    out.classification = Classification::counterexample;
    out.note = "non-extendable graph meeting the bound that is not the extremal graph";
  }
  return out;
}

TheoremCheck check_theorem(const Graph& g, const TheoremSpec& spec, double tol) {
  TheoremEvaluator ev(spec, tol);
  return ev.check(g);
}

std::vector<std::pair<std::size_t, std::string>> read_corpus(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::string_view view = line;
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty() || view.front() == '#') continue;
    out.emplace_back(number, std::string(view));
  }
  return out;
}

SweepReport sweep(const std::vector<std::pair<std::size_t, std::string>>& corpus, const TheoremSpec& spec,
                  const SweepOptions& options, std::string description) {
  SweepReport report;
  report.spec = spec;
  report.corpus = std::move(description);
  report.entries.resize(corpus.size());
  TheoremEvaluator ev(spec, options.tol);
  parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
    SweepEntry& entry = report.entries[i];
    entry.line = corpus[i].first;
    entry.graph6 = corpus[i].second;
    try {
      entry.check = ev.check(parse_graph6(entry.graph6));
    } catch (const Error& e) {
      entry.error = e.what();
    }
  });
  SweepSummary& sum = report.summary;
  for (const SweepEntry& entry : report.entries) {
    ++sum.scanned;
    if (entry.error) {
      ++sum.errors;
      continue;
    }
    const Classification c = entry.check.classification;
    if (c != Classification::hypotheses_not_met) ++sum.hypotheses_met;
    if (c == Classification::confirmed_extendable || c == Classification::equality_case ||
        c == Classification::counterexample) {
      ++sum.bound_met;
    }
    if (c == Classification::confirmed_extendable) ++sum.confirmed;
    if (c == Classification::equality_case) ++sum.equality_cases;
    if (c == Classification::counterexample) ++sum.counterexamples;
    if (entry.check.spanning_subgraph == false) ++sum.spanning_failures;
  }
  return report;
}

bool EdgeIdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

EdgeIdentityReport edge_count_identities(int k, int s, int n, int delta) {
  if (!(2 * k <= delta && delta <= s && n >= 2 * s - 2 * k + 1)) {
    throw DomainError("edge identities need 2k <= delta <= s and n >= 2s - 2k + 1");
  }
  EdgeIdentityReport r{k, s, n, delta, {}};
  const Rational K(k), S(s), N(n), D(delta);
  const Rational half(1, 2);
  const auto count = [](const ExtremalParams& p) { return Rational(extremal_graph(p).edge_count()); };
  const Rational e1 = count(ExtremalParams(n, k, s));
  const Rational e2 = count(ExtremalParams::sparse_join(n, k));
  const Rational e3 = count(ExtremalParams::min_degree(n, k, delta));

  const auto w = [&](const Rational& m) {
    return (S - 2 * K) * m + 4 * K * S - 2 * K * K + 5 * K - Rational(3, 2) * S * S - Rational(5, 2) * S;
  };
  r.checks.push_back({"e(G2) - e(G1) = w(n)", e2 - e1, w(N)});
  r.checks.push_back({"e(G3) - e(G1) = (s - delta)(2n + 8k - 3delta - 3s - 5)/2", e3 - e1,
                      (S - D) * (2 * N + 8 * K - 3 * D - 3 * S - 5) * half});
  r.checks.push_back({"2n + 8k - 3delta - 3s - 5 = 3/2(n - 2s + 2k - 1) + 1/2(n - 6delta) + (10k - 7)/2",
                      2 * N + 8 * K - 3 * D - 3 * S - 5,
                      Rational(3, 2) * (N - 2 * S + 2 * K - 1) + half * (N - 6 * D) + (10 * K - 7) * half});

  const auto h1 = [&](const Rational& x) { return x * x * half - (2 * K + Rational(3, 2)) * x + 2 * K * K + 3 * K; };
  const auto h2 = [&](const Rational& x) { return x * x * half - (2 * K + half) * x + 2 * K * K + K; };
  r.checks.push_back({"w(2s - 2k + 1) = h1(s)", w(2 * S - 2 * K + 1), h1(S)});
  r.checks.push_back({"w(2s - 2k + 2) = h2(s)", w(2 * S - 2 * K + 2), h2(S)});
  r.checks.push_back({"h1(2k + 4) = 2", h1(2 * K + 4), Rational(2)});
  r.checks.push_back({"h2(2k + 2) = 1", h2(2 * K + 2), Rational(1)});
  if (s == 2 * k + 1) r.checks.push_back({"w(n) = n - 2k - 4 at s = 2k + 1", w(N), N - 2 * K - 4});
  return r;
}

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::q1q2: return "q1q2";
    case LemmaId::q1q3: return "q1q3";
    case LemmaId::mu_compare: return "mu_compare";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(std::string_view name) {
  const std::string key = normalise(name);
  if (key == "q1q2") return LemmaId::q1q2;
  if (key == "q1q3") return LemmaId::q1q3;
  if (key == "mucompare" || key == "mu") return LemmaId::mu_compare;
  return std::nullopt;
}

namespace {

double family_root(Family f, const FamilyParams& p, double tol) { return largest_real_root(closed_form(f, p), tol); }

// Largest distance eigenvalue of G1 at n = 2s - 2k + 1 through the partition
// (join, first t - 1 independent vertices, last independent vertex).
double mu_g1_boundary_root(const ExtremalParams& p, double tol) {
  const int t = p.independent_count();
  const QuotientMatrix b =
      quotient(extremal_matrix(p, MatrixKind::distance), Partition::contiguous({p.s(), t - 1, 1}));
  return largest_real_root(charpoly3(b), tol);
}

struct GridTask {
  int k, n, s, delta;
  bool probe;
};

// Evaluates G1 and the reference graph on one grid point.
GridPoint evaluate_point(LemmaId lemma, const GridTask& task, double tol) {
  GridPoint pt;
  pt.k = task.k;
  pt.n = task.n;
  pt.s = task.s;
  pt.delta = task.delta;
  const int k = task.k, n = task.n, s = task.s;
  const ExtremalParams g1(n, k, s);
  const bool boundary = n == 2 * s - 2 * k + 1;
  const FamilyParams fp{n, k, s, task.delta};

  if (lemma == LemmaId::mu_compare) {
    pt.g1_full = largest_eigenvalue(extremal_matrix(g1, MatrixKind::distance), tol);
    pt.g1_root = boundary ? mu_g1_boundary_root(g1, tol) : family_root(Family::phi_b1, fp, tol);
  } else {
    pt.g1_full = largest_eigenvalue(extremal_matrix(g1, MatrixKind::signless_laplacian), tol);
    pt.g1_root = boundary ? family_root(Family::f_pi_prime_1, {0, k, s, 0}, tol) : family_root(Family::f_pi_1, fp, tol);
  }

  switch (lemma) {
    case LemmaId::q1q2: {
      const ExtremalParams g2 = ExtremalParams::sparse_join(n, k);
      pt.ref_full = largest_eigenvalue(extremal_matrix(g2, MatrixKind::signless_laplacian), tol);
      pt.ref_root = family_root(Family::f2, fp, tol);
      pt.expect_equal = s == 2 * k;
      const double margin = relative_margin(tol, pt.ref_full);
      pt.ok = pt.expect_equal ? std::abs(pt.g1_full - pt.ref_full) <= margin : pt.ref_full - pt.g1_full > margin;
      break;
    }
    case LemmaId::q1q3: {
      const ExtremalParams g3 = ExtremalParams::min_degree(n, k, task.delta);
      pt.ref_full = largest_eigenvalue(extremal_matrix(g3, MatrixKind::signless_laplacian), tol);
      pt.ref_root = family_root(Family::f3_q, fp, tol);
      pt.expect_equal = s == task.delta;
      const double margin = relative_margin(tol, pt.ref_full);
      pt.ok = pt.expect_equal ? std::abs(pt.g1_full - pt.ref_full) <= margin : pt.ref_full - pt.g1_full > margin;
      break;
    }
    case LemmaId::mu_compare: {
      const ExtremalParams g3 = ExtremalParams::min_degree(n, k, task.delta);
      pt.ref_full = largest_eigenvalue(extremal_matrix(g3, MatrixKind::distance), tol);
      pt.ref_root = family_root(Family::phi_b3_case1, fp, tol);
      pt.expect_equal = s == task.delta;
      const double margin = relative_margin(tol, pt.ref_full);
      pt.ok = pt.expect_equal ? std::abs(pt.g1_full - pt.ref_full) <= margin : pt.g1_full - pt.ref_full > margin;
      if (task.probe) {
        // Wiener chain: mu(G3) >= 2W(G3)/n >= n - delta + 2k + 3.
        const long long w = extremal_wiener_index(g3);
        const bool chain = 2 * w >= static_cast<long long>(n) * (n - task.delta + 2 * k + 3);
        pt.note = chain ? "wiener_chain=holds" : "wiener_chain=fails";
      }
      break;
    }
  }
  const double disc = std::max(std::abs(pt.g1_full - pt.g1_root), std::abs(pt.ref_full - pt.ref_root));
  if (disc > kRootAgreement) {
    pt.ok = false;
    pt.note += pt.note.empty() ? "root_mismatch" : ";root_mismatch";
  }
  return pt;
}

int ceil_half(int x) { return (x + 1) / 2; }

}  // namespace

GridReport lemma_grid(LemmaId lemma, const GridBounds& bounds) {
  std::vector<GridTask> tasks;
  for (int k = bounds.k_min; k <= bounds.k_max; ++k) {
    if (lemma == LemmaId::q1q2) {
      for (int n = 2 * k + 6; n <= bounds.n_max; ++n) {
        for (int s = 2 * k; 2 * s - 2 * k + 1 <= n; ++s) tasks.push_back({k, n, s, 0, false});
      }
      continue;
    }
    for (int delta = 2 * k + 1; delta <= bounds.delta_max; ++delta) {
      // Hypothesis region lower bound on n, and the probed band below it.
      const int n_lo = lemma == LemmaId::q1q3 ? ceil_half(13 * delta) : 12 * delta - 2 * k + 1;
      const int probe_lo = 6 * delta;
      for (int n = std::max(probe_lo, 2 * delta - 2 * k + 1); n <= bounds.n_max; ++n) {
        const bool probe = n < n_lo;
        for (int s = delta; 2 * s - 2 * k + 1 <= n; ++s) tasks.push_back({k, n, s, delta, probe});
      }
    }
  }

  std::vector<GridPoint> results(tasks.size());
  parallel_for(tasks.size(), bounds.jobs,
               [&](std::size_t i) { results[i] = evaluate_point(lemma, tasks[i], bounds.tol); });

  GridReport report;
  report.lemma = lemma;
  report.bounds = bounds;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const GridPoint& pt = results[i];
    report.max_root_discrepancy = std::max(
        {report.max_root_discrepancy, std::abs(pt.g1_full - pt.g1_root), std::abs(pt.ref_full - pt.ref_root)});
    if (tasks[i].probe) {
      if (!pt.ok || pt.note.find("fails") != std::string::npos) ++report.probe_failures;
      report.probe.push_back(pt);
    } else {
      if (!pt.ok) ++report.violations;
      report.points.push_back(pt);
    }
  }
  return report;
}

long long extremal_wiener_index(const ExtremalParams& p) {
  // Diameter 2: every non-adjacent pair is at distance 2.
  const long long n = p.n();
  return n * (n - 1) - p.edge_count();
}

SharpnessReport sharpness(const ExtremalParams& p, const TheoremSpec& spec, double tol, int oracle_max_s) {
  if (p.n() > 64) throw CapacityError("sharpness needs n <= 64");
  if (p.k() != spec.k || !spec.hypotheses(p.n(), p.s()) || !(spec.extremal(p.n(), p.s()) == p)) {
    throw DomainError("parameters are not an extremal point of the theorem");
  }
  SharpnessReport r{p, false, false, false, std::nullopt, 0, 0, false, std::nullopt, std::nullopt, false};
  const Graph g = extremal_graph(p);
  const GraphStats st = graph_stats(g);
  r.connected = st.connected;
  r.min_degree_is_s = st.min_degree == p.s();
  r.witness_valid = is_violating_set(g, p.k(), p.join_block());
  if (p.s() <= oracle_max_s) {
    const Verdict v = is_fext_lemma(g, p.k());
    r.oracle_witness_is_join = !v.answer && v.violating_set && *v.violating_set == p.join_block();
  }
  TheoremEvaluator ev(spec, tol);
  r.value = ev.value(g);
  r.threshold = ev.threshold(p.n(), st.min_degree);
  r.meets_bound = ev.meets_bound(r.value, r.threshold);
  if (spec.quantity() == Quantity::distance) {
    const long long w = wiener_index(g);
    r.wiener_bound = 2.0 * static_cast<double>(w) / p.n();
    r.mu_lower_bound_holds = r.value >= p.n() - p.s() + 2 * p.k() + 3 - relative_margin(tol, r.value) &&
                             w == extremal_wiener_index(p);
  }
  r.ok = r.connected && r.min_degree_is_s && r.witness_valid && r.oracle_witness_is_join.value_or(true) &&
         r.meets_bound && r.mu_lower_bound_holds.value_or(true);
  return r;
}

SamplingReport sample_spanning_subgraphs(int n, int k, int delta, std::size_t samples, std::uint64_t seed,
                                         double tol) {
  if (n > 64) throw CapacityError("sampling needs n <= 64");
  const int s_max = (n + 2 * k - 1) / 2;
  if (delta < 2 * k || delta > s_max) throw DomainError("sampling needs 2k <= delta <= (n + 2k - 1)/2");
  SamplingReport r;
  r.n = n;
  r.k = k;
  r.delta = delta;
  r.samples = samples;
  TheoremEvaluator ev({TheoremId::mu, k}, tol);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_s(delta, s_max);
  std::uniform_int_distribution<int> pick_r(0, n);
  for (std::size_t i = 0; i < samples; ++i) {
    const ExtremalParams p(n, k, pick_s(rng));
    Graph g = extremal_graph(p);
    // Pin the minimum degree: one independent vertex keeps exactly delta join neighbours.
    const int pinned = p.independent_block().members().front();
    std::vector<int> join = p.join_block().members();
    std::shuffle(join.begin(), join.end(), rng);
    for (int j = 0; j < p.s() - delta; ++j) g.remove_edge(pinned, join[j]);
    std::vector<Edge> pool = g.edges();
    std::shuffle(pool.begin(), pool.end(), rng);
    int budget = pick_r(rng);
    for (const Edge& e : pool) {
      if (budget == 0) break;
      if (g.degree(e.first) <= delta || g.degree(e.second) <= delta) continue;
      g.remove_edge(e.first, e.second);
      if (is_connected(g)) {
        --budget;
      } else {
        g.add_edge(e.first, e.second);
      }
    }
    if (!is_violating_set(g, k, p.join_block())) {
      ++r.uncertified;
      continue;
    }
    const int d = min_degree(g);
    if (!ev.spec().hypotheses(n, d)) continue;
    ++r.hypotheses_met;
    const double value = ev.value(g);
    if (!ev.meets_bound(value, ev.threshold(n, d))) continue;
    ++r.bound_met;
    if (matches_extremal(g, ExtremalParams::min_degree(n, k, d))) {
      ++r.equality_cases;
    } else {
      r.counterexamples.push_back(emit_graph6(g));
    }
  }
  return r;
}

}  // namespace fkext
