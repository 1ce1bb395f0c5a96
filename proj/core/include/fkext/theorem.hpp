#pragma once

#include "fkext/graph.hpp"
#include "fkext/matching.hpp"
#include "fkext/rational.hpp"
#include "fkext/spectral.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fkext {

// Theorem statements --------------------------------------------------------------

enum class TheoremId { edge_1, edge_2, q_1, q_2, mu };

enum class Quantity { edges, signless, distance };

std::string_view theorem_name(TheoremId id);
/// Accepts "edge_1" as well as "edge1", "e1", "q1", "mu", ...
std::optional<TheoremId> parse_theorem(std::string_view name);

struct TheoremSpec {
  TheoremId id = TheoremId::edge_1;
  int k = 1;

  Quantity quantity() const;
  /// e and q must reach the threshold; mu must stay at or below it.
  bool lower_bound() const { return quantity() != Quantity::distance; }
  /// Order/minimum-degree hypotheses, evaluated exactly (6.5 delta as 13 delta / 2).
  bool hypotheses(int n, int delta) const;
  /// The graph whose value is the threshold and which is the sole exception.
  ExtremalParams extremal(int n, int delta) const;
};

enum class Classification { hypotheses_not_met, bound_not_met, confirmed_extendable, equality_case, counterexample };

std::string_view classification_name(Classification c);

struct TheoremCheck {
  Classification classification = Classification::hypotheses_not_met;
  std::string note;
  int n = 0;
  int e = 0;
  int min_degree = 0;
  std::optional<double> value;
  std::optional<double> threshold;
  std::optional<Verdict> verdict;
  /// Negative instances only: g embeds in the extremal graph built from its witness.
  std::optional<bool> spanning_subgraph;
};

/// Shares threshold values across graphs of the same (n, delta). Thread-safe.
class TheoremEvaluator {
public:
  explicit TheoremEvaluator(TheoremSpec spec, double tol = kDefaultTolerance) : spec_(spec), tol_(tol) {}

  const TheoremSpec& spec() const { return spec_; }
  double tolerance() const { return tol_; }

  TheoremCheck check(const Graph& g);

  double threshold(int n, int delta);
  double value(const Graph& g) const;
  /// Comparison with the equality slack 10 * tol * max(1, threshold) for spectral bounds.
  bool meets_bound(double value, double threshold) const;

private:
  TheoremSpec spec_;
  double tol_;
  std::mutex guard_;
  std::map<std::pair<int, int>, double> thresholds_;
};

TheoremCheck check_theorem(const Graph& g, const TheoremSpec& spec, double tol = kDefaultTolerance);

// Corpus sweeps ----------------------------------------------------------------------

struct SweepEntry {
  std::size_t line = 0;  // 1-based line number in the corpus
  std::string graph6;
  std::optional<std::string> error;
  TheoremCheck check;
};

struct SweepSummary {
  std::size_t scanned = 0;
  std::size_t errors = 0;
  std::size_t hypotheses_met = 0;
  std::size_t bound_met = 0;
  std::size_t confirmed = 0;
  std::size_t equality_cases = 0;
  std::size_t counterexamples = 0;
  std::size_t spanning_failures = 0;
};

struct SweepReport {
  TheoremSpec spec;
  std::string corpus;
  std::vector<SweepEntry> entries;
  SweepSummary summary;
};

struct SweepOptions {
  int jobs = 1;
  double tol = kDefaultTolerance;
};

/// One graph6 record per line; blank lines, '#' comments and a ">>graph6<<" header are skipped.
std::vector<std::pair<std::size_t, std::string>> read_corpus(std::istream& in);

SweepReport sweep(const std::vector<std::pair<std::size_t, std::string>>& corpus, const TheoremSpec& spec,
                  const SweepOptions& options = {}, std::string description = {});

// Edge-count identities -------------------------------------------------------------

struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

struct EdgeIdentityReport {
  int k = 0;
  int s = 0;
  int n = 0;
  int delta = 0;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// e(G2) - e(G1) = w(n), e(G3) - e(G1) = (s - delta)(2n + 8k - 3delta - 3s - 5)/2 and the
/// case bounds on w, with e(.) counted on constructed graphs. Requires
/// 2k <= delta <= s, n >= 2s - 2k + 1, n <= 64.
EdgeIdentityReport edge_count_identities(int k, int s, int n, int delta);

// Parameter grids ----------------------------------------------------------------------

enum class LemmaId { q1q2, q1q3, mu_compare };

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

struct GridBounds {
  int k_min = 1;
  int k_max = 3;
  int n_max = 40;
  int delta_max = 7;
  double tol = kDefaultTolerance;
  int jobs = 1;
};

struct GridPoint {
  int k = 0;
  int n = 0;
  int s = 0;
  int delta = 0;         // unused by q1q2
  double g1_full = 0;    // spectral radius of G1 from the full matrix
  double g1_root = 0;    // largest root of the quotient polynomial
  double ref_full = 0;   // G2 (q1q2) or G3 (q1q3, mu_compare)
  double ref_root = 0;
  bool expect_equal = false;
  bool ok = false;
  std::string note;
};

struct GridReport {
  LemmaId lemma = LemmaId::q1q2;
  GridBounds bounds;
  std::vector<GridPoint> points;
  std::size_t violations = 0;
  double max_root_discrepancy = 0;
  /// Informational points outside the hypothesis region (not asserted).
  std::vector<GridPoint> probe;
  std::size_t probe_failures = 0;
};

inline constexpr double kRootAgreement = 1e-8;

GridReport lemma_grid(LemmaId lemma, const GridBounds& bounds);

// Sharpness ---------------------------------------------------------------------------

struct SharpnessReport {
  ExtremalParams params;
  bool connected = false;
  bool min_degree_is_s = false;
  bool witness_valid = false;                // join clique violates the extendability condition
  std::optional<bool> oracle_witness_is_join;  // set when the exhaustive oracle was run
  double value = 0;
  double threshold = 0;
  bool meets_bound = false;
  std::optional<double> wiener_bound;         // 2W/n, distance theorem only
  std::optional<bool> mu_lower_bound_holds;   // mu >= n - delta + 2k + 3
  bool ok = false;
};

/// Certifies the extremal graph as a tight non-extendable example of `spec`.
/// The exhaustive oracle is run when s <= oracle_max_s. Requires n <= 64.
SharpnessReport sharpness(const ExtremalParams& p, const TheoremSpec& spec, double tol = kDefaultTolerance,
                          int oracle_max_s = 16);

/// W(G3) from its block structure.
long long extremal_wiener_index(const ExtremalParams& p);

// Randomised spanning subgraphs --------------------------------------------------------

struct SamplingReport {
  int n = 0;
  int k = 0;
  int delta = 0;
  std::size_t samples = 0;
  std::size_t uncertified = 0;  // join clique no longer a violating set
  std::size_t hypotheses_met = 0;
  std::size_t bound_met = 0;
  std::size_t equality_cases = 0;
  std::vector<std::string> counterexamples;  // graph6
};

/// Draws connected spanning subgraphs of K_s v (K_{n1} u t K_1) with s >= delta and
/// minimum degree exactly delta, and checks the distance theorem on each.
/// Non-extendability is certified by the join clique instead of the exhaustive oracle.
SamplingReport sample_spanning_subgraphs(int n, int k, int delta, std::size_t samples, std::uint64_t seed,
                                         double tol = kDefaultTolerance);

}  // namespace fkext
