#include "fkext/canonical.hpp"
#include "fkext/error.hpp"
#include "fkext/theorem.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace fkext;

namespace {

const TheoremSpec kEdge1{TheoremId::edge_1, 1};
const TheoremSpec kQ1{TheoremId::q_1, 1};
const TheoremSpec kMu{TheoremId::mu, 1};

}  // namespace

TEST(TheoremSpec, Names) {
  EXPECT_EQ(parse_theorem("edge1"), TheoremId::edge_1);
  EXPECT_EQ(parse_theorem("q_2"), TheoremId::q_2);
  EXPECT_EQ(parse_theorem("MU"), TheoremId::mu);
  EXPECT_FALSE(parse_theorem("q3"));
  EXPECT_EQ(theorem_name(TheoremId::edge_2), "edge_2");
}

TEST(TheoremSpec, HypothesesAreExact) {
  EXPECT_TRUE(kEdge1.hypotheses(11, 0));
  EXPECT_FALSE(kEdge1.hypotheses(10, 5));
  const TheoremSpec e2{TheoremId::edge_2, 1};
  EXPECT_TRUE(e2.hypotheses(18, 3));
  EXPECT_FALSE(e2.hypotheses(17, 3));
  EXPECT_FALSE(e2.hypotheses(30, 2));
  const TheoremSpec q2{TheoremId::q_2, 1};
  EXPECT_TRUE(q2.hypotheses(20, 3));   // 20 >= 19.5
  EXPECT_FALSE(q2.hypotheses(19, 3));
  EXPECT_TRUE(q2.hypotheses(26, 4));   // 26 = 6.5 * 4
  EXPECT_TRUE(kQ1.hypotheses(8, 1));
  EXPECT_FALSE(kQ1.hypotheses(7, 1));
  EXPECT_TRUE(kMu.hypotheses(35, 3));
  EXPECT_FALSE(kMu.hypotheses(34, 3));
  EXPECT_TRUE((TheoremSpec{TheoremId::mu, 2}.hypotheses(57, 5)));
  EXPECT_EQ(kEdge1.extremal(11, 7), ExtremalParams::sparse_join(11, 1));
  EXPECT_EQ(kMu.extremal(36, 3), ExtremalParams::min_degree(36, 1, 3));
  EXPECT_TRUE(kEdge1.lower_bound());
  EXPECT_FALSE(kMu.lower_bound());
}

TEST(CheckTheorem, Examples) {
  const TheoremCheck eq = check_theorem(extremal_graph(ExtremalParams::sparse_join(11, 1)), kEdge1);
  EXPECT_EQ(eq.classification, Classification::equality_case);
  EXPECT_EQ(eq.e, 47);
  EXPECT_EQ(*eq.threshold, 47);
  ASSERT_TRUE(eq.verdict);
  EXPECT_FALSE(eq.verdict->answer);
  EXPECT_EQ(eq.spanning_subgraph, true);

  EXPECT_EQ(check_theorem(complete(11), kEdge1).classification, Classification::confirmed_extendable);
  EXPECT_EQ(check_theorem(cycle(11), kEdge1).classification, Classification::bound_not_met);
  const TheoremCheck small = check_theorem(complete(10), kEdge1);
  EXPECT_EQ(small.classification, Classification::hypotheses_not_met);
  const TheoremCheck split = check_theorem(disjoint_union(complete(6), complete(6)), kEdge1);
  EXPECT_EQ(split.classification, Classification::hypotheses_not_met);
  EXPECT_EQ(split.note, "disconnected");
}

TEST(CheckTheorem, SpectralEqualityCases) {
  EXPECT_EQ(check_theorem(extremal_graph(ExtremalParams::sparse_join(8, 1)), kQ1).classification,
            Classification::equality_case);
  const TheoremSpec q2{TheoremId::q_2, 1};
  EXPECT_EQ(check_theorem(extremal_graph(ExtremalParams::min_degree(20, 1, 3)), q2).classification,
            Classification::equality_case);
  EXPECT_EQ(check_theorem(extremal_graph(ExtremalParams::min_degree(36, 1, 3)), kMu).classification,
            Classification::equality_case);
  // Minimum degree 5 needs n >= 59.
  EXPECT_EQ(check_theorem(extremal_graph(ExtremalParams(36, 1, 5)), kMu).classification,
            Classification::hypotheses_not_met);
}

TEST(Sweep, CorpusHandling) {
  std::istringstream in(">>graph6<<J~~~~~~~}??\n# comment\n\nbad!\nJ?????????? \n" + emit_graph6(complete(11)) + "\n");
  const auto corpus = read_corpus(in);
  ASSERT_EQ(corpus.size(), 4u);
  EXPECT_EQ(corpus[0].first, 1u);
  EXPECT_EQ(corpus[1].first, 4u);
  const SweepReport rep = sweep(corpus, kEdge1);
  EXPECT_EQ(rep.summary.scanned, 4u);
  EXPECT_EQ(rep.summary.errors, 1u);
  EXPECT_EQ(rep.summary.equality_cases, 1u);
  EXPECT_EQ(rep.summary.counterexamples, 0u);
  EXPECT_EQ(rep.summary.confirmed, 1u);  // K11
  EXPECT_EQ(rep.entries[1].line, 4u);
  EXPECT_TRUE(rep.entries[1].error);
  EXPECT_EQ(rep.entries[2].check.note, "disconnected");
}

TEST(Sweep, OrderIndependentOfJobs) {
  std::vector<std::pair<std::size_t, std::string>> corpus;
  std::size_t line = 0;
  for (const Graph& g : enumerate_graphs(7, true)) corpus.emplace_back(++line, emit_graph6(g));
  const TheoremSpec spec{TheoremId::q_1, 1};
  const SweepReport a = sweep(corpus, spec, {1});
  const SweepReport b = sweep(corpus, spec, {4});
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].graph6, b.entries[i].graph6);
    EXPECT_EQ(a.entries[i].check.classification, b.entries[i].check.classification);
    EXPECT_EQ(a.entries[i].check.value, b.entries[i].check.value);
  }
}

TEST(EdgeIdentities, Examples) {
  const EdgeIdentityReport a = edge_count_identities(1, 6, 11, 6);
  EXPECT_TRUE(a.all_hold());
  EXPECT_EQ(a.checks[0].lhs, Rational(2));  // 47 - 45
  const EdgeIdentityReport b = edge_count_identities(1, 3, 11, 3);
  EXPECT_TRUE(b.all_hold());
  EXPECT_EQ(b.checks[0].lhs, Rational(5));
  EXPECT_EQ(b.checks.back().name, "w(n) = n - 2k - 4 at s = 2k + 1");
  EXPECT_EQ(edge_count_identities(2, 6, 20, 6).checks[1].lhs, Rational(0));
  EXPECT_THROW(edge_count_identities(1, 3, 11, 4), DomainError);
}

TEST(EdgeIdentities, FullGrid) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2 * k + 1; n <= 64; ++n) {
      for (int s = 2 * k; 2 * s - 2 * k + 1 <= n; ++s) {
        for (int delta = 2 * k; delta <= s; ++delta) {
          ASSERT_TRUE(edge_count_identities(k, s, n, delta).all_hold()) << k << " " << s << " " << n << " " << delta;
        }
      }
    }
  }
}

TEST(LemmaGrid, SparseJoinComparison) {
  const GridReport r = lemma_grid(LemmaId::q1q2, {1, 3, 40});
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LE(r.max_root_discrepancy, kRootAgreement);
  std::size_t equal = 0;
  for (const GridPoint& p : r.points) {
    if (p.expect_equal) {
      ++equal;
      EXPECT_EQ(p.s, 2 * p.k);
    } else {
      EXPECT_LT(p.g1_full, p.ref_full);
    }
  }
  EXPECT_GT(equal, 0u);
}

TEST(LemmaGrid, MinDegreeComparisons) {
  const GridReport q = lemma_grid(LemmaId::q1q3, {1, 1, 20, 3});
  EXPECT_EQ(q.violations, 0u);
  const auto it = std::find_if(q.points.begin(), q.points.end(),
                               [](const GridPoint& p) { return p.n == 20 && p.s == 4 && p.delta == 3; });
  ASSERT_NE(it, q.points.end());
  EXPECT_LT(it->g1_full, it->ref_full);
  EXPECT_FALSE(q.probe.empty());  // 18 <= n < 19.5

  const GridReport mu = lemma_grid(LemmaId::mu_compare, {1, 1, 40, 3});
  EXPECT_EQ(mu.violations, 0u);
  for (const GridPoint& p : mu.points) {
    if (p.s == p.delta) EXPECT_NEAR(p.g1_full, p.ref_full, 1e-9 * p.ref_full);
  }
  EXPECT_EQ(parse_lemma("mu_compare"), LemmaId::mu_compare);
}

TEST(Sharpness, Examples) {
  const SharpnessReport e = sharpness(ExtremalParams::sparse_join(11, 1), kEdge1);
  EXPECT_TRUE(e.ok);
  EXPECT_EQ(e.oracle_witness_is_join, true);
  EXPECT_EQ(e.value, 47);

  const SharpnessReport m = sharpness(ExtremalParams::min_degree(36, 1, 3), kMu);
  EXPECT_TRUE(m.ok);
  EXPECT_GE(m.value, 38);
  EXPECT_GE(*m.wiener_bound, 38);
  EXPECT_EQ(m.mu_lower_bound_holds, true);

  EXPECT_THROW(sharpness(ExtremalParams(12, 1, 4), kEdge1), DomainError);
  EXPECT_THROW(sharpness(ExtremalParams::min_degree(30, 1, 3), kMu), DomainError);
}

TEST(Sharpness, WienerIndexFromBlocks) {
  for (int n = 5; n <= 40; n += 5) {
    for (int s = 2; 2 * s - 1 <= n; ++s) {
      const ExtremalParams p(n, 1, s);
      EXPECT_EQ(extremal_wiener_index(p), wiener_index(extremal_graph(p)));
    }
  }
}

TEST(Sampling, SpanningSubgraphs) {
  const SamplingReport a = sample_spanning_subgraphs(35, 1, 3, 300, 99);
  EXPECT_EQ(a.samples, 300u);
  EXPECT_TRUE(a.counterexamples.empty());
  EXPECT_EQ(a.hypotheses_met + a.uncertified, 300u);
  const SamplingReport b = sample_spanning_subgraphs(35, 1, 3, 300, 99);
  EXPECT_EQ(a.bound_met, b.bound_met);
  EXPECT_EQ(a.equality_cases, b.equality_cases);
  EXPECT_THROW(sample_spanning_subgraphs(70, 1, 3, 1, 1), CapacityError);
}
