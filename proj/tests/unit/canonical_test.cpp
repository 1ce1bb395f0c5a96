#include "fkext/canonical.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fkext;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    ASSERT_EQ(canonical_form(permute(g, shuffled(n, rng))), canonical_form(g)) << emit_graph6(g);
  }
}

TEST(Canonical, RegularAndSymmetricGraphs) {
  std::mt19937_64 rng(37);
  // Vertex-transitive graphs defeat plain refinement; the search must still agree.
  for (const Graph& g : {cycle(12), complete(9), extremal_graph(ExtremalParams(14, 1, 5)),
                         disjoint_union(cycle(5), cycle(5)), join(cycle(6), empty_graph(3))}) {
    for (int t = 0; t < 5; ++t) {
      ASSERT_EQ(canonical_form(permute(g, shuffled(g.order(), rng))), canonical_form(g));
    }
  }
  // Same degree sequence, not isomorphic.
  EXPECT_FALSE(isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(41);
  int same = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    auto make = [&] {
      Graph g(n);
      while (g.edge_count() < m) {
        const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) g.add_edge(u, v);
      }
      return g;
    };
    const Graph a = make(), b = make();
    const bool want = oracle::brute_isomorphic(a, b);
    same += want;
    ASSERT_EQ(isomorphic(a, b), want) << emit_graph6(a) << " " << emit_graph6(b);
  }
  EXPECT_GT(same, 10);
}

TEST(Enumeration, GraphCounts) {
  // Unlabelled graphs and connected graphs on n vertices.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(n, false).size(), all[n - 1]) << n;
    EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n - 1]) << n;
  }
}

TEST(Enumeration, SparseMatchesFilteredFullEnumeration) {
  const auto every = enumerate_graphs(7, false);
  for (int m = 0; m <= 21; m += 3) {
    const auto count =
        std::count_if(every.begin(), every.end(), [&](const Graph& g) { return g.edge_count() <= m; });
    EXPECT_EQ(enumerate_sparse_graphs(7, m).size(), static_cast<std::size_t>(count)) << m;
  }
  for (const Graph& g : enumerate_dense_graphs(7, 4, false)) EXPECT_GE(g.edge_count(), 17);
}

TEST(Enumeration, OutputIsCanonicalAndDistinct) {
  const auto graphs = enumerate_graphs(6, false);
  std::set<std::string> seen;
  for (const Graph& g : graphs) {
    EXPECT_EQ(canonical_form(g), g);
    EXPECT_TRUE(seen.insert(emit_graph6(g)).second);
  }
}
