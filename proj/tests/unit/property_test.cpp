#include "fkext/spectral.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fkext;

namespace {

Graph random_connected(std::mt19937_64& rng, int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.0, 0.6)(rng));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

double q_of(const Graph& g) { return largest_eigenvalue(build_matrix(g, MatrixKind::signless_laplacian)); }
double mu_of(const Graph& g) { return largest_eigenvalue(build_matrix(g, MatrixKind::distance)); }

}  // namespace

TEST(Properties, MonotonicityAndWienerBound) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 20);
    Graph g = random_connected(rng, n);
    if (g.edge_count() == n * (n - 1) / 2) continue;
    int u, v;
    do {
      u = static_cast<int>(rng() % n);
      v = static_cast<int>(rng() % n);
    } while (u == v || g.has_edge(u, v));
    Graph plus = g;
    plus.add_edge(u, v);
    EXPECT_GT(q_of(plus), q_of(g)) << emit_graph6(g);
    EXPECT_LT(mu_of(plus), mu_of(g)) << emit_graph6(g);
    EXPECT_GE(mu_of(g), 2.0 * static_cast<double>(wiener_index(g)) / n - 1e-9) << emit_graph6(g);
  }
}
