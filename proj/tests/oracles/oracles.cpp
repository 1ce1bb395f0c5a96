#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <numeric>

namespace fkext::oracle {

std::optional<std::vector<Rational>> lp_feasible_point(const std::vector<std::vector<Rational>>& a,
                                                       std::vector<Rational> b) {
  const std::size_t m = b.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = sign * b[i];
    basis[i] = n + i;
  }
  // Objective row: minimise the sum of artificials, written in reduced form.
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= t[i][j];
    obj[cols - 1] -= t[i][cols - 1];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;  // unbounded; cannot happen in phase one
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[cols - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
  }
  return x;
}

std::optional<std::map<Edge, Rational>> lp_fractional_perfect_matching(const Graph& g,
                                                                       const std::vector<Edge>& fixed) {
  const int n = g.order();
  const std::vector<Edge> edges = g.edges();
  // Fixed edges become variables with an extra row x_e = 1.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> row(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (edges[j].first == v || edges[j].second == v) row[j] = 1;
    }
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (const Edge& e : fixed) {
    std::vector<Rational> row(edges.size());
    const auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) return std::nullopt;
    row[static_cast<std::size_t>(it - edges.begin())] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  const auto x = lp_feasible_point(a, b);
  if (!x) return std::nullopt;
  std::map<Edge, Rational> h;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if ((*x)[j] != 0) h[edges[j]] = (*x)[j];
  }
  return h;
}

std::vector<std::vector<Edge>> brute_k_matchings(const Graph& g, int k) {
  std::vector<std::vector<Edge>> out;
  const std::vector<Edge> edges = g.edges();
  std::vector<Edge> current;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t used) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t j = from; j < edges.size(); ++j) {
      const std::uint64_t mask = (std::uint64_t{1} << edges[j].first) | (std::uint64_t{1} << edges[j].second);
      if (used & mask) continue;
      current.push_back(edges[j]);
      rec(j + 1, used | mask);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

bool lp_is_fext(const Graph& g, int k) {
  const auto matchings = brute_k_matchings(g, k);
  if (matchings.empty()) return false;
  return std::all_of(matchings.begin(), matchings.end(),
                     [&](const std::vector<Edge>& m) { return lp_fractional_perfect_matching(g, m).has_value(); });
}

int brute_matching_number(const Graph& g) {
  std::function<int(std::uint64_t)> rec = [&](std::uint64_t alive) -> int {
    if (alive == 0) return 0;
    const int v = std::countr_zero(alive);
    const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    int best = rec(rest);  // v unmatched
    for (std::uint64_t nb = g.row(v) & rest; nb != 0; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      best = std::max(best, 1 + rec(rest & ~(std::uint64_t{1} << u)));
    }
    return best;
  };
  return rec(g.vertices().bits());
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permute(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<VertexSet> brute_violating_set(const Graph& g, int k) {
  const int n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::vector<int> s = VertexSet(mask).members();
    if (static_cast<int>(s.size()) < 2 * k) continue;
    int isolated = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) continue;
      bool alone = true;
      for (int u = 0; u < n; ++u) {
        if (!(mask >> u & 1) && u != v && g.has_edge(u, v)) alone = false;
      }
      if (alone) ++isolated;
    }
    if (isolated < static_cast<int>(s.size()) - 2 * k + 1) continue;
    if (brute_matching_number(induced_subgraph(g, VertexSet(mask))) >= k) return VertexSet(mask);
  }
  return std::nullopt;
}

double dense_largest_eigenvalue(const SymMatrix& m) {
  const int n = m.order();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d(i, j) = static_cast<double>(m(i, j));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const int n = g.order();
  constexpr int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (g.has_edge(i, j)) d[i][j] = 1;
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][w] + d[w][j]);
    }
  }
  return d;
}

}  // namespace fkext::oracle
