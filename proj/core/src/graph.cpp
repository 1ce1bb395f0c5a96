#include "fkext/graph.hpp"

#include "fkext/error.hpp"

#include <algorithm>
#include <string>

namespace fkext {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) {
    throw DomainError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t b = rows_[u] & ~VertexSet::range(u + 1).bits(); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(order());
  const auto all = vertices().bits();
  for (int v = 0; v < order(); ++v) c.rows_[v] = all & ~rows_[v] & ~(std::uint64_t{1} << v);
  return c;
}

ExtremalParams::ExtremalParams(int n, int k, int s) : n_(n), k_(k), s_(s) {
  if (k < 1) throw DomainError("extremal family needs k >= 1, got " + std::to_string(k));
  if (s < 2 * k) {
    throw DomainError("extremal family needs s >= 2k, got s=" + std::to_string(s) + " k=" + std::to_string(k));
  }
  if (clique_order() < 0) {
    throw DomainError("extremal family needs n >= 2s-2k+1, got n=" + std::to_string(n) +
                      " s=" + std::to_string(s) + " k=" + std::to_string(k));
  }
}

long long ExtremalParams::edge_count() const {
  const long long s = s_;
  const long long n1 = clique_order();
  return s * (s - 1) / 2 + n1 * (n1 - 1) / 2 + s * (n_ - s);
}

Graph complete(int m) {
  Graph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int m) { return Graph(m); }

Graph path(int m) {
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int m) {
  Graph g = path(m);
  if (m >= 3) g.add_edge(0, m - 1);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int total = n1 + g2.order();
  if (total > kMaxVertices) throw CapacityError("union order " + std::to_string(total) + " exceeds 64");
  Graph g(total);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
  return g;
}

Graph extremal_graph(const ExtremalParams& p) {
  Graph g(p.n());
  const int s = p.s();
  const int inner_end = s + p.clique_order();
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < p.n(); ++v) g.add_edge(u, v);
  for (int u = s; u < inner_end; ++u)
    for (int v = u + 1; v < inner_end; ++v) g.add_edge(u, v);
  return g;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().bits();
}

GraphStats graph_stats(const Graph& g) {
  return {g.order(), g.edge_count(), min_degree(g), is_connected(g)};
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices())) throw DomainError("vertex set not contained in V(G)");
  const auto kept = keep.members();
  if (kept.empty()) throw DomainError("induced subgraph on the empty set");
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) label[kept[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(kept.size()));
  for (int u : kept) {
    for (int v : (g.neighbours(u) & keep).members()) {
      if (u < v) h.add_edge(label[u], label[v]);
    }
  }
  return h;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw DomainError("vertex set not contained in V(G)");
  return induced_subgraph(g, g.vertices() - s);
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.row(v) == 0 ? 1 : 0;
  return count;
}

VertexSet isolated_after_removal(const Graph& g, VertexSet removed) {
  VertexSet out;
  const auto rem = removed.bits();
  for (std::uint64_t b = g.vertices().bits() & ~rem; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    if ((g.row(v) & ~rem) == 0) out.insert(v);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::uint64_t seen = std::uint64_t{1} << source;
  std::uint64_t frontier = seen;
  int level = 0;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      dist[v] = level;
      next |= g.row(v);
    }
    frontier = next & ~seen;
    seen |= next;
    ++level;
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const auto row = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) {
      if (row[v] < 0) throw DisconnectedError("distance matrix of a disconnected graph");
      d[static_cast<std::size_t>(u) * n + v] = row[v];
    }
  }
  return d;
}

long long wiener_index(const Graph& g) {
  const int n = g.order();
  const auto d = distance_matrix(g);
  long long total = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) total += d[static_cast<std::size_t>(u) * n + v];
  return total;
}

bool matches_extremal(const Graph& g, const ExtremalParams& p) {
  const int n = p.n();
  if (g.order() != n) return false;
  if (g.edge_count() != p.edge_count()) return false;

  VertexSet universal;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) universal.insert(v);
  }
  if (universal.size() < p.s()) return false;

  // Universal vertices are twins; take the lowest s of them as the join clique.
  VertexSet join_part;
  for (int v : universal.members()) {
    if (join_part.size() == p.s()) break;
    join_part.insert(v);
  }
  const VertexSet rest = g.vertices() - join_part;

  const int n1 = p.clique_order();
  VertexSet non_isolated;
  for (int v : rest.members()) {
    if ((g.neighbours(v) & rest).size() > 0) non_isolated.insert(v);
  }
  if (n1 <= 1) return non_isolated.empty();
  if (non_isolated.size() != n1) return false;
  for (int v : non_isolated.members()) {
    if ((g.neighbours(v) & rest) != non_isolated - VertexSet::of({v})) return false;
  }
  return true;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace fkext
