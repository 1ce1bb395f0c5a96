#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fkext {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., 63} packed into one word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// {first, ..., last-1}.
  static constexpr VertexSet range(int first, int last) {
    return VertexSet(range(last).bits() & ~range(first).bits());
  }
  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;  // always first < second

/// Simple undirected graph on 1..64 vertices; row u holds the neighbours of u.
class Graph {
public:
  /// Edgeless graph of order n. Throws CapacityError unless 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  std::vector<Edge> edges() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::uint64_t> rows_;
};

/// Parameters of K_s v (K_{n1} u t K_1) with n1 = n - 2s + 2k - 1 and t = s - 2k + 1.
class ExtremalParams {
public:
  /// Throws DomainError unless k >= 1, s >= 2k, n1 >= 0.
  ExtremalParams(int n, int k, int s);

  /// K_{2k} v (K_{n-2k-1} u K_1).
  static ExtremalParams sparse_join(int n, int k) { return {n, k, 2 * k}; }
  /// K_delta v (K_{n-2delta+2k-1} u (delta-2k+1) K_1).
  static ExtremalParams min_degree(int n, int k, int delta) { return {n, k, delta}; }

  int n() const { return n_; }
  int k() const { return k_; }
  int s() const { return s_; }
  int clique_order() const { return n_ - 2 * s_ + 2 * k_ - 1; }
  int independent_count() const { return s_ - 2 * k_ + 1; }

  /// Positional vertex blocks [join | inner clique | independent part].
  VertexSet join_block() const { return VertexSet::range(0, s_); }
  VertexSet clique_block() const { return VertexSet::range(s_, s_ + clique_order()); }
  VertexSet independent_block() const { return VertexSet::range(s_ + clique_order(), n_); }

  long long edge_count() const;

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;

private:
  int n_;
  int k_;
  int s_;
};

struct GraphStats {
  int n = 0;
  int e = 0;
  int min_degree = 0;
  bool connected = false;
};

Graph complete(int m);
Graph empty_graph(int m);
Graph path(int m);
Graph cycle(int m);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// K_s v (K_{n1} u t K_1) with vertices ordered [join | clique | independent].
Graph extremal_graph(const ExtremalParams& p);

GraphStats graph_stats(const Graph& g);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);

/// Induced subgraph on V(g) \ s, relabelled in increasing vertex order.
Graph delete_vertices(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, VertexSet keep);

int isolated_count(const Graph& g);

/// Vertices outside `removed` whose neighbourhood lies inside `removed`.
VertexSet isolated_after_removal(const Graph& g, VertexSet removed);

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Row-major n x n all-pairs distances. Throws DisconnectedError.
std::vector<int> distance_matrix(const Graph& g);

/// Sum of distances over unordered vertex pairs. Throws DisconnectedError.
long long wiener_index(const Graph& g);

/// True iff g is isomorphic to extremal_graph(p).
///
/// Universal vertices are pairwise twins, so any s of them can serve as the
/// join clique; what remains must be K_{n1} plus t isolated vertices.
bool matches_extremal(const Graph& g, const ExtremalParams& p);

/// Relabel: vertex v of g becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

// graph6 ---------------------------------------------------------------------

/// Decode one graph6 record (n <= 62). Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view line);

/// Encode as graph6. Throws CapacityError when n > 62.
std::string emit_graph6(const Graph& g);

}  // namespace fkext
