#include "fkext/canonical.hpp"

#include "fkext/error.hpp"

#include <algorithm>
#include <set>

namespace fkext {
namespace {

using Certificate = std::vector<std::uint64_t>;

class Canonizer {
public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    std::vector<int> colours(static_cast<std::size_t>(n_), 0);
    search(colours);
    return best_labels_;
  }

private:
  // Stable colour refinement; cells keep their relative order, so the result
  // depends only on the colouring, not on vertex names.
  int refine(std::vector<int>& colours) const {
    int cells = 1 + *std::max_element(colours.begin(), colours.end());
    for (;;) {
      std::vector<std::vector<int>> signature(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.assign(static_cast<std::size_t>(cells) + 1, 0);
        sig[0] = colours[v];
        for (std::uint64_t b = g_.row(v); b != 0; b &= b - 1) ++sig[1 + colours[std::countr_zero(b)]];
      }
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return signature[a] < signature[b]; });
      int next = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || signature[order[i]] != signature[order[i - 1]]) ++next;
        colours[order[i]] = next;
      }
      const int refined = next + 1;
      if (refined == cells) return cells;
      cells = refined;
    }
  }

  bool twins(int u, int v) const {
    const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (g_.row(u) & mask) == (g_.row(v) & mask);
  }

  void search(std::vector<int> colours) {
    const int cells = refine(colours);
    if (cells == n_) {
      Certificate cert(static_cast<std::size_t>(n_), 0);
      for (int v = 0; v < n_; ++v) {
        for (std::uint64_t b = g_.row(v); b != 0; b &= b - 1) {
          cert[colours[v]] |= std::uint64_t{1} << colours[std::countr_zero(b)];
        }
      }
      if (best_cert_.empty() || cert > best_cert_) {
        best_cert_ = std::move(cert);
        best_labels_ = colours;
      }
      return;
    }

    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colours) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colours[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> child = colours;
      for (int w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      search(std::move(child));
    }
  }

  const Graph& g_;
  int n_;
  Certificate best_cert_;
  std::vector<int> best_labels_;
};

Certificate certificate_of(const Graph& canonical) {
  Certificate c(static_cast<std::size_t>(canonical.order()));
  for (int v = 0; v < canonical.order(); ++v) c[v] = canonical.row(v);
  return c;
}

Graph graph_of(int n, const Certificate& rows) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t b = rows[u]; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_form(const Graph& g) { return permute(g, canonical_labeling(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > 12) throw DomainError("enumerate_graphs supports 1 <= n <= 12");
  std::set<Certificate> level{certificate_of(Graph(1))};
  for (int m = 2; m <= n; ++m) {
    std::set<Certificate> next;
    for (const auto& rows : level) {
      const Graph base = graph_of(m - 1, rows);
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (m - 1)); ++nbrs) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (std::uint64_t b = nbrs; b != 0; b &= b - 1) g.add_edge(std::countr_zero(b), m - 1);
        next.insert(certificate_of(canonical_form(g)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& rows : level) {
    Graph g = graph_of(n, rows);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_sparse_graphs(int n, int max_edges) {
  std::set<Certificate> level{certificate_of(Graph(n))};
  std::vector<Graph> out{Graph(n)};
  for (int m = 1; m <= max_edges && m <= n * (n - 1) / 2; ++m) {
    std::set<Certificate> next;
    for (const auto& rows : level) {
      const Graph base = graph_of(n, rows);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (base.has_edge(u, v)) continue;
          Graph g = base;
          g.add_edge(u, v);
          next.insert(certificate_of(canonical_form(g)));
        }
      }
    }
    for (const auto& rows : next) out.push_back(graph_of(n, rows));
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> enumerate_dense_graphs(int n, int complement_budget, bool connected_only) {
  std::vector<Graph> out;
  for (const Graph& sparse : enumerate_sparse_graphs(n, complement_budget)) {
    Graph g = sparse.complement();
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fkext
