#include "fkext/matching.hpp"

#include "fkext/error.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

namespace fkext {

VertexSet Matching::covered() const {
  VertexSet s;
  for (auto [u, v] : edges) {
    s.insert(u);
    s.insert(v);
  }
  return s;
}

bool Matching::valid_in(const Graph& g) const {
  VertexSet seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
    if (seen.contains(u) || seen.contains(v)) return false;
    seen.insert(u);
    seen.insert(v);
  }
  return true;
}

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

}  // namespace

void FractionalMatching::set(Edge e, Rational w) {
  e = normalized(e);
  if (w == 0) {
    weights_.erase(e);
  } else {
    weights_[e] = std::move(w);
  }
}

Rational FractionalMatching::weight(Edge e) const {
  const auto it = weights_.find(normalized(e));
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational FractionalMatching::vertex_sum(int v) const {
  Rational sum = 0;
  for (const auto& [e, w] : weights_) {
    if (e.first == v || e.second == v) sum += w;
  }
  return sum;
}

bool FractionalMatching::is_perfect_in(const Graph& g) const {
  for (const auto& [e, w] : weights_) {
    if (e.second >= g.order() || !g.has_edge(e.first, e.second)) return false;
    if (w < 0 || w > 1) return false;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (vertex_sum(v) != 1) return false;
  }
  return true;
}

bool FractionalMatching::is_half_integral() const {
  const Rational half(1, 2);
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const auto& kv) { return kv.second == 1 || kv.second == half; });
}

std::string_view reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::extendable: return "extendable";
    case VerdictReason::has_fpm: return "has_fpm";
    case VerdictReason::violating_set: return "violating_set";
    case VerdictReason::failing_matching: return "failing_matching";
    case VerdictReason::no_fpm: return "no_fpm";
    case VerdictReason::no_k_matching: return "no_k_matching";
    case VerdictReason::out_of_domain: return "out_of_domain";
  }
  return "?";
}

// Edmonds' blossom algorithm ---------------------------------------------------

namespace {

class Blossom {
public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    // Greedy warm start; augmentation corrects any poor choices.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u : g_.neighbours(v).members()) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

private:
  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbours(v).members()) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
  const auto mate = Blossom(g).run();
  std::vector<Edge> out;
  for (int v = 0; v < g.order(); ++v) {
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  }
  return out;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

int matching_number(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  return matching_number(induced_subgraph(g, within));
}

bool has_k_matching(const Graph& g, int k) { return k <= 0 || matching_number(g) >= k; }

bool has_k_matching(const Graph& g, VertexSet within, int k) {
  if (k <= 0) return true;
  if (within.size() < 2 * k) return false;
  if (k == 1) {
    for (int v : within.members()) {
      if (!(g.neighbours(v) & within).empty()) return true;
    }
    return false;
  }
  return matching_number(g, within) >= k;
}

// Bipartite double cover ---------------------------------------------------------

namespace {

// Left copy v+ is joined to right copy u- for every edge uv with u, v in `within`.
struct DoubleCover {
  const Graph& g;
  VertexSet within;
  std::vector<int> left_mate;   // left v -> right vertex or -1
  std::vector<int> right_mate;  // right u -> left vertex or -1

  DoubleCover(const Graph& graph, VertexSet w)
      : g(graph), within(w), left_mate(graph.order(), -1), right_mate(graph.order(), -1) {}

  bool augment(int v, std::uint64_t& visited) {
    for (std::uint64_t b = g.row(v) & within.bits() & ~visited; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if ((visited >> u) & 1U) continue;
      visited |= std::uint64_t{1} << u;
      if (right_mate[u] == -1 || augment(right_mate[u], visited)) {
        left_mate[v] = u;
        right_mate[u] = v;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int size = 0;
    for (int v : within.members()) {
      std::uint64_t visited = 0;
      if (augment(v, visited)) ++size;
    }
    return size;
  }

  // Minimum vertex cover (L \ Z) u (R n Z), Z = alternating reach from unmatched left vertices.
  // S = (cover on the left) n (cover on the right) in G's labels.
  VertexSet deficiency_witness() const {
    VertexSet reach_left;
    VertexSet reach_right;
    std::deque<int> queue;
    for (int v : within.members()) {
      if (left_mate[v] == -1) {
        reach_left.insert(v);
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : (g.neighbours(v) & within).members()) {
        if (reach_right.contains(u)) continue;
        reach_right.insert(u);
        const int w = right_mate[u];
        if (w != -1 && !reach_left.contains(w)) {
          reach_left.insert(w);
          queue.push_back(w);
        }
      }
    }
    const VertexSet cover_left = within - reach_left;
    return cover_left & reach_right;
  }
};

// Cycles of the permutation v -> left_mate[v]: 2-cycles and even cycles give
// weight-one edges, odd cycles weight one half.
FractionalMatching half_integral_solution(const DoubleCover& cover) {
  FractionalMatching h;
  VertexSet done;
  for (int start : cover.within.members()) {
    if (done.contains(start)) continue;
    std::vector<int> cyc;
    for (int v = start; !done.contains(v); v = cover.left_mate[v]) {
      done.insert(v);
      cyc.push_back(v);
    }
    const std::size_t len = cyc.size();
    if (len == 2) {
      h.set({cyc[0], cyc[1]}, 1);
    } else if (len % 2 == 0) {
      for (std::size_t i = 0; i < len; i += 2) h.set({cyc[i], cyc[i + 1]}, 1);
    } else {
      for (std::size_t i = 0; i < len; ++i) h.set({cyc[i], cyc[(i + 1) % len]}, Rational(1, 2));
    }
  }
  return h;
}

bool has_fpm_within(const Graph& g, VertexSet within) {
  DoubleCover cover(g, within);
  return cover.solve() == within.size();
}

}  // namespace

Verdict fractional_pm_exists(const Graph& g) {
  DoubleCover cover(g, g.vertices());
  if (cover.solve() == g.order()) return {true, VerdictReason::has_fpm, std::nullopt, std::nullopt};
  return {false, VerdictReason::no_fpm, cover.deficiency_witness(), std::nullopt};
}

std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g) {
  DoubleCover cover(g, g.vertices());
  if (cover.solve() != g.order()) return std::nullopt;
  return half_integral_solution(cover);
}

std::optional<FractionalMatching> extend_matching(const Graph& g, const Matching& m) {
  if (!m.valid_in(g)) throw DomainError("extend_matching: argument is not a matching of the graph");
  // Weight one on uv forces weight zero on every other edge at u and v, so the
  // rest must be a fractional perfect matching of G - V(M).
  const VertexSet rest = g.vertices() - m.covered();
  DoubleCover cover(g, rest);
  if (cover.solve() != rest.size()) return std::nullopt;
  FractionalMatching h = half_integral_solution(cover);
  for (const Edge& e : m.edges) h.set(e, 1);
  return h;
}

std::size_t for_each_k_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& fn) {
  const auto edges = g.edges();
  std::size_t visited = 0;
  Matching current;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t from, VertexSet used) -> void {
    if (current.size() == k) {
      ++visited;
      if (!fn(current)) stop = true;
      return;
    }
    const std::size_t need = static_cast<std::size_t>(k - current.size());
    for (std::size_t i = from; i + need <= edges.size() && !stop; ++i) {
      const auto [u, v] = edges[i];
      if (used.contains(u) || used.contains(v)) continue;
      current.edges.push_back(edges[i]);
      VertexSet next = used;
      next.insert(u);
      next.insert(v);
      self(self, i + 1, next);
      current.edges.pop_back();
    }
  };
  rec(rec, 0, VertexSet{});
  return visited;
}

Verdict is_fext_definitional(const Graph& g, int k, const DefinitionalOptions& options,
                             const ExtensionObserver& observer) {
  if (g.order() < 2 * k + 2) return {false, VerdictReason::out_of_domain, std::nullopt, std::nullopt};

  auto extends = [&](const Matching& m) {
    if (!observer) return has_fpm_within(g, g.vertices() - m.covered());
    const auto h = extend_matching(g, m);
    if (h) observer(m, *h);
    return h.has_value();
  };

  std::size_t seen = 0;
  std::optional<Matching> failing;

  if (options.jobs <= 1 || options.deterministic) {
    for_each_k_matching(g, k, [&](const Matching& m) {
      if (++seen > options.matching_cap) throw DomainError("k-matching enumeration cap exceeded");
      if (!extends(m)) {
        failing = m;
        return false;
      }
      return true;
    });
  } else {
    std::vector<Matching> all;
    for_each_k_matching(g, k, [&](const Matching& m) {
      if (all.size() >= options.matching_cap) throw DomainError("k-matching enumeration cap exceeded");
      all.push_back(m);
      return true;
    });
    seen = all.size();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex guard;
    auto worker = [&] {
      for (std::size_t i = next++; i < all.size() && !stop; i = next++) {
        bool ok = false;
        if (observer) {
          const auto h = extend_matching(g, all[i]);
          ok = h.has_value();
          if (ok) {
            std::lock_guard lock(guard);
            observer(all[i], *h);
          }
        } else {
          ok = has_fpm_within(g, g.vertices() - all[i].covered());
        }
        if (!ok) {
          std::lock_guard lock(guard);
          if (!failing) failing = all[i];
          stop = true;
        }
      }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
  }

  if (seen == 0) return {false, VerdictReason::no_k_matching, std::nullopt, std::nullopt};
  if (failing) return {false, VerdictReason::failing_matching, std::nullopt, failing};
  return {true, VerdictReason::extendable, std::nullopt, std::nullopt};
}

Verdict is_fext_lemma(const Graph& g, int k) {
  const int n = g.order();
  if (n < 2 * k + 2) return {false, VerdictReason::out_of_domain, std::nullopt, std::nullopt};
  if (!has_k_matching(g, k)) return {false, VerdictReason::no_k_matching, std::nullopt, std::nullopt};

  const std::uint64_t last = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0;; ++mask) {
    const VertexSet s(mask);
    const int size = s.size();
    // i(G - S) <= n - |S|, so small complements cannot violate.
    if (size >= 2 * k && n - size >= size - 2 * k + 1) {
      const int isolated = isolated_after_removal(g, s).size();
      if (isolated >= size - 2 * k + 1 && has_k_matching(g, s, k)) {
        return {false, VerdictReason::violating_set, s, std::nullopt};
      }
    }
    if (mask == last) break;
  }
  return {true, VerdictReason::extendable, std::nullopt, std::nullopt};
}

bool is_violating_set(const Graph& g, int k, VertexSet s) {
  if (!s.subset_of(g.vertices()) || s.size() == g.order() || s.size() < 2 * k) return false;
  const int isolated = isolated_count(delete_vertices(g, s));
  return isolated >= s.size() - 2 * k + 1 && has_k_matching(induced_subgraph(g, s), k);
}

std::optional<std::vector<int>> spanning_embedding(const Graph& g, int k, VertexSet s) {
  const int n = g.order();
  const int size = s.size();
  const int t = size - 2 * k + 1;
  if (size < 2 * k || t < 1) return std::nullopt;
  const auto isolated = isolated_after_removal(g, s).members();
  if (static_cast<int>(isolated.size()) < t) return std::nullopt;

  VertexSet independent;
  for (int i = 0; i < t; ++i) independent.insert(isolated[static_cast<std::size_t>(i)]);
  const VertexSet clique = g.vertices() - s - independent;

  std::vector<int> perm(static_cast<std::size_t>(n));
  int next = 0;
  for (int v : s.members()) perm[v] = next++;
  for (int v : clique.members()) perm[v] = next++;
  for (int v : independent.members()) perm[v] = next++;

  const Graph host = extremal_graph(ExtremalParams(n, k, size));
  for (auto [u, v] : g.edges()) {
    if (!host.has_edge(perm[u], perm[v])) return std::nullopt;
  }
  return perm;
}

}  // namespace fkext
