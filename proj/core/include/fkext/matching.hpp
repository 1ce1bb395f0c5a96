#pragma once

#include "fkext/graph.hpp"
#include "fkext/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace fkext {

/// Pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  VertexSet covered() const;
  /// True iff the edges are disjoint and all belong to g.
  bool valid_in(const Graph& g) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Edge weights in [0, 1]; edges not stored carry weight zero.
class FractionalMatching {
public:
  void set(Edge e, Rational w);
  Rational weight(Edge e) const;
  Rational vertex_sum(int v) const;
  const std::map<Edge, Rational>& weights() const { return weights_; }

  /// Every weight in [0,1] on an edge of g, every vertex sum exactly one.
  bool is_perfect_in(const Graph& g) const;
  /// Every stored weight is 1/2 or 1.
  bool is_half_integral() const;

private:
  std::map<Edge, Rational> weights_;
};

enum class VerdictReason {
  extendable,         // positive answer
  has_fpm,            // positive answer
  violating_set,      // witness: vertex set S
  failing_matching,   // witness: k-matching with no extension
  no_fpm,             // witness: S with i(G - S) > |S|
  no_k_matching,      // G has no k-matching
  out_of_domain,      // order below 2k + 2
};

std::string_view reason_name(VerdictReason r);

struct Verdict {
  bool answer = false;
  VerdictReason reason = VerdictReason::out_of_domain;
  std::optional<VertexSet> violating_set;
  std::optional<Matching> failing_matching;
};

std::vector<Edge> maximum_matching(const Graph& g);
int matching_number(const Graph& g);
/// Matching number of the subgraph induced by `within`.
int matching_number(const Graph& g, VertexSet within);
bool has_k_matching(const Graph& g, int k);
bool has_k_matching(const Graph& g, VertexSet within, int k);

/// Decided through a perfect matching of the bipartite double cover; a
/// negative answer carries S with i(G - S) > |S| read off a minimum vertex cover.
Verdict fractional_pm_exists(const Graph& g);

/// Half-integral fractional perfect matching recovered from the double cover, if any.
std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g);

/// A fractional perfect matching with weight one on every edge of m, if one exists.
/// Throws DomainError when m is not a matching of g.
std::optional<FractionalMatching> extend_matching(const Graph& g, const Matching& m);

/// Calls fn on each k-matching (edges in lexicographic order, each matching once)
/// until fn returns false. Returns the number of matchings visited.
std::size_t for_each_k_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& fn);

struct DefinitionalOptions {
  int jobs = 1;
  /// Sequential scan, so the witness is the first failing matching in enumeration order.
  bool deterministic = true;
  std::size_t matching_cap = 50'000'000;
};

using ExtensionObserver = std::function<void(const Matching&, const FractionalMatching&)>;

/// Every k-matching extends to a fractional perfect matching. The observer,
/// when set, receives each extension that was built.
Verdict is_fext_definitional(const Graph& g, int k, const DefinitionalOptions& options = {},
                             const ExtensionObserver& observer = {});

/// i(G - S) <= |S| - 2k for every S whose induced subgraph has a k-matching.
/// Subsets are scanned as ascending bitmasks, so the witness is the least violator.
Verdict is_fext_lemma(const Graph& g, int k);

/// Independent recheck of a violating set: G[S] has a k-matching and i(G - S) >= |S| - 2k + 1.
bool is_violating_set(const Graph& g, int k, VertexSet s);

/// Labelling under which g becomes a spanning subgraph of K_s v (K_{n1} u t K_1),
/// s = |S|, built from a violating set S. Absent when S does not leave enough isolated vertices.
std::optional<std::vector<int>> spanning_embedding(const Graph& g, int k, VertexSet s);

}  // namespace fkext
