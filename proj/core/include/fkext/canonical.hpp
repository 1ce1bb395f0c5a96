#pragma once

#include "fkext/graph.hpp"

#include <cstdint>
#include <vector>

namespace fkext {

/// perm[v] is the canonical label of v: isomorphic graphs map to identical graphs.
///
/// Individualisation-refinement over colour refinement; branches on twin
/// vertices are skipped since swapping twins is an automorphism.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// All graphs of order n up to isomorphism, built by vertex extension.
/// Intended for n <= 9.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// All graphs of order n with at most max_edges edges, up to isomorphism,
/// built level by level through edge addition.
std::vector<Graph> enumerate_sparse_graphs(int n, int max_edges);

/// Complements of enumerate_sparse_graphs(n, complement_budget): every graph of
/// order n missing at most `complement_budget` edges.
std::vector<Graph> enumerate_dense_graphs(int n, int complement_budget, bool connected_only);

}  // namespace fkext
