#pragma once

#include "fkext/graph.hpp"
#include "fkext/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fkext {

enum class MatrixKind { adjacency, signless_laplacian, distance };

/// Dense symmetric integer matrix, row-major.
class SymMatrix {
public:
  explicit SymMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0) {}

  int order() const { return order_; }
  std::int64_t operator()(int i, int j) const { return entries_[index(i, j)]; }
  std::int64_t& operator()(int i, int j) { return entries_[index(i, j)]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t row_sum(int i) const;
  std::int64_t max_row_sum() const;
  bool is_symmetric() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * order_ + j; }

  int order_;
  std::vector<std::int64_t> entries_;
};

/// A(G), Q(G) = D(G) + A(G), or the distance matrix. Distance throws DisconnectedError.
SymMatrix build_matrix(const Graph& g, MatrixKind kind);

/// The same matrices for an extremal family member, built straight from its
/// block structure so orders beyond the 64-vertex Graph limit are reachable.
SymMatrix extremal_matrix(const ExtremalParams& p, MatrixKind kind);

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr long kPowerIterationCap = 1'000'000;

/// Largest eigenvalue by power iteration on M + cI, c = max row sum.
///
/// Stops once ||Mx - lambda x||_inf <= tol * lambda for x scaled to unit
/// infinity norm. Throws NumericError after kPowerIterationCap steps.
double largest_eigenvalue(const SymMatrix& m, double tol = kDefaultTolerance);

/// Ordered, disjoint, covering, non-empty vertex blocks.
class Partition {
public:
  /// Throws DomainError when the blocks do not partition {0..order-1}.
  Partition(int order, std::vector<std::vector<int>> blocks);

  /// Contiguous index ranges of the given (positive) sizes.
  static Partition contiguous(const std::vector<int>& sizes);

  int order() const { return order_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[i]; }

private:
  int order_;
  std::vector<std::vector<int>> blocks_;
};

struct QuotientMatrix {
  int order = 0;
  std::vector<Rational> entries;  // row-major
  bool equitable = false;

  const Rational& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
};

/// b_ij = (sum of block M_ij) / |block i|; equitable iff every row of every block has the same sum.
QuotientMatrix quotient(const SymMatrix& m, const Partition& pi);

struct SpectralReport {
  int n = 0;
  int e = 0;
  int min_degree = 0;
  bool connected = false;
  double rho = 0;                      // adjacency spectral radius
  double q = 0;                        // signless Laplacian spectral radius
  std::optional<long long> wiener;     // connected only
  std::optional<double> mu;            // distance spectral radius, connected only
};

SpectralReport spectral_report(const Graph& g, double tol = kDefaultTolerance);

}  // namespace fkext
