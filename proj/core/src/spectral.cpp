#include "fkext/spectral.hpp"

#include "fkext/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace fkext {

std::int64_t SymMatrix::row_sum(int i) const {
  std::int64_t sum = 0;
  for (int j = 0; j < order_; ++j) sum += (*this)(i, j);
  return sum;
}

std::int64_t SymMatrix::max_row_sum() const {
  std::int64_t best = 0;
  for (int i = 0; i < order_; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < order_; ++j) sum += std::abs((*this)(i, j));
    best = std::max(best, sum);
  }
  return best;
}

bool SymMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymMatrix m(n);
  switch (kind) {
    case MatrixKind::adjacency:
    case MatrixKind::signless_laplacian:
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) m(u, v) = g.has_edge(u, v) ? 1 : 0;
        if (kind == MatrixKind::signless_laplacian) m(u, u) = g.degree(u);
      }
      break;
    case MatrixKind::distance: {
      const auto d = distance_matrix(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) m(u, v) = d[static_cast<std::size_t>(u) * n + v];
      break;
    }
  }
  return m;
}

SymMatrix extremal_matrix(const ExtremalParams& p, MatrixKind kind) {
  const int n = p.n();
  const int s = p.s();
  const int inner_end = s + p.clique_order();
  auto block_of = [&](int v) { return v < s ? 0 : (v < inner_end ? 1 : 2); };
  auto adjacent = [&](int u, int v) {
    if (u == v) return false;
    const int bu = block_of(u);
    const int bv = block_of(v);
    return bu == 0 || bv == 0 || (bu == 1 && bv == 1);
  };
  const std::int64_t degree[3] = {n - 1, s + p.clique_order() - 1, s};

  SymMatrix m(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) {
        m(u, v) = kind == MatrixKind::signless_laplacian ? degree[block_of(u)] : 0;
      } else if (kind == MatrixKind::distance) {
        // The join clique is non-empty, so the diameter is at most two.
        m(u, v) = adjacent(u, v) ? 1 : 2;
      } else {
        m(u, v) = adjacent(u, v) ? 1 : 0;
      }
    }
  }
  return m;
}

double largest_eigenvalue(const SymMatrix& m, double tol) {
  const int n = m.order();
  const std::vector<double> a(m.entries().begin(), m.entries().end());
  const double shift = static_cast<double>(m.max_row_sum());

  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * (i + 1) / n;

  double residual = 0;
  for (long iter = 0; iter < kPowerIterationCap; ++iter) {
    double scale = 0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (double& v : x) v /= scale;

    double xy = 0;
    double xx = 0;
    for (int i = 0; i < n; ++i) {
      const double* row = &a[static_cast<std::size_t>(i) * n];
      double acc = 0;
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      y[i] = acc;
      xy += x[i] * acc;
      xx += x[i] * x[i];
    }
    const double lambda = xy / xx;

    residual = 0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
    if (residual == 0 || residual <= tol * std::abs(lambda)) return lambda;

    for (int i = 0; i < n; ++i) x[i] = y[i] + shift * x[i];
  }
  throw NumericError("power iteration did not converge in " + std::to_string(kPowerIterationCap) + " steps",
                     residual);
}

Partition::Partition(int order, std::vector<std::vector<int>> blocks) : order_(order), blocks_(std::move(blocks)) {
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  int covered = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition block is empty");
    for (int v : b) {
      if (v < 0 || v >= order || seen[v]) throw DomainError("partition blocks overlap or leave the index range");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != order) throw DomainError("partition does not cover every index");
}

Partition Partition::contiguous(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (int size : sizes) {
    std::vector<int> b;
    for (int i = 0; i < size; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return Partition(next, std::move(blocks));
}

QuotientMatrix quotient(const SymMatrix& m, const Partition& pi) {
  if (pi.order() != m.order()) throw DomainError("partition order does not match the matrix");
  const int r = pi.block_count();
  QuotientMatrix out;
  out.order = r;
  out.entries.resize(static_cast<std::size_t>(r) * r);
  out.equitable = true;
  for (int i = 0; i < r; ++i) {
    const auto& rows = pi.block(i);
    for (int j = 0; j < r; ++j) {
      const auto& cols = pi.block(j);
      std::int64_t total = 0;
      std::optional<std::int64_t> common;
      for (int row : rows) {
        std::int64_t sum = 0;
        for (int col : cols) sum += m(row, col);
        total += sum;
        if (!common) {
          common = sum;
        } else if (*common != sum) {
          out.equitable = false;
        }
      }
      out.entries[static_cast<std::size_t>(i) * r + j] =
          Rational(total) / Rational(static_cast<std::int64_t>(rows.size()));
    }
  }
  return out;
}

SpectralReport spectral_report(const Graph& g, double tol) {
  SpectralReport r;
  const auto stats = graph_stats(g);
  r.n = stats.n;
  r.e = stats.e;
  r.min_degree = stats.min_degree;
  r.connected = stats.connected;
  r.rho = largest_eigenvalue(build_matrix(g, MatrixKind::adjacency), tol);
  r.q = largest_eigenvalue(build_matrix(g, MatrixKind::signless_laplacian), tol);
  if (r.connected) {
    r.wiener = wiener_index(g);
    r.mu = largest_eigenvalue(build_matrix(g, MatrixKind::distance), tol);
  }
  return r;
}

}  // namespace fkext
