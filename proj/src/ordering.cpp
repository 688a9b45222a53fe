#include "seriate/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace seriate {

Ordering identity_ordering(int n) {
  Ordering ord;
  ord.position.resize(n);
  std::iota(ord.position.begin(), ord.position.end(), 0);
  return ord;
}

std::vector<int> inverse(const Ordering& ord) {
  const int n = ord.n();
  std::vector<int> inv(n, -1);
  for (int v = 0; v < n; ++v) {
    int p = ord.position[v];
    if (p < 0 || p >= n || inv[p] != -1)
      throw std::invalid_argument("ordering: positions are not a bijection");
    inv[p] = v;
  }
  return inv;
}

Ordering reverse(const Ordering& ord) {
  const int n = ord.n();
  Ordering out;
  out.position.resize(n);
  for (int v = 0; v < n; ++v) out.position[v] = n - 1 - ord.position[v];
  return out;
}

std::int64_t h2(const Graph& g, const Ordering& ord) {
  if (ord.n() != g.n) throw std::invalid_argument("h2: ordering size mismatch");
  std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (g.m() > 65536)
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    std::int64_t diff = ord.position[u] - ord.position[v];
    total += diff * diff;
  }
  return total;
}

Ordering rank_discretize(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(x[i]))
      throw std::invalid_argument("rank_discretize: non-finite entry at index " +
                                  std::to_string(i));
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&x](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });
  Ordering ord;
  ord.position.resize(n);
  for (int rank = 0; rank < n; ++rank) ord.position[idx[rank]] = rank;
  return ord;
}

namespace {

// Cosine distance of a unit vector to the normalized constant vector.
double cosine_distance_to_constant(const Eigen::VectorXd& v) {
  const double n = static_cast<double>(v.size());
  double cos = std::abs(v.sum()) / (v.norm() * std::sqrt(n));
  return 1.0 - cos;
}

}  // namespace

Eigen::VectorXd ordering_vector_from_spectrum(const Graph& g, const MatrixOptions& opts,
                                              const Spectrum& full, RegAdjacencyPick pick) {
  const int n = g.n;
  if (n < 2) throw std::invalid_argument("ordering: need at least two vertices");
  if (full.values.size() != n)
    throw std::invalid_argument("ordering: spectrum size mismatch");

  switch (opts.kind) {
    case MatrixKind::Laplacian:
      return full.vectors.col(1);
    case MatrixKind::BetheHessian:
      return full.vectors.col(1);
    case MatrixKind::NormLaplacian: {
      auto d = degrees(g);
      Eigen::VectorXd x = full.vectors.col(1);
      for (int i = 0; i < n; ++i) x[i] /= std::sqrt(static_cast<double>(d[i]));
      return x;
    }
    case MatrixKind::Modularity: {
      // Leading eigenvector; Q annihilates the constant vector, so skip any
      // leading eigenvector that is numerically constant.
      for (int j = n - 1; j >= 0; --j) {
        Eigen::VectorXd v = full.vectors.col(j);
        if (cosine_distance_to_constant(v) > 1e-8) return v;
      }
      throw std::runtime_error("ordering: all modularity eigenvectors are constant");
    }
    case MatrixKind::RegLaplacian: {
      auto d = degrees(g);
      const double tau = opts.tau.value();
      Eigen::VectorXd x = full.vectors.col(1);
      for (int i = 0; i < n; ++i) x[i] /= std::sqrt(d[i] + tau);
      return x;
    }
    case MatrixKind::RegAdjacency: {
      auto d = degrees(g);
      const double tau = opts.tau.value();
      const int col = (pick == RegAdjacencyPick::SecondLargest) ? n - 2 : 1;
      Eigen::VectorXd x = full.vectors.col(col);
      for (int i = 0; i < n; ++i) x[i] /= std::sqrt(d[i] + tau);
      return x;
    }
  }
  throw std::logic_error("unknown matrix kind");
}

Eigen::VectorXd ordering_vector(const Graph& g, MatrixOptions opts, RegAdjacencyPick pick) {
  if (g.n < 2) throw std::invalid_argument("ordering: need at least two vertices");
  if (!is_connected(g))
    std::cerr << "warning: graph is disconnected; spectral ordering may be arbitrary "
                 "between components\n";
  opts = resolve_defaults(g, opts);
  Spectrum full = eig_symmetric_full(build_matrix(g, opts));
  return ordering_vector_from_spectrum(g, opts, full, pick);
}

Ordering spectral_order(const Graph& g, MatrixOptions opts, RegAdjacencyPick pick) {
  return rank_discretize(ordering_vector(g, opts, pick));
}

std::vector<double> default_bethe_grid(const Graph& g, int points) {
  if (points < 2) throw std::invalid_argument("bethe grid: need at least two points");
  const double lo = 0.1;
  const double hi = 2.0 * default_bethe_r(g);
  if (hi <= lo) throw std::invalid_argument("bethe grid: default r too small for grid");
  std::vector<double> grid(points);
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  for (int i = 0; i < points; ++i)
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
  return grid;
}

std::vector<BetheSweepRow> bethe_sweep(const Graph& g, const std::vector<double>& r_grid,
                                       int k_max) {
  if (k_max < 1 || k_max > g.n)
    throw std::invalid_argument("bethe_sweep: k_max must be in [1, n]");
  for (double r : r_grid)
    if (r == 0.0) throw std::invalid_argument("bethe_sweep: r must be nonzero");
  const int points = static_cast<int>(r_grid.size());
  std::vector<BetheSweepRow> rows(static_cast<std::size_t>(points) * k_max);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < points; ++i) {
    MatrixOptions opts{MatrixKind::BetheHessian, r_grid[i], std::nullopt};
    Spectrum full = eig_symmetric_full(build_matrix(g, opts));
    for (int k = 1; k <= k_max; ++k) {
      Ordering ord = rank_discretize(full.vectors.col(k - 1));
      rows[static_cast<std::size_t>(i) * k_max + (k - 1)] = {r_grid[i], k, h2(g, ord)};
    }
  }
  return rows;
}

}  // namespace seriate
