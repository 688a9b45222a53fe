#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "seriate/graph.hpp"
#include "seriate/matrices.hpp"
#include "seriate/spectrum.hpp"

namespace seriate {

// A vertex sequence: position[v] is the rank of vertex v (a bijection
// {0..n-1} -> {0..n-1}).
struct Ordering {
  std::vector<int> position;

  int n() const { return static_cast<int>(position.size()); }
  bool operator==(const Ordering&) const = default;
};

Ordering identity_ordering(int n);

// inverse()[p] = the vertex placed at rank p.
std::vector<int> inverse(const Ordering& ord);

Ordering reverse(const Ordering& ord);

// Sum over edges of the squared rank distance: sum (pos[u]-pos[v])^2.
// Integer-exact.
std::int64_t h2(const Graph& g, const Ordering& ord);

// Ranks of the entries of x, ascending; ties broken by index (stable).
// Throws on non-finite entries.
Ordering rank_discretize(const Eigen::VectorXd& x);

// Which end of the reg-adjacency spectrum supplies the ordering vector.
// SecondLargest is the default (the operator's large eigenvalues play the
// role that small eigenvalues play for the Laplacians); SecondSmallest is
// the literal low-end alternative, selectable from the CLI.
enum class RegAdjacencyPick { SecondLargest, SecondSmallest };

// The continuous score vector whose ranks define the spectral ordering:
//   laplacian:       eigenvector of the 2nd-smallest eigenvalue of L
//   norm-laplacian:  d_i^{-1/2} * (2nd-smallest eigenvector of Ln)_i
//   modularity:      leading eigenvector of Q, skipping any eigenvector
//                    within 1e-8 cosine distance of the constant vector
//   bethe-hessian:   eigenvector of the 2nd-smallest eigenvalue of B
//   reg-laplacian:   (d_i+tau)^{-1/2} * (2nd-smallest eigenvector)_i
//   reg-adjacency:   (d_i+tau)^{-1/2} * (2nd-largest eigenvector)_i  [default]
// Missing hyperparameters are resolved to defaults. A disconnected input is
// allowed (a warning is printed; rank selections may sit on a degenerate
// eigenvalue).
Eigen::VectorXd ordering_vector(const Graph& g, MatrixOptions opts,
                                RegAdjacencyPick pick = RegAdjacencyPick::SecondLargest);

// Same, reusing a precomputed full spectrum of build_matrix(g, opts).
Eigen::VectorXd ordering_vector_from_spectrum(
    const Graph& g, const MatrixOptions& opts, const Spectrum& full,
    RegAdjacencyPick pick = RegAdjacencyPick::SecondLargest);

// rank_discretize(ordering_vector(...)). Requires n >= 2.
Ordering spectral_order(const Graph& g, MatrixOptions opts,
                        RegAdjacencyPick pick = RegAdjacencyPick::SecondLargest);

// H2 of the orderings induced by the k_max lowest eigenvectors of the
// Bethe Hessian, for each r in the grid. Rows ordered by (r index, k).
struct BetheSweepRow {
  double r;
  int k;  // 1-based: k = 1 is the lowest eigenvector
  std::int64_t h2;
};
std::vector<BetheSweepRow> bethe_sweep(const Graph& g, const std::vector<double>& r_grid,
                                       int k_max);

// 'points' log-spaced values in [0.1, 2 * default_bethe_r(g)].
std::vector<double> default_bethe_grid(const Graph& g, int points = 30);

}  // namespace seriate
