#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "seriate/graph.hpp"
#include "seriate/matrices.hpp"
#include "seriate/rng.hpp"
#include "seriate/spectrum.hpp"

namespace seriate {

// Group assignment: label[v] is the group of vertex v. Canonical form uses
// labels 0..k-1 with every label present.
struct Partition {
  std::vector<int> label;

  int n() const { return static_cast<int>(label.size()); }
  int k() const;  // max label + 1 (0 for an empty partition)

  bool operator==(const Partition&) const = default;
};

Partition make_partition(std::vector<int> labels);  // validates canonical form

// Counts per label 0..k-1.
std::vector<int> group_sizes(const Partition& p);

// Relabel groups by order of first appearance (vertex 0's group becomes 0, ...).
Partition canonicalize_labels(const std::vector<int>& labels);

// Which end of the spectrum carries the clustering signal for each kind.
Which embedding_end(MatrixKind kind);

// n-by-k embedding: the k informative eigenvectors as columns, row-rescaled by
// 1/sqrt(d_i + tau) for the degree-normalized kinds.
Eigen::MatrixXd embed_from_spectrum(const Graph& g, const MatrixOptions& opts,
                                    const Spectrum& full, int k);
Eigen::MatrixXd spectral_embed(const Graph& g, MatrixOptions opts, int k);

struct KMeansOptions {
  int k = 2;
  int restarts = 50;
  int max_iters = 300;
  double tol = 1e-8;  // max centroid movement declaring convergence
  std::uint64_t seed = 0;
};

struct KMeansResult {
  std::vector<int> label;     // as assigned (not canonicalized)
  Eigen::MatrixXd centroids;  // k rows
  double objective = 0.0;     // sum of squared distances to assigned centroid
  int restart = -1;           // index of the winning restart
};

// Lloyd's algorithm with k-means++ seeding and deterministic restarts; the best
// run is chosen by (objective, restart index), so results do not depend on the
// number of worker threads.
KMeansResult kmeans(const Eigen::MatrixXd& points, const KMeansOptions& opts);

namespace detail {
Eigen::MatrixXd kmeanspp_init(const Eigen::MatrixXd& points, int k, Rng& rng);
double lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd& centroids,
             std::vector<int>& label, int max_iters, double tol);
}  // namespace detail

// Two groups by sign of the vector entries: label 0 where x < 0. If all entries
// fall on one side, falls back to a median split of the sorted values (ties
// broken by index). A constant vector is an error.
Partition bipartition_by_sign(const Eigen::VectorXd& x);

// Full pipeline: build matrix, embed k eigenvectors, k-means, canonicalize.
Partition spectral_cluster(const Graph& g, MatrixOptions opts, int k,
                           std::uint64_t seed);

}  // namespace seriate
