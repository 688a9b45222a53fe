#include "seriate/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace seriate {

int Partition::k() const {
  int top = -1;
  for (int l : label) top = std::max(top, l);
  return top + 1;
}

Partition make_partition(std::vector<int> labels) {
  Partition p{std::move(labels)};
  if (p.label.empty()) throw std::invalid_argument("partition: empty");
  std::vector<char> seen(static_cast<std::size_t>(p.k()), 0);
  for (int l : p.label) {
    if (l < 0) throw std::invalid_argument("partition: negative label");
    seen[static_cast<std::size_t>(l)] = 1;
  }
  for (std::size_t l = 0; l < seen.size(); ++l)
    if (!seen[l])
      throw std::invalid_argument("partition: label " + std::to_string(l) +
                                  " unused; labels must be 0..k-1 with no gaps");
  return p;
}

std::vector<int> group_sizes(const Partition& p) {
  std::vector<int> sizes(static_cast<std::size_t>(p.k()), 0);
  for (int l : p.label) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

Partition canonicalize_labels(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("partition: empty");
  std::unordered_map<int, int> remap;
  Partition p;
  p.label.reserve(labels.size());
  for (int l : labels) {
    auto [it, inserted] = remap.try_emplace(l, static_cast<int>(remap.size()));
    p.label.push_back(it->second);
  }
  return p;
}

Which embedding_end(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Modularity:
    case MatrixKind::RegAdjacency:
      return Which::Largest;
    default:
      return Which::Smallest;
  }
}

Eigen::MatrixXd embed_from_spectrum(const Graph& g, const MatrixOptions& opts,
                                    const Spectrum& full, int k) {
  const int n = g.n;
  if (k < 1 || k > n) throw std::invalid_argument("embedding: k must be in [1, n]");
  if (full.values.size() != n)
    throw std::invalid_argument("embedding: spectrum size mismatch");
  Spectrum part = slice_spectrum(full, k, embedding_end(opts.kind));
  Eigen::MatrixXd emb = part.vectors;

  double tau = 0.0;
  bool rescale = false;
  switch (opts.kind) {
    case MatrixKind::NormLaplacian:
      rescale = true;
      break;
    case MatrixKind::RegLaplacian:
    case MatrixKind::RegAdjacency:
      rescale = true;
      tau = opts.tau.value();
      break;
    default:
      break;
  }
  if (rescale) {
    auto d = degrees(g);
    for (int i = 0; i < n; ++i) emb.row(i) /= std::sqrt(d[i] + tau);
  }
  return emb;
}

Eigen::MatrixXd spectral_embed(const Graph& g, MatrixOptions opts, int k) {
  opts = resolve_defaults(g, opts);
  Spectrum full = eig_symmetric_full(build_matrix(g, opts));
  return embed_from_spectrum(g, opts, full, k);
}

namespace detail {

Eigen::MatrixXd kmeanspp_init(const Eigen::MatrixXd& points, int k, Rng& rng) {
  const int n = static_cast<int>(points.rows());
  const int dim = static_cast<int>(points.cols());
  Eigen::MatrixXd centroids(k, dim);
  std::vector<double> dist2(n, std::numeric_limits<double>::infinity());

  centroids.row(0) = points.row(static_cast<int>(rng.below(n)));
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = (points.row(i) - centroids.row(c - 1)).squaredNorm();
      dist2[i] = std::min(dist2[i], d);
      total += dist2[i];
    }
    int pick;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.below(n));  // all points coincide with centers
    }
    centroids.row(c) = points.row(pick);
  }
  return centroids;
}

double lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd& centroids,
             std::vector<int>& label, int max_iters, double tol) {
  const int n = static_cast<int>(points.rows());
  const int k = static_cast<int>(centroids.rows());
  label.assign(n, 0);
  std::vector<int> counts(k, 0);
  std::vector<double> point_dist2(n, 0.0);

  auto assign = [&]() {
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (points.row(i) - centroids.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (points.row(i) - centroids.row(c)).squaredNorm();
        if (d < best_d) {  // strict: ties keep the lowest cluster index
          best_d = d;
          best = c;
        }
      }
      label[i] = best;
      point_dist2[i] = best_d;
      ++counts[best];
    }
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    assign();

    // Re-seed an empty cluster to the point farthest from its own centroid,
    // among points whose cluster still has at least two members.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int pick = -1;
      double worst = -1.0;
      for (int i = 0; i < n; ++i) {
        if (counts[label[i]] < 2) continue;
        if (point_dist2[i] > worst) {
          worst = point_dist2[i];
          pick = i;
        }
      }
      if (pick < 0) continue;  // fewer distinct points than clusters
      --counts[label[pick]];
      label[pick] = c;
      counts[c] = 1;
      point_dist2[pick] = 0.0;
      centroids.row(c) = points.row(pick);
    }

    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(k, points.cols());
    for (int i = 0; i < n; ++i) next.row(label[i]) += points.row(i);
    double moved = 0.0;
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        next.row(c) = centroids.row(c);
        continue;
      }
      next.row(c) /= counts[c];
      moved = std::max(moved, (next.row(c) - centroids.row(c)).norm());
    }
    centroids = next;
    if (moved <= tol) break;
  }

  assign();
  return std::accumulate(point_dist2.begin(), point_dist2.end(), 0.0);
}

}  // namespace detail

KMeansResult kmeans(const Eigen::MatrixXd& points, const KMeansOptions& opts) {
  const int n = static_cast<int>(points.rows());
  if (opts.k < 1 || opts.k > n)
    throw std::invalid_argument("kmeans: k must be in [1, n]");
  if (opts.restarts < 1) throw std::invalid_argument("kmeans: restarts must be >= 1");
  if (!points.allFinite()) throw std::invalid_argument("kmeans: non-finite input");

  std::vector<KMeansResult> runs(opts.restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(mix_seed({opts.seed, kSaltKmeans, static_cast<std::uint64_t>(r)}));
    KMeansResult run;
    run.restart = r;
    run.centroids = detail::kmeanspp_init(points, opts.k, rng);
    run.objective =
        detail::lloyd(points, run.centroids, run.label, opts.max_iters, opts.tol);
    runs[r] = std::move(run);
  }

  int best = 0;
  for (int r = 1; r < opts.restarts; ++r)
    if (runs[r].objective < runs[best].objective) best = r;
  return runs[best];
}

Partition bipartition_by_sign(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("bipartition: need at least two entries");
  bool constant = true;
  for (int i = 1; i < n && constant; ++i) constant = (x[i] == x[0]);
  if (constant) throw std::invalid_argument("bipartition: constant vector");

  Partition p;
  p.label.assign(n, 1);
  int negatives = 0;
  for (int i = 0; i < n; ++i)
    if (x[i] < 0.0) {
      p.label[i] = 0;
      ++negatives;
    }
  if (negatives > 0 && negatives < n) return p;

  // Degenerate sign pattern: split at the median of the sorted values instead.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&x](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });
  const int half = (n + 1) / 2;
  for (int r = 0; r < n; ++r) p.label[idx[r]] = (r < half) ? 0 : 1;
  return p;
}

Partition spectral_cluster(const Graph& g, MatrixOptions opts, int k,
                           std::uint64_t seed) {
  Eigen::MatrixXd emb = spectral_embed(g, opts, k);
  KMeansOptions kopts;
  kopts.k = k;
  kopts.seed = seed;
  KMeansResult res = kmeans(emb, kopts);
  return canonicalize_labels(res.label);
}

}  // namespace seriate
