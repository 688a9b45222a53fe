#include "seriate/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "seriate/rng.hpp"

namespace seriate::reference {

EigResult jacobi_eig(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("jacobi: matrix not square");
  Eigen::MatrixXd a = m;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  const double tol = 1e-14 * std::max(1.0, m.norm());
  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });

  EigResult res;
  res.values.resize(n);
  res.vectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    res.values[j] = a(order[j], order[j]);
    res.vectors.col(j) = v.col(order[j]);
    for (int i = 0; i < n; ++i) {
      if (res.vectors(i, j) == 0.0) continue;
      if (res.vectors(i, j) < 0.0) res.vectors.col(j) = -res.vectors.col(j);
      break;
    }
  }
  return res;
}

std::int64_t h2_serial(const Graph& g, const Ordering& ord) {
  if (ord.n() != g.n) throw std::invalid_argument("h2: ordering size mismatch");
  std::int64_t total = 0;
  for (auto [u, v] : g.edges) {
    const std::int64_t d = ord.position[u] - ord.position[v];
    total += d * d;
  }
  return total;
}

std::int64_t min_h2_exhaustive(const Graph& g) {
  if (g.n > 10) throw std::invalid_argument("min h2: n too large for n! search");
  Ordering ord;
  ord.position.resize(g.n);
  std::iota(ord.position.begin(), ord.position.end(), 0);
  std::int64_t best = h2_serial(g, ord);
  while (std::next_permutation(ord.position.begin(), ord.position.end()))
    best = std::min(best, h2_serial(g, ord));
  return best;
}

int min_same_label_pairs_exhaustive(const std::vector<int>& labels) {
  if (labels.size() < 2 || labels.size() > 12)
    throw std::invalid_argument("min pairs: need 2..12 labels");
  std::vector<int> seq = labels;
  std::sort(seq.begin(), seq.end());
  int best = static_cast<int>(seq.size());
  do {
    int m = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      if (seq[i] == seq[i + 1]) ++m;
    best = std::min(best, m);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

std::vector<std::uint64_t> null_counts_recurrence(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("null counts: need n >= 2, k >= 1");
  std::vector<std::uint64_t> w(static_cast<std::size_t>(n), 0);
  w[0] = static_cast<std::uint64_t>(k);  // length 1, zero pairs
  for (int len = 1; len < n; ++len) {
    std::vector<std::uint64_t> next(w.size(), 0);
    for (int m = 0; m < len; ++m) {
      if (w[m] == 0) continue;
      next[m] += w[m] * static_cast<std::uint64_t>(k - 1);
      next[m + 1] += w[m];
    }
    w = std::move(next);
  }
  return w;
}

std::vector<std::uint64_t> null_counts_enumerated(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("null counts: need n >= 2, k >= 1");
  double total = std::pow(static_cast<double>(k), n);
  if (total > 1e7) throw std::invalid_argument("null counts: k^n too large to enumerate");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> seq(n, 0);
  for (;;) {
    int m = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (seq[i] == seq[i + 1]) ++m;
    ++counts[m];
    int pos = n - 1;
    while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return counts;
}

std::pair<double, double> sample_lce_moments(const std::vector<int>& sizes,
                                             int draws, std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("moments: no groups");
  if (draws < 2) throw std::invalid_argument("moments: need at least two draws");
  const int k = static_cast<int>(sizes.size());
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (n < 2) throw std::invalid_argument("moments: need at least two vertices");

  std::vector<double> cum(k);
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    acc += static_cast<double>(sizes[i]) / n;
    cum[i] = acc;
  }
  cum[k - 1] = 1.0;

  constexpr int kShards = 64;
  double shard_sum[kShards] = {0.0};
  double shard_sumsq[kShards] = {0.0};

#pragma omp parallel for schedule(static)
  for (int s = 0; s < kShards; ++s) {
    const int quota = draws / kShards + (s < draws % kShards ? 1 : 0);
    Rng rng(mix_seed({seed, static_cast<std::uint64_t>(s)}));
    std::vector<int> labels(n);
    double sum = 0.0, sumsq = 0.0;
    for (int d = 0; d < quota; ++d) {
      for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        int lab = 0;
        while (u >= cum[lab]) ++lab;
        labels[i] = lab;
      }
      int m = 0;
      for (int i = 0; i + 1 < n; ++i)
        if (labels[i] == labels[i + 1]) ++m;
      const double delta = static_cast<double>((n - k) - m) / (n - 1);
      sum += delta;
      sumsq += delta * delta;
    }
    shard_sum[s] = sum;
    shard_sumsq[s] = sumsq;
  }

  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < kShards; ++s) {
    sum += shard_sum[s];
    sumsq += shard_sumsq[s];
  }
  const double mean = sum / draws;
  const double var = (sumsq - draws * mean * mean) / (draws - 1);
  return {mean, var};
}

double best_two_means_objective_1d(std::vector<double> xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw std::invalid_argument("two means: need at least two points");
  std::sort(xs.begin(), xs.end());
  std::vector<double> pre(n + 1, 0.0), pre2(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    pre[i + 1] = pre[i] + xs[i];
    pre2[i + 1] = pre2[i] + xs[i] * xs[i];
  }
  auto ssq = [&](int lo, int hi) {  // within-cluster sum of squares on [lo, hi)
    const int cnt = hi - lo;
    const double s = pre[hi] - pre[lo];
    return (pre2[hi] - pre2[lo]) - s * s / cnt;
  };
  double best = std::numeric_limits<double>::infinity();
  for (int split = 1; split < n; ++split)
    best = std::min(best, ssq(0, split) + ssq(split, n));
  return std::max(best, 0.0);
}

double kendall_tau_quadratic(const Ordering& a, const Ordering& b) {
  if (a.n() != b.n()) throw std::invalid_argument("kendall: sizes differ");
  const int n = a.n();
  if (n < 2) throw std::invalid_argument("kendall: need at least two items");
  long long concordant = 0, discordant = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int da = a.position[u] - a.position[v];
      const int db = b.position[u] - b.position[v];
      if ((da > 0) == (db > 0))
        ++concordant;
      else
        ++discordant;
    }
  return static_cast<double>(concordant - discordant) /
         (static_cast<double>(n) * (n - 1) / 2);
}

}  // namespace seriate::reference
