#include "seriate/models.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "seriate/rng.hpp"

namespace seriate {

namespace {

// Bernoulli sampling over all pairs, parallel over rows. Row u draws its own
// generator from (seed, row), so the edge set is independent of thread count.
template <typename RateFn>
Graph sample_pairs(int n, std::uint64_t seed, RateFn rate) {
  std::vector<std::vector<std::pair<int, int>>> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (int u = 0; u < n - 1; ++u) {
    Rng rng(mix_seed({seed, kSaltGenerate, static_cast<std::uint64_t>(u)}));
    auto& out = rows[u];
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(rate(u, v))) out.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return make_graph(n, std::move(edges));
}

}  // namespace

SbmParams sbm_params(int n, int k, double c, double epsilon) {
  if (n < 2) throw std::invalid_argument("sbm: need at least two vertices");
  if (k < 1) throw std::invalid_argument("sbm: need at least one block");
  if (n % k != 0) throw std::invalid_argument("sbm: block count must divide n");
  if (!(c > 0.0)) throw std::invalid_argument("sbm: mean degree must be positive");
  if (epsilon < 0.0) throw std::invalid_argument("sbm: epsilon must be >= 0");
  SbmParams p;
  p.n = n;
  p.k = k;
  p.c = c;
  p.epsilon = epsilon;
  p.p_in = c * k / (n * (1.0 + (k - 1) * epsilon));
  p.p_out = epsilon * p.p_in;
  if (p.p_in > 1.0)
    throw std::invalid_argument("sbm: infeasible rates (within-block rate > 1)");
  return p;
}

SbmSample sbm_generate(const SbmParams& params, std::uint64_t seed) {
  const int block = params.n / params.k;
  SbmSample s;
  s.planted.label.resize(params.n);
  for (int v = 0; v < params.n; ++v) s.planted.label[v] = v / block;
  const auto& lab = s.planted.label;
  s.g = sample_pairs(params.n, seed, [&](int u, int v) {
    return lab[u] == lab[v] ? params.p_in : params.p_out;
  });
  return s;
}

OrgmParams orgm_params(int n, double c, double epsilon, double band_ratio) {
  if (n < 2) throw std::invalid_argument("orgm: need at least two vertices");
  if (!(c > 0.0)) throw std::invalid_argument("orgm: mean degree must be positive");
  if (epsilon < 0.0) throw std::invalid_argument("orgm: epsilon must be >= 0");
  OrgmParams p;
  p.n = n;
  p.c = c;
  p.epsilon = epsilon;
  p.band_ratio = band_ratio;
  p.band = static_cast<int>(std::llround(band_ratio * n));
  if (p.band < 1 || p.band > n - 1)
    throw std::invalid_argument("orgm: band width must land in [1, n-1]");
  p.in_pairs = static_cast<long long>(n) * p.band -
               static_cast<long long>(p.band) * (p.band + 1) / 2;
  const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
  const long long out_pairs = all_pairs - p.in_pairs;
  p.p_in = (c * n / 2.0) / (p.in_pairs + epsilon * out_pairs);
  p.p_out = epsilon * p.p_in;
  if (p.p_in > 1.0)
    throw std::invalid_argument("orgm: infeasible rates (in-band rate > 1)");
  return p;
}

OrgmSample orgm_generate(const OrgmParams& params, std::uint64_t seed) {
  OrgmSample s;
  s.planted = identity_ordering(params.n);
  s.g = sample_pairs(params.n, seed, [&](int u, int v) {
    return (v - u <= params.band) ? params.p_in : params.p_out;
  });
  return s;
}

}  // namespace seriate
