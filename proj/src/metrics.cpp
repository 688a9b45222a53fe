#include "seriate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace seriate {

namespace {

void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("lce: no groups");
  long long n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("lce: group sizes must be positive");
    n += s;
  }
  if (n < 2) throw std::invalid_argument("lce: need at least two vertices");
}

int total_of(const std::vector<int>& sizes) {
  return static_cast<int>(std::accumulate(sizes.begin(), sizes.end(), 0LL));
}

void check_pair(const Partition& sigma, const Ordering& pi) {
  if (sigma.n() != pi.n())
    throw std::invalid_argument("lce: partition and ordering sizes differ");
  if (sigma.n() < 2) throw std::invalid_argument("lce: need at least two vertices");
}

// Sum over the inversion count of arr, destroying it (merge sort).
long long count_inversions(std::vector<int>& arr, std::vector<int>& buf, int lo,
                           int hi) {
  if (hi - lo < 2) return 0;
  int mid = (lo + hi) / 2;
  long long inv = count_inversions(arr, buf, lo, mid) +
                  count_inversions(arr, buf, mid, hi);
  int i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (arr[i] <= arr[j]) {
      buf[out++] = arr[i++];
    } else {
      inv += mid - i;
      buf[out++] = arr[j++];
    }
  }
  while (i < mid) buf[out++] = arr[i++];
  while (j < hi) buf[out++] = arr[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, arr.begin() + lo);
  return inv;
}

}  // namespace

int continuity_count(const Partition& sigma, const Ordering& pi) {
  check_pair(sigma, pi);
  std::vector<int> at = inverse(pi);
  int m = 0;
  for (std::size_t p = 0; p + 1 < at.size(); ++p)
    if (sigma.label[at[p]] == sigma.label[at[p + 1]]) ++m;
  return m;
}

double label_continuity(const Partition& sigma, const Ordering& pi) {
  return static_cast<double>(continuity_count(sigma, pi)) / (sigma.n() - 1);
}

double lce_from_count(int n, int k, int m) {
  return static_cast<double>((n - k) - m) / (n - 1);
}

double lce(const Partition& sigma, const Ordering& pi) {
  return lce_from_count(sigma.n(), sigma.k(), continuity_count(sigma, pi));
}

int min_continuity_count(const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int n = total_of(sizes);
  const int largest = *std::max_element(sizes.begin(), sizes.end());
  const int half_up = (n + 1) / 2;
  return largest > half_up ? 2 * largest - n - 1 : 0;
}

double max_lce(const std::vector<int>& sizes) {
  check_sizes(sizes);
  return lce_from_count(total_of(sizes), static_cast<int>(sizes.size()),
                        min_continuity_count(sizes));
}

double mean_lce(const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int n = total_of(sizes);
  const int k = static_cast<int>(sizes.size());
  double q2 = 0.0;
  for (int s : sizes) {
    double q = static_cast<double>(s) / n;
    q2 += q * q;
  }
  return static_cast<double>(n - k) / (n - 1) - q2;
}

double var_lce(const std::vector<int>& sizes) {
  check_sizes(sizes);
  const int n = total_of(sizes);
  double q2 = 0.0, q3 = 0.0;
  for (int s : sizes) {
    double q = static_cast<double>(s) / n;
    q2 += q * q;
    q3 += q * q * q;
  }
  const double nm1 = n - 1.0;
  double v = q2 / nm1 + 2.0 * (n - 2) / (nm1 * nm1) * q3 -
             (3.0 * n - 5.0) / (nm1 * nm1) * q2 * q2;
  return std::max(v, 0.0);  // clamp tiny negative roundoff at q2 -> 1
}

std::vector<double> lce_null_pmf(int n, int k) {
  if (n < 2) throw std::invalid_argument("null pmf: need at least two vertices");
  if (k < 1 || n % k != 0)
    throw std::invalid_argument(
        "null pmf: group count must divide the vertex count (equal sizes)");
  const double p = 1.0 / k;
  std::vector<double> pmf(static_cast<std::size_t>(n - 1) + 1);
  // Binomial(n-1, p) masses, built up from logs for stability.
  double log_p = std::log(p), log_q = std::log1p(-p);
  std::vector<double> log_fact(static_cast<std::size_t>(n), 0.0);
  for (int i = 2; i < n; ++i) log_fact[i] = log_fact[i - 1] + std::log(i);
  for (int m = 0; m <= n - 1; ++m) {
    if (k == 1) {
      pmf[m] = (m == n - 1) ? 1.0 : 0.0;
      continue;
    }
    double log_mass = log_fact[n - 1] - log_fact[m] - log_fact[n - 1 - m] +
                      m * log_p + (n - 1 - m) * log_q;
    pmf[m] = std::exp(log_mass);
  }
  return pmf;
}

double normalized_lce(const Partition& sigma, const Ordering& pi) {
  check_pair(sigma, pi);
  const double mean = mean_lce(group_sizes(sigma));
  if (mean <= 0.0)
    throw std::invalid_argument(
        "normalized lce: mean under random sequences is not positive at this "
        "group resolution");
  return lce(sigma, pi) / mean;
}

LceStats lce_stats(const Partition& sigma, const Ordering& pi) {
  check_pair(sigma, pi);
  const auto sizes = group_sizes(sigma);
  LceStats st;
  st.same_label_pairs = continuity_count(sigma, pi);
  st.continuity = static_cast<double>(st.same_label_pairs) / (sigma.n() - 1);
  st.lce = lce_from_count(sigma.n(), sigma.k(), st.same_label_pairs);
  st.max_lce = max_lce(sizes);
  st.mean_lce = mean_lce(sizes);
  st.var_lce = var_lce(sizes);
  if (st.mean_lce > 0.0) st.normalized = st.lce / st.mean_lce;
  return st;
}

double nmi(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("nmi: partition sizes differ");
  if (a.n() == 0) throw std::invalid_argument("nmi: empty partitions");
  const int n = a.n();
  const int ka = a.k(), kb = b.k();
  std::vector<long long> joint(static_cast<std::size_t>(ka) * kb, 0);
  std::vector<long long> ca(ka, 0), cb(kb, 0);
  for (int i = 0; i < n; ++i) {
    ++joint[static_cast<std::size_t>(a.label[i]) * kb + b.label[i]];
    ++ca[a.label[i]];
    ++cb[b.label[i]];
  }
  auto entropy = [n](const std::vector<long long>& counts) {
    double h = 0.0;
    for (long long c : counts)
      if (c > 0) {
        double p = static_cast<double>(c) / n;
        h -= p * std::log(p);
      }
    return h;
  };
  const double ha = entropy(ca), hb = entropy(cb);
  if (ha + hb == 0.0) return 1.0;  // both trivial one-group partitions

  double mi = 0.0;
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < kb; ++j) {
      long long c = joint[static_cast<std::size_t>(i) * kb + j];
      if (c == 0) continue;
      double pij = static_cast<double>(c) / n;
      mi += pij * std::log(static_cast<double>(c) * n /
                           (static_cast<double>(ca[i]) * cb[j]));
    }
  return 2.0 * mi / (ha + hb);
}

std::pair<double, double> nested_lce_bounds(int c1, int c2, int n) {
  if (c1 < 1 || c2 < 1) throw std::invalid_argument("nested bounds: child sizes must be positive");
  if (c1 + c2 > n) throw std::invalid_argument("nested bounds: split larger than graph");
  if (n < 2) throw std::invalid_argument("nested bounds: need at least two vertices");
  const double lower = -1.0 / (n - 1);
  const int delta_eq = (c1 == c2) ? 1 : 0;
  const double upper =
      static_cast<double>(2 * std::min(c1, c2) - delta_eq - 1) / (n - 1);
  return {lower, upper};
}

double max_group_fraction(const Partition& sigma) {
  if (sigma.n() == 0) throw std::invalid_argument("max group fraction: empty partition");
  const auto sizes = group_sizes(sigma);
  return static_cast<double>(*std::max_element(sizes.begin(), sizes.end())) /
         sigma.n();
}

double kendall_tau(const Ordering& a, const Ordering& b) {
  if (a.n() != b.n()) throw std::invalid_argument("kendall tau: sizes differ");
  const int n = a.n();
  if (n < 2) throw std::invalid_argument("kendall tau: need at least two items");
  // Walk vertices in a-order; count inversions of their b-positions.
  std::vector<int> at = inverse(a);
  std::vector<int> seq(n);
  for (int p = 0; p < n; ++p) seq[p] = b.position[at[p]];
  std::vector<int> buf(n);
  long long inv = count_inversions(seq, buf, 0, n);
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  return static_cast<double>(pairs - 2 * inv) / pairs;
}

}  // namespace seriate
