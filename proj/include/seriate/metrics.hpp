#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seriate/clustering.hpp"
#include "seriate/ordering.hpp"

namespace seriate {

// m: number of adjacent positions in the sequence whose vertices share a label.
int continuity_count(const Partition& sigma, const Ordering& pi);

// C = m / (N - 1).
double label_continuity(const Partition& sigma, const Ordering& pi);

// Delta = 1 - (K-1)/(N-1) - C, computed as ((N-K) - m)/(N-1) so a block-sorted
// sequence gives exactly 0.
double lce_from_count(int n, int k, int m);
double lce(const Partition& sigma, const Ordering& pi);

// Smallest achievable m over all orderings for the given group sizes.
int min_continuity_count(const std::vector<int>& sizes);

// Largest achievable Delta over all orderings.
double max_lce(const std::vector<int>& sizes);

// Mean and variance of Delta when the label sequence is drawn i.i.d. with the
// group-size proportions.
double mean_lce(const std::vector<int>& sizes);
double var_lce(const std::vector<int>& sizes);

// Exact distribution of m = (N-1)C for equal group sizes under i.i.d. uniform
// labels: Binomial(N-1, 1/K). Index m runs 0..N-1.
std::vector<double> lce_null_pmf(int n, int k);

// Delta / mean Delta for the partition's own group sizes; errors when the mean
// is not positive (the metric has no resolution there).
double normalized_lce(const Partition& sigma, const Ordering& pi);

struct LceStats {
  int same_label_pairs = 0;  // m
  double continuity = 0.0;   // C
  double lce = 0.0;          // Delta
  double max_lce = 0.0;
  double mean_lce = 0.0;
  double var_lce = 0.0;
  std::optional<double> normalized;  // absent when mean_lce <= 0
};
LceStats lce_stats(const Partition& sigma, const Ordering& pi);

// Normalized mutual information, 2 I(a;b) / (H(a) + H(b)), natural logs.
// Both partitions trivial (one group each) is defined as 1.
double nmi(const Partition& a, const Partition& b);

// Range of Delta(pi, sigma') - Delta(pi, sigma) when sigma' splits one group of
// sigma into children of sizes c1 and c2, on n vertices total.
std::pair<double, double> nested_lce_bounds(int c1, int c2, int n);

double max_group_fraction(const Partition& sigma);

// Kendall rank correlation between two orderings, via inversion counting.
double kendall_tau(const Ordering& a, const Ordering& b);

}  // namespace seriate
