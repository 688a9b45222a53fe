#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "seriate/graph.hpp"
#include "seriate/ordering.hpp"

// Slow, independent implementations used to cross-check the production code
// in tests and benchmarks. Everything here is deliberately serial and written
// from first principles rather than sharing code with the library.
namespace seriate::reference {

struct EigResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // unit columns, first nonzero component positive
};

// Cyclic Jacobi rotations on a dense symmetric matrix.
EigResult jacobi_eig(const Eigen::MatrixXd& m);

// Plain serial sum of squared position differences over edges.
std::int64_t h2_serial(const Graph& g, const Ordering& ord);

// Exhaustive minimum of h2 over all n! orderings (n <= 10).
std::int64_t min_h2_exhaustive(const Graph& g);

// Smallest achievable number of adjacent same-label pairs over all
// arrangements of the given multiset of labels (exhaustive).
int min_same_label_pairs_exhaustive(const std::vector<int>& labels);

// counts[m] = number of length-n sequences over k symbols with exactly m
// equal adjacent pairs, by the transition recurrence
//   w(i+1, m) = (k-1) w(i, m) + w(i, m-1).
std::vector<std::uint64_t> null_counts_recurrence(int n, int k);

// The same counts by brute enumeration of all k^n sequences (k^n <= 1e7).
std::vector<std::uint64_t> null_counts_enumerated(int n, int k);

// Monte-Carlo (mean, sample variance) of the sequence/partition deviation
// score Delta for i.i.d. label sequences drawn with proportions sizes/n.
// Draws are split over 64 fixed shards with derived seeds, so the result is
// identical for any worker count.
std::pair<double, double> sample_lce_moments(const std::vector<int>& sizes,
                                             int draws, std::uint64_t seed);

// Optimal 2-means objective for 1-D data (exhaustive over sorted splits).
double best_two_means_objective_1d(std::vector<double> xs);

// Quadratic-time Kendall correlation.
double kendall_tau_quadratic(const Ordering& a, const Ordering& b);

}  // namespace seriate::reference
