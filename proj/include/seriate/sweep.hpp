#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seriate/graph.hpp"
#include "seriate/matrices.hpp"
#include "seriate/ordering.hpp"

namespace seriate {

// Axes and bookkeeping for one parameter sweep. SBM sweeps cross epsilons x
// group_counts; banded-model sweeps cross epsilons x band_ratios and cluster
// into cluster_k groups.
struct SweepConfig {
  std::string model;  // "sbm" | "orgm"
  int n = 0;
  double c = 0.0;
  std::vector<double> epsilons;
  std::vector<int> group_counts;    // sbm: planted blocks = clusters per cell
  std::vector<double> band_ratios;  // orgm
  int cluster_k = 2;                // orgm
  std::vector<MatrixKind> matrices = {kAllMatrixKinds.begin(),
                                      kAllMatrixKinds.end()};
  int trials = 1;
  std::uint64_t seed = 0;
  std::string out;                    // output CSV path (used by the CLI)
  bool include_ordering = false;      // orgm: also record kendall_tau
};

SweepConfig sweep_config_from_json(const std::string& text);
SweepConfig sweep_config_from_json_file(const std::string& path);

// One metric observation. Optional fields are blank columns in the CSV.
struct ResultRecord {
  std::string model;
  int n = 0;
  std::optional<double> c;
  std::optional<double> epsilon;
  std::optional<int> k;
  std::optional<double> band_ratio;
  MatrixKind matrix = MatrixKind::Laplacian;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string metric;
  std::optional<double> value;  // absent on failure
  bool ok = true;
};

// Per (epsilon, K, matrix, trial): generate, shuffle, order, cluster; records
// "normalized_lce" (ordering vs planted blocks) and "nmi" (clusters vs planted
// blocks). Failed trials keep their record slots with status=failed.
std::vector<ResultRecord> run_sbm_sweep(const SweepConfig& cfg);

// Per (epsilon, band_ratio, matrix, trial): generate, shuffle, cluster;
// records "normalized_lce" (clusters vs planted sequence) and
// "max_group_fraction"; with include_ordering also "kendall_tau" (recovered
// vs planted sequence, orientation-independent).
std::vector<ResultRecord> run_orgm_sweep(const SweepConfig& cfg);

// Per (matrix, K) on a loaded graph: order + cluster, record
// "normalized_lce" between them; write ordering/labels/reordered-adjacency
// CSVs under export_prefix (no files when the prefix is empty). Kinds that
// reject the graph (e.g. degree-0 vertices with degree-normalized kinds) are
// reported to stderr and recorded as failed; the rest proceed.
std::vector<ResultRecord> run_real(const Graph& g,
                                   const std::vector<MatrixKind>& kinds,
                                   const std::vector<int>& group_counts,
                                   std::uint64_t seed,
                                   const std::string& export_prefix);

void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records);
void write_records_csv_file(const std::string& path,
                            const std::vector<ResultRecord>& records);

void write_bethe_csv(std::ostream& out, const std::vector<BetheSweepRow>& rows);
void write_bethe_csv_file(const std::string& path,
                          const std::vector<BetheSweepRow>& rows);

}  // namespace seriate
