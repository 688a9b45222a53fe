#include "seriate/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "seriate/clustering.hpp"
#include "seriate/csv.hpp"
#include "seriate/metrics.hpp"
#include "seriate/models.hpp"
#include "seriate/rng.hpp"
#include "seriate/spectrum.hpp"

namespace seriate {

namespace {

void check_common(const SweepConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("sweep: n must be >= 2");
  if (!(cfg.c > 0.0)) throw std::invalid_argument("sweep: c must be positive");
  if (cfg.epsilons.empty()) throw std::invalid_argument("sweep: empty epsilon grid");
  if (cfg.matrices.empty()) throw std::invalid_argument("sweep: no matrix kinds");
  if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
}

// Planted data carried through the vertex shuffle (and, for the
// degree-normalized kind, through the drop of isolated vertices).
struct SbmInstance {
  Graph g;
  Partition planted;
};

struct OrgmInstance {
  Graph g;
  Ordering planted;
};

SbmInstance shuffled_sbm(const SbmParams& params, std::uint64_t trial_seed) {
  SbmSample sample = sbm_generate(params, trial_seed);
  Rng rng(mix_seed({trial_seed, kSaltShuffle}));
  std::vector<int> perm = rng.permutation(params.n);
  SbmInstance inst;
  inst.g = relabel(sample.g, perm);
  inst.planted.label.resize(params.n);
  for (int v = 0; v < params.n; ++v)
    inst.planted.label[perm[v]] = sample.planted.label[v];
  return inst;
}

OrgmInstance shuffled_orgm(const OrgmParams& params, std::uint64_t trial_seed) {
  OrgmSample sample = orgm_generate(params, trial_seed);
  Rng rng(mix_seed({trial_seed, kSaltShuffle}));
  std::vector<int> perm = rng.permutation(params.n);
  OrgmInstance inst;
  inst.g = relabel(sample.g, perm);
  inst.planted.position.resize(params.n);
  for (int v = 0; v < params.n; ++v) inst.planted.position[perm[v]] = v;
  return inst;
}

// The degree-normalized kind rejects isolated vertices outright; sweeps score
// it on the induced subgraph of non-isolated vertices instead, restricting the
// planted data the same way.
void drop_isolated(SbmInstance& inst) {
  std::vector<int> keep = vertices_with_degree(inst.g);
  if (static_cast<int>(keep.size()) == inst.g.n) return;
  if (keep.size() < 2) throw std::runtime_error("fewer than two non-isolated vertices");
  std::vector<int> labels(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    labels[i] = inst.planted.label[keep[i]];
  inst.g = induced_subgraph(inst.g, keep);
  inst.planted = canonicalize_labels(labels);
}

void drop_isolated(OrgmInstance& inst) {
  std::vector<int> keep = vertices_with_degree(inst.g);
  if (static_cast<int>(keep.size()) == inst.g.n) return;
  if (keep.size() < 2) throw std::runtime_error("fewer than two non-isolated vertices");
  // Kept vertices keep their relative planted order, re-ranked 0..n'-1.
  std::vector<int> by_planted(keep.begin(), keep.end());
  std::sort(by_planted.begin(), by_planted.end(), [&](int a, int b) {
    return inst.planted.position[a] < inst.planted.position[b];
  });
  std::vector<int> rank(inst.g.n, -1);
  for (std::size_t r = 0; r < by_planted.size(); ++r) rank[by_planted[r]] = static_cast<int>(r);
  Ordering restricted;
  restricted.position.resize(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    restricted.position[i] = rank[keep[i]];
  inst.g = induced_subgraph(inst.g, keep);
  inst.planted = std::move(restricted);
}

Partition cluster_from_spectrum(const Graph& g, const MatrixOptions& opts,
                                const Spectrum& full, int k, std::uint64_t seed) {
  Eigen::MatrixXd emb = embed_from_spectrum(g, opts, full, k);
  KMeansOptions kopts;
  kopts.k = k;
  kopts.seed = seed;
  return canonicalize_labels(kmeans(emb, kopts).label);
}

void fill_value(ResultRecord& rec, double value) {
  if (!std::isfinite(value)) return;  // leave the record failed
  rec.value = value;
  rec.ok = true;
}

}  // namespace

std::vector<ResultRecord> run_sbm_sweep(const SweepConfig& cfg) {
  check_common(cfg);
  if (cfg.group_counts.empty())
    throw std::invalid_argument("sweep: empty group-count grid");

  const int n_eps = static_cast<int>(cfg.epsilons.size());
  const int n_k = static_cast<int>(cfg.group_counts.size());
  const int n_mat = static_cast<int>(cfg.matrices.size());
  const int cells = n_eps * n_k * n_mat;
  const int tasks = cells * cfg.trials;

  std::vector<ResultRecord> records(static_cast<std::size_t>(tasks) * 2);
  for (int task = 0; task < tasks; ++task) {
    const int cell = task / cfg.trials;
    const int trial = task % cfg.trials;
    const int m_idx = cell % n_mat;
    const int k_idx = (cell / n_mat) % n_k;
    const int e_idx = cell / (n_mat * n_k);
    ResultRecord base;
    base.model = "sbm";
    base.n = cfg.n;
    base.c = cfg.c;
    base.epsilon = cfg.epsilons[e_idx];
    base.k = cfg.group_counts[k_idx];
    base.matrix = cfg.matrices[m_idx];
    base.trial = trial;
    base.seed = mix_seed({cfg.seed, static_cast<std::uint64_t>(cell),
                          static_cast<std::uint64_t>(trial)});
    base.ok = false;
    base.metric = "normalized_lce";
    records[static_cast<std::size_t>(task) * 2] = base;
    base.metric = "nmi";
    records[static_cast<std::size_t>(task) * 2 + 1] = base;
  }

#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < tasks; ++task) {
    ResultRecord& lce_rec = records[static_cast<std::size_t>(task) * 2];
    ResultRecord& nmi_rec = records[static_cast<std::size_t>(task) * 2 + 1];
    const int k = *lce_rec.k;
    try {
      SbmParams params = sbm_params(cfg.n, k, cfg.c, *lce_rec.epsilon);
      SbmInstance inst = shuffled_sbm(params, lce_rec.seed);
      if (lce_rec.matrix == MatrixKind::NormLaplacian) drop_isolated(inst);
      if (inst.g.m() < 1) throw std::runtime_error("empty instance");

      MatrixOptions opts = resolve_defaults(inst.g, {lce_rec.matrix, {}, {}});
      Spectrum full = eig_symmetric_full(build_matrix(inst.g, opts));

      try {
        Ordering pi = rank_discretize(ordering_vector_from_spectrum(
            inst.g, opts, full, RegAdjacencyPick::SecondLargest));
        fill_value(lce_rec, normalized_lce(inst.planted, pi));
      } catch (const std::exception&) {
      }
      try {
        Partition sigma =
            cluster_from_spectrum(inst.g, opts, full, k, lce_rec.seed);
        fill_value(nmi_rec, nmi(sigma, inst.planted));
      } catch (const std::exception&) {
      }
    } catch (const std::exception&) {
      // generation or decomposition failed: both records stay failed
    }
  }
  return records;
}

std::vector<ResultRecord> run_orgm_sweep(const SweepConfig& cfg) {
  check_common(cfg);
  if (cfg.band_ratios.empty())
    throw std::invalid_argument("sweep: empty band-ratio grid");
  if (cfg.cluster_k < 2) throw std::invalid_argument("sweep: cluster_k must be >= 2");

  const int n_eps = static_cast<int>(cfg.epsilons.size());
  const int n_band = static_cast<int>(cfg.band_ratios.size());
  const int n_mat = static_cast<int>(cfg.matrices.size());
  const int cells = n_eps * n_band * n_mat;
  const int tasks = cells * cfg.trials;
  const int per_task = cfg.include_ordering ? 3 : 2;

  std::vector<ResultRecord> records(static_cast<std::size_t>(tasks) * per_task);
  for (int task = 0; task < tasks; ++task) {
    const int cell = task / cfg.trials;
    const int trial = task % cfg.trials;
    const int m_idx = cell % n_mat;
    const int b_idx = (cell / n_mat) % n_band;
    const int e_idx = cell / (n_mat * n_band);
    ResultRecord base;
    base.model = "orgm";
    base.n = cfg.n;
    base.c = cfg.c;
    base.epsilon = cfg.epsilons[e_idx];
    base.k = cfg.cluster_k;
    base.band_ratio = cfg.band_ratios[b_idx];
    base.matrix = cfg.matrices[m_idx];
    base.trial = trial;
    base.seed = mix_seed({cfg.seed, static_cast<std::uint64_t>(cell),
                          static_cast<std::uint64_t>(trial)});
    base.ok = false;
    base.metric = "normalized_lce";
    records[static_cast<std::size_t>(task) * per_task] = base;
    base.metric = "max_group_fraction";
    records[static_cast<std::size_t>(task) * per_task + 1] = base;
    if (cfg.include_ordering) {
      base.metric = "kendall_tau";
      records[static_cast<std::size_t>(task) * per_task + 2] = base;
    }
  }

#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < tasks; ++task) {
    ResultRecord& lce_rec = records[static_cast<std::size_t>(task) * per_task];
    ResultRecord& frac_rec = records[static_cast<std::size_t>(task) * per_task + 1];
    try {
      OrgmParams params =
          orgm_params(cfg.n, cfg.c, *lce_rec.epsilon, *lce_rec.band_ratio);
      OrgmInstance inst = shuffled_orgm(params, lce_rec.seed);
      if (lce_rec.matrix == MatrixKind::NormLaplacian) drop_isolated(inst);
      if (inst.g.m() < 1) throw std::runtime_error("empty instance");

      MatrixOptions opts = resolve_defaults(inst.g, {lce_rec.matrix, {}, {}});
      Spectrum full = eig_symmetric_full(build_matrix(inst.g, opts));

      try {
        Partition sigma = cluster_from_spectrum(inst.g, opts, full,
                                                cfg.cluster_k, lce_rec.seed);
        fill_value(frac_rec, max_group_fraction(sigma));
        fill_value(lce_rec, normalized_lce(sigma, inst.planted));
      } catch (const std::exception&) {
      }
      if (cfg.include_ordering) {
        ResultRecord& tau_rec =
            records[static_cast<std::size_t>(task) * per_task + 2];
        try {
          Ordering pi = rank_discretize(ordering_vector_from_spectrum(
              inst.g, opts, full, RegAdjacencyPick::SecondLargest));
          double tau = kendall_tau(pi, inst.planted);
          double tau_rev = kendall_tau(pi, reverse(inst.planted));
          fill_value(tau_rec, std::max(std::abs(tau), std::abs(tau_rev)));
        } catch (const std::exception&) {
        }
      }
    } catch (const std::exception&) {
    }
  }
  return records;
}

std::vector<ResultRecord> run_real(const Graph& g,
                                   const std::vector<MatrixKind>& kinds,
                                   const std::vector<int>& group_counts,
                                   std::uint64_t seed,
                                   const std::string& export_prefix) {
  if (kinds.empty()) throw std::invalid_argument("real: no matrix kinds");
  if (group_counts.empty()) throw std::invalid_argument("real: no group counts");
  for (int k : group_counts)
    if (k < 2 || k > g.n)
      throw std::invalid_argument("real: group counts must be in [2, n]");

  std::vector<ResultRecord> records;
  for (MatrixKind kind : kinds) {
    ResultRecord base;
    base.model = "real";
    base.n = g.n;
    base.matrix = kind;
    base.seed = seed;
    base.metric = "normalized_lce";
    base.ok = false;

    MatrixOptions opts;
    Spectrum full;
    Ordering pi;
    bool kind_ok = false;
    try {
      opts = resolve_defaults(g, {kind, {}, {}});
      full = eig_symmetric_full(build_matrix(g, opts));
      pi = rank_discretize(ordering_vector_from_spectrum(
          g, opts, full, RegAdjacencyPick::SecondLargest));
      kind_ok = true;
      if (!export_prefix.empty())
        write_ordering_csv_file(export_prefix + to_string(kind) + "_ordering.csv",
                                pi);
    } catch (const std::exception& e) {
      std::cerr << "error: " << to_string(kind) << ": " << e.what() << "\n";
    }

    for (int k : group_counts) {
      ResultRecord rec = base;
      rec.k = k;
      if (kind_ok) {
        try {
          Partition sigma = cluster_from_spectrum(g, opts, full, k, seed);
          fill_value(rec, normalized_lce(sigma, pi));
          if (!export_prefix.empty()) {
            const std::string stem =
                export_prefix + to_string(kind) + "_k" + std::to_string(k);
            write_partition_csv_file(stem + "_labels.csv", sigma);
            write_reorder_csv_file(stem + "_reorder.csv", g, pi, sigma);
          }
        } catch (const std::exception& e) {
          std::cerr << "error: " << to_string(kind) << " k=" << k << ": "
                    << e.what() << "\n";
        }
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

SweepConfig sweep_config_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SweepConfig cfg;
  cfg.model = j.at("model").get<std::string>();
  if (cfg.model != "sbm" && cfg.model != "orgm")
    throw std::invalid_argument("config: model must be \"sbm\" or \"orgm\"");
  cfg.n = j.at("n").get<int>();
  cfg.c = j.at("c").get<double>();
  cfg.epsilons = j.at("epsilons").get<std::vector<double>>();
  if (j.contains("group_counts"))
    cfg.group_counts = j["group_counts"].get<std::vector<int>>();
  if (j.contains("band_ratios"))
    cfg.band_ratios = j["band_ratios"].get<std::vector<double>>();
  if (j.contains("cluster_k")) cfg.cluster_k = j["cluster_k"].get<int>();
  if (j.contains("matrices")) {
    cfg.matrices.clear();
    for (const auto& name : j["matrices"])
      cfg.matrices.push_back(matrix_kind_from_string(name.get<std::string>()));
  }
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("include_ordering"))
    cfg.include_ordering = j["include_ordering"].get<bool>();
  return cfg;
}

SweepConfig sweep_config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return sweep_config_from_json(ss.str());
}

namespace {

std::string opt_str(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
  out << "model,n,c,epsilon,k,band_ratio,matrix,trial,seed,metric,value,status\n";
  for (const auto& r : records) {
    out << r.model << ',' << r.n << ',' << opt_str(r.c) << ',' << opt_str(r.epsilon)
        << ',' << (r.k ? std::to_string(*r.k) : std::string()) << ','
        << opt_str(r.band_ratio) << ',' << to_string(r.matrix) << ',' << r.trial
        << ',' << r.seed << ',' << r.metric << ',' << opt_str(r.value) << ','
        << (r.ok ? "ok" : "failed") << '\n';
  }
}

void write_records_csv_file(const std::string& path,
                            const std::vector<ResultRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_records_csv(out, records);
}

void write_bethe_csv(std::ostream& out, const std::vector<BetheSweepRow>& rows) {
  out << "r,k,h2\n";
  for (const auto& row : rows)
    out << format_double(row.r) << ',' << row.k << ',' << row.h2 << '\n';
}

void write_bethe_csv_file(const std::string& path,
                          const std::vector<BetheSweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_bethe_csv(out, rows);
}

}  // namespace seriate
