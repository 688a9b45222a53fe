#include <omp.h>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seriate/clustering.hpp"
#include "seriate/csv.hpp"
#include "seriate/graph.hpp"
#include "seriate/matrices.hpp"
#include "seriate/metrics.hpp"
#include "seriate/models.hpp"
#include "seriate/ordering.hpp"
#include "seriate/sweep.hpp"

namespace {

using namespace seriate;

std::vector<MatrixKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<MatrixKind> kinds;
  for (const auto& name : names) {
    if (name == "all")
      return {kAllMatrixKinds.begin(), kAllMatrixKinds.end()};
    kinds.push_back(matrix_kind_from_string(name));
  }
  return kinds;
}

MatrixOptions parse_matrix_options(const std::string& name, double r, bool has_r,
                                   double tau, bool has_tau) {
  MatrixOptions opts;
  opts.kind = matrix_kind_from_string(name);
  if (has_r) opts.r = r;
  if (has_tau) opts.tau = tau;
  return opts;
}

void write_or_print_ordering(const Ordering& ord, const std::string& out) {
  if (out.empty())
    write_ordering_csv(std::cout, ord);
  else
    write_ordering_csv_file(out, ord);
}

void write_or_print_partition(const Partition& p, const std::string& out) {
  if (out.empty())
    write_partition_csv(std::cout, p);
  else
    write_partition_csv_file(out, p);
}

void write_or_print_records(const std::vector<ResultRecord>& records,
                            const std::string& out) {
  if (out.empty())
    write_records_csv(std::cout, records);
  else
    write_records_csv_file(out, records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral ordering and clustering toolkit for graphs"};
  app.require_subcommand(1);

  // ---- gen-sbm ----------------------------------------------------------
  struct {
    int n = 0, k = 2;
    double c = 0.0, epsilon = 0.0;
    std::uint64_t seed = 0;
    std::string out, labels_out;
  } gsbm;
  auto* cmd_gsbm = app.add_subcommand(
      "gen-sbm", "Generate an equal-block planted-partition graph");
  cmd_gsbm->add_option("--n", gsbm.n, "Vertex count")->required();
  cmd_gsbm->add_option("--k", gsbm.k, "Number of blocks")->required();
  cmd_gsbm->add_option("--c", gsbm.c, "Target mean degree")->required();
  cmd_gsbm->add_option("--epsilon", gsbm.epsilon, "p_out / p_in")->required();
  cmd_gsbm->add_option("--seed", gsbm.seed, "Random seed");
  cmd_gsbm->add_option("--out", gsbm.out, "Edge-list output path")->required();
  cmd_gsbm->add_option("--labels-out", gsbm.labels_out,
                       "Write planted labels as vertex,label CSV");
  cmd_gsbm->callback([&] {
    SbmSample s = sbm_generate(sbm_params(gsbm.n, gsbm.k, gsbm.c, gsbm.epsilon),
                               gsbm.seed);
    write_edge_list_file(s.g, gsbm.out);
    if (!gsbm.labels_out.empty()) write_partition_csv_file(gsbm.labels_out, s.planted);
  });

  // ---- gen-orgm ---------------------------------------------------------
  struct {
    int n = 0;
    double c = 0.0, epsilon = 0.0, band_ratio = 0.0;
    std::uint64_t seed = 0;
    std::string out, ordering_out;
  } gorgm;
  auto* cmd_gorgm =
      app.add_subcommand("gen-orgm", "Generate a banded random graph");
  cmd_gorgm->add_option("--n", gorgm.n, "Vertex count")->required();
  cmd_gorgm->add_option("--c", gorgm.c, "Target mean degree")->required();
  cmd_gorgm->add_option("--epsilon", gorgm.epsilon, "p_out / p_in")->required();
  cmd_gorgm->add_option("--band-ratio", gorgm.band_ratio, "Band width / n")
      ->required();
  cmd_gorgm->add_option("--seed", gorgm.seed, "Random seed");
  cmd_gorgm->add_option("--out", gorgm.out, "Edge-list output path")->required();
  cmd_gorgm->add_option("--ordering-out", gorgm.ordering_out,
                        "Write the planted sequence as vertex,position CSV");
  cmd_gorgm->callback([&] {
    OrgmSample s = orgm_generate(
        orgm_params(gorgm.n, gorgm.c, gorgm.epsilon, gorgm.band_ratio), gorgm.seed);
    write_edge_list_file(s.g, gorgm.out);
    if (!gorgm.ordering_out.empty())
      write_ordering_csv_file(gorgm.ordering_out, s.planted);
  });

  // ---- order ------------------------------------------------------------
  struct {
    std::string input, matrix = "laplacian", out;
    double r = 0.0, tau = 0.0;
    bool second_smallest = false;
  } ord;
  auto* cmd_order = app.add_subcommand(
      "order", "Spectral vertex ordering from a chosen matrix kind");
  cmd_order->add_option("--input", ord.input, "Edge-list path")->required();
  auto* ord_matrix = cmd_order->add_option(
      "--matrix", ord.matrix,
      "laplacian | norm-laplacian | modularity | bethe-hessian | reg-laplacian | "
      "reg-adjacency");
  auto* ord_r = cmd_order->add_option("--r", ord.r, "Hyperparameter r");
  auto* ord_tau = cmd_order->add_option("--tau", ord.tau, "Regularization tau");
  cmd_order->add_flag("--reg-adj-second-smallest", ord.second_smallest,
                      "Order reg-adjacency by the second-smallest eigenvector "
                      "instead of the second-largest");
  cmd_order->add_option("--out", ord.out, "Ordering CSV path (default stdout)");
  (void)ord_matrix;
  cmd_order->callback([&] {
    Graph g = load_edge_list_file(ord.input);
    MatrixOptions opts = parse_matrix_options(ord.matrix, ord.r, ord_r->count() > 0,
                                              ord.tau, ord_tau->count() > 0);
    RegAdjacencyPick pick = ord.second_smallest ? RegAdjacencyPick::SecondSmallest
                                                : RegAdjacencyPick::SecondLargest;
    write_or_print_ordering(spectral_order(g, opts, pick), ord.out);
  });

  // ---- cluster ----------------------------------------------------------
  struct {
    std::string input, matrix = "laplacian", out;
    int k = 2;
    double r = 0.0, tau = 0.0;
    std::uint64_t seed = 0;
  } clu;
  auto* cmd_cluster =
      app.add_subcommand("cluster", "Spectral clustering into k groups");
  cmd_cluster->add_option("--input", clu.input, "Edge-list path")->required();
  cmd_cluster->add_option("--matrix", clu.matrix, "Matrix kind");
  cmd_cluster->add_option("--k", clu.k, "Number of groups");
  auto* clu_r = cmd_cluster->add_option("--r", clu.r, "Hyperparameter r");
  auto* clu_tau = cmd_cluster->add_option("--tau", clu.tau, "Regularization tau");
  cmd_cluster->add_option("--seed", clu.seed, "Random seed for k-means");
  cmd_cluster->add_option("--out", clu.out, "Partition CSV path (default stdout)");
  cmd_cluster->callback([&] {
    Graph g = load_edge_list_file(clu.input);
    MatrixOptions opts = parse_matrix_options(clu.matrix, clu.r, clu_r->count() > 0,
                                              clu.tau, clu_tau->count() > 0);
    write_or_print_partition(spectral_cluster(g, opts, clu.k, clu.seed), clu.out);
  });

  // ---- lce --------------------------------------------------------------
  struct {
    std::string labels, ordering;
  } lc;
  auto* cmd_lce = app.add_subcommand(
      "lce", "Label-continuity statistics of a partition along an ordering");
  cmd_lce->add_option("--labels", lc.labels, "vertex,label CSV")->required();
  cmd_lce->add_option("--ordering", lc.ordering, "vertex,position CSV")->required();
  cmd_lce->callback([&] {
    Partition sigma = read_partition_csv_file(lc.labels);
    Ordering pi = read_ordering_csv_file(lc.ordering);
    LceStats st = lce_stats(sigma, pi);
    std::cout << "same_label_pairs=" << st.same_label_pairs << "\n"
              << "continuity=" << format_double(st.continuity) << "\n"
              << "lce=" << format_double(st.lce) << "\n"
              << "max_lce=" << format_double(st.max_lce) << "\n"
              << "mean_lce=" << format_double(st.mean_lce) << "\n"
              << "var_lce=" << format_double(st.var_lce) << "\n";
    if (st.normalized)
      std::cout << "normalized_lce=" << format_double(*st.normalized) << "\n";
    else
      std::cout << "normalized_lce=undefined\n";
  });

  // ---- nmi --------------------------------------------------------------
  struct {
    std::string a, b;
  } nm;
  auto* cmd_nmi = app.add_subcommand(
      "nmi", "Normalized mutual information between two partitions");
  cmd_nmi->add_option("--a", nm.a, "vertex,label CSV")->required();
  cmd_nmi->add_option("--b", nm.b, "vertex,label CSV")->required();
  cmd_nmi->callback([&] {
    double v = nmi(read_partition_csv_file(nm.a), read_partition_csv_file(nm.b));
    std::cout << format_double(v) << "\n";
  });

  // ---- sweep-sbm --------------------------------------------------------
  struct {
    std::string config, out;
    int n = 0, trials = 1, threads = 0;
    double c = 0.0;
    std::vector<double> epsilons;
    std::vector<int> ks{2};
    std::vector<std::string> matrices{"all"};
    std::uint64_t seed = 0;
  } ssb;
  auto* cmd_ssbm = app.add_subcommand(
      "sweep-sbm", "Planted-partition sweep over epsilon x group-count cells");
  cmd_ssbm->add_option("--config", ssb.config, "JSON config (overrides flags)");
  cmd_ssbm->add_option("--n", ssb.n, "Vertex count");
  cmd_ssbm->add_option("--c", ssb.c, "Target mean degree");
  cmd_ssbm->add_option("--epsilon", ssb.epsilons, "Epsilon grid values");
  cmd_ssbm->add_option("--k", ssb.ks, "Group-count grid values");
  cmd_ssbm->add_option("--matrix", ssb.matrices, "Matrix kinds (or: all)");
  cmd_ssbm->add_option("--trials", ssb.trials, "Trials per cell");
  cmd_ssbm->add_option("--seed", ssb.seed, "Master seed");
  cmd_ssbm->add_option("--out", ssb.out, "Records CSV path (default stdout)");
  cmd_ssbm->add_option("--threads", ssb.threads, "Worker threads (0 = default)");
  cmd_ssbm->callback([&] {
    if (ssb.threads > 0) omp_set_num_threads(ssb.threads);
    SweepConfig cfg;
    if (!ssb.config.empty()) {
      cfg = sweep_config_from_json_file(ssb.config);
      if (cfg.model != "sbm") throw std::invalid_argument("config model is not sbm");
    } else {
      cfg.model = "sbm";
      cfg.n = ssb.n;
      cfg.c = ssb.c;
      cfg.epsilons = ssb.epsilons;
      cfg.group_counts = ssb.ks;
      cfg.matrices = parse_kinds(ssb.matrices);
      cfg.trials = ssb.trials;
      cfg.seed = ssb.seed;
    }
    if (!ssb.out.empty()) cfg.out = ssb.out;
    write_or_print_records(run_sbm_sweep(cfg), cfg.out);
  });

  // ---- sweep-orgm -------------------------------------------------------
  struct {
    std::string config, out;
    int n = 0, trials = 1, cluster_k = 2, threads = 0;
    double c = 0.0;
    std::vector<double> epsilons, band_ratios;
    std::vector<std::string> matrices{"all"};
    std::uint64_t seed = 0;
    bool include_ordering = false;
  } sog;
  auto* cmd_sorgm = app.add_subcommand(
      "sweep-orgm", "Banded-model sweep over epsilon x band-ratio cells");
  cmd_sorgm->add_option("--config", sog.config, "JSON config (overrides flags)");
  cmd_sorgm->add_option("--n", sog.n, "Vertex count");
  cmd_sorgm->add_option("--c", sog.c, "Target mean degree");
  cmd_sorgm->add_option("--epsilon", sog.epsilons, "Epsilon grid values");
  cmd_sorgm->add_option("--band-ratio", sog.band_ratios, "Band-ratio grid values");
  cmd_sorgm->add_option("--k", sog.cluster_k, "Clusters per cell");
  cmd_sorgm->add_option("--matrix", sog.matrices, "Matrix kinds (or: all)");
  cmd_sorgm->add_option("--trials", sog.trials, "Trials per cell");
  cmd_sorgm->add_option("--seed", sog.seed, "Master seed");
  cmd_sorgm->add_flag("--include-ordering", sog.include_ordering,
                      "Also record sequence recovery (kendall_tau)");
  cmd_sorgm->add_option("--out", sog.out, "Records CSV path (default stdout)");
  cmd_sorgm->add_option("--threads", sog.threads, "Worker threads (0 = default)");
  cmd_sorgm->callback([&] {
    if (sog.threads > 0) omp_set_num_threads(sog.threads);
    SweepConfig cfg;
    if (!sog.config.empty()) {
      cfg = sweep_config_from_json_file(sog.config);
      if (cfg.model != "orgm")
        throw std::invalid_argument("config model is not orgm");
    } else {
      cfg.model = "orgm";
      cfg.n = sog.n;
      cfg.c = sog.c;
      cfg.epsilons = sog.epsilons;
      cfg.band_ratios = sog.band_ratios;
      cfg.cluster_k = sog.cluster_k;
      cfg.matrices = parse_kinds(sog.matrices);
      cfg.trials = sog.trials;
      cfg.seed = sog.seed;
      cfg.include_ordering = sog.include_ordering;
    }
    if (!sog.out.empty()) cfg.out = sog.out;
    write_or_print_records(run_orgm_sweep(cfg), cfg.out);
  });

  // ---- sweep-bethe ------------------------------------------------------
  struct {
    std::string input, out;
    int points = 30, k_max = 4;
    std::vector<double> r_values;
  } sbh;
  auto* cmd_sbethe = app.add_subcommand(
      "sweep-bethe",
      "H2 of the leading eigenvector orderings across a grid of r values");
  cmd_sbethe->add_option("--input", sbh.input, "Edge-list path")->required();
  cmd_sbethe->add_option("--points", sbh.points,
                         "Log-spaced grid size when --r is not given");
  cmd_sbethe->add_option("--r", sbh.r_values, "Explicit r grid values");
  cmd_sbethe->add_option("--k-max", sbh.k_max, "Eigenvector indices 1..k-max");
  cmd_sbethe->add_option("--out", sbh.out, "CSV path (default stdout)");
  cmd_sbethe->callback([&] {
    Graph g = load_edge_list_file(sbh.input);
    std::vector<double> grid =
        sbh.r_values.empty() ? default_bethe_grid(g, sbh.points) : sbh.r_values;
    auto rows = bethe_sweep(g, grid, sbh.k_max);
    if (sbh.out.empty())
      write_bethe_csv(std::cout, rows);
    else
      write_bethe_csv_file(sbh.out, rows);
  });

  // ---- real -------------------------------------------------------------
  struct {
    std::string input, out, prefix;
    std::vector<std::string> matrices{"all"};
    std::vector<int> ks{2};
    std::uint64_t seed = 0;
  } rl;
  auto* cmd_real = app.add_subcommand(
      "real", "Order + cluster a loaded graph and export plot data");
  cmd_real->add_option("--input", rl.input, "Edge-list path")->required();
  cmd_real->add_option("--matrix", rl.matrices, "Matrix kinds (or: all)");
  cmd_real->add_option("--k", rl.ks, "Group counts to cluster into");
  cmd_real->add_option("--seed", rl.seed, "Random seed for k-means");
  cmd_real->add_option("--out-prefix", rl.prefix,
                       "Prefix for ordering/labels/reorder CSV exports "
                       "(no files when omitted)");
  cmd_real->add_option("--out", rl.out, "Records CSV path (default stdout)");
  cmd_real->callback([&] {
    Graph g = load_edge_list_file(rl.input);
    auto records = run_real(g, parse_kinds(rl.matrices), rl.ks, rl.seed, rl.prefix);
    write_or_print_records(records, rl.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
