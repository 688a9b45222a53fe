// Timing harness comparing the parallel kernels against their serial
// reference counterparts, and checking that results are identical. Run time
// scales with hardware; on a single-core host the parallel columns simply
// match the serial ones.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "seriate/clustering.hpp"
#include "seriate/matrices.hpp"
#include "seriate/models.hpp"
#include "seriate/ordering.hpp"
#include "seriate/reference.hpp"
#include "seriate/spectrum.hpp"
#include "seriate/sweep.hpp"

using namespace seriate;

namespace {

double time_seconds(const std::function<void()>& fn, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, const char* config, double serial, double parallel,
         bool identical) {
  std::printf("%-26s %-28s %10.4fs %10.4fs %8.2fx   %s\n", name, config, serial,
              parallel, serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  const int max_threads = omp_get_max_threads();
  std::printf("threads available: %d\n\n", max_threads);
  std::printf("%-26s %-28s %11s %11s %9s   %s\n", "kernel", "config", "serial",
              "parallel", "speedup", "check");

  {  // h2 reduction over edges
    SbmParams p = sbm_params(3000, 2, 100.0, 1.0);
    SbmSample s = sbm_generate(p, 7);
    Ordering ord = identity_ordering(s.g.n);
    std::int64_t a = 0, b = 0;
    double ts = time_seconds([&] { a = reference::h2_serial(s.g, ord); }, 5);
    double tp = time_seconds([&] { b = h2(s.g, ord); }, 5);
    row("h2 edge reduction", "n=3000, m~150k", ts, tp, a == b);
  }

  {  // graph generation, row-parallel vs forced single thread
    SbmParams p = sbm_params(2000, 2, 8.0, 0.3);
    Graph g1, gT;
    omp_set_num_threads(1);
    double ts = time_seconds([&] { g1 = sbm_generate(p, 11).g; });
    omp_set_num_threads(max_threads);
    double tp = time_seconds([&] { gT = sbm_generate(p, 11).g; });
    row("block-model generation", "n=2000 (1 vs max threads)", ts, tp, g1 == gT);
  }

  {  // eigendecomposition: Jacobi reference vs production solver
    OrgmParams p = orgm_params(300, 8.0, 0.2, 0.1);
    OrgmSample s = orgm_generate(p, 3);
    Eigen::MatrixXd m = build_matrix(s.g, {MatrixKind::Laplacian, {}, {}});
    reference::EigResult ref;
    Spectrum prod;
    double ts = time_seconds([&] { ref = reference::jacobi_eig(m); }, 1);
    double tp = time_seconds([&] { prod = eig_symmetric_full(m); }, 1);
    bool close = (ref.values - prod.values).cwiseAbs().maxCoeff() < 1e-8;
    row("dense eigendecomposition", "laplacian, n=300", ts, tp, close);
  }

  {  // k-means restarts
    OrgmParams p = orgm_params(1000, 8.0, 0.2, 0.1);
    OrgmSample s = orgm_generate(p, 5);
    Eigen::MatrixXd emb = spectral_embed(s.g, {MatrixKind::Laplacian, {}, {}}, 4);
    KMeansOptions ko;
    ko.k = 4;
    ko.seed = 9;
    KMeansResult r1, rT;
    omp_set_num_threads(1);
    double ts = time_seconds([&] { r1 = kmeans(emb, ko); });
    omp_set_num_threads(max_threads);
    double tp = time_seconds([&] { rT = kmeans(emb, ko); });
    row("k-means restarts", "n=1000, k=4, 50 restarts", ts, tp,
        r1.label == rT.label && r1.objective == rT.objective);
  }

  {  // end-to-end sweep determinism across thread counts
    SweepConfig cfg;
    cfg.model = "sbm";
    cfg.n = 120;
    cfg.c = 8.0;
    cfg.epsilons = {0.1, 0.5};
    cfg.group_counts = {2};
    cfg.trials = 3;
    cfg.seed = 42;
    std::ostringstream buf1, bufT;
    omp_set_num_threads(1);
    double ts = time_seconds(
        [&] { buf1.str(""); write_records_csv(buf1, run_sbm_sweep(cfg)); }, 1);
    omp_set_num_threads(max_threads);
    double tp = time_seconds(
        [&] { bufT.str(""); write_records_csv(bufT, run_sbm_sweep(cfg)); }, 1);
    row("sbm sweep (csv bytes)", "n=120, 12 trials, 6 kinds", ts, tp,
        buf1.str() == bufT.str());
  }

  return 0;
}
