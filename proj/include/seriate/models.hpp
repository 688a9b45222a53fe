#pragma once

#include <cstdint>

#include "seriate/clustering.hpp"
#include "seriate/graph.hpp"
#include "seriate/ordering.hpp"

namespace seriate {

// Planted-partition block model: k equal blocks of contiguous vertices,
// within-block rate p_in, cross-block rate p_out = epsilon * p_in, with p_in
// chosen so the expected mean degree is c.
struct SbmParams {
  int n = 0;
  int k = 2;
  double c = 0.0;        // target mean degree
  double epsilon = 0.0;  // p_out / p_in
  double p_in = 0.0;     // derived
  double p_out = 0.0;    // derived
};

SbmParams sbm_params(int n, int k, double c, double epsilon);

struct SbmSample {
  Graph g;
  Partition planted;
};

SbmSample sbm_generate(const SbmParams& params, std::uint64_t seed);

// Banded random graph: pairs within |i-j| <= band connect at rate p_in, the
// rest at p_out = epsilon * p_in, with p_in chosen so the expected mean degree
// is c. The planted sequence is the identity ordering.
struct OrgmParams {
  int n = 0;
  double c = 0.0;
  double epsilon = 0.0;
  double band_ratio = 0.0;
  int band = 0;            // derived: round(band_ratio * n)
  long long in_pairs = 0;  // derived: |{(i,j): 0 < j-i <= band}|
  double p_in = 0.0;       // derived
  double p_out = 0.0;      // derived
};

OrgmParams orgm_params(int n, double c, double epsilon, double band_ratio);

struct OrgmSample {
  Graph g;
  Ordering planted;  // identity
};

OrgmSample orgm_generate(const OrgmParams& params, std::uint64_t seed);

}  // namespace seriate
