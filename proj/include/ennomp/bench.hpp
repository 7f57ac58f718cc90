#pragma once

#include <cstdint>
#include <vector>

#include "ennomp/nnsearch.hpp"
#include "ennomp/pursuit.hpp"

namespace ennomp {

struct BenchRecord {
  int sparsity = 0;
  double time_baseline = 0.0;  // median seconds per decomposition
  double time_enn = 0.0;       // median seconds per decomposition
  double acceleration = 0.0;   // time_baseline / time_enn
  double avg_candidates = 0.0; // mean |S| per embedded-search call
  int runs = 0;                // timed repetitions per driver
};

struct CandidateProfileRow {
  int sparsity = 0;
  Index iteration = 0;
  double avg_candidates = 0.0;
};

struct BenchOptions {
  int j_min = 1;
  int j_max = 5;
  int queries_per_j = 20;
  int repetitions = 5;      // >= 5 timed repetitions, median taken
  std::uint64_t seed = 0;
  double eps_rel = 1e-6;    // eps passed to the drivers is eps_rel * ||y||
};

struct BenchOutput {
  std::vector<BenchRecord> records;             // ascending sparsity
  std::vector<CandidateProfileRow> profile;     // per (sparsity, iteration)
};

// Times both drivers on freshly generated mixtures of each sparsity.
// One warm-up pass precedes the timed repetitions; timed decompositions
// run strictly one at a time so measurements do not contend.
BenchOutput run_benchmark(const SearchContext& ctx, const BenchOptions& opt);

}  // namespace ennomp
