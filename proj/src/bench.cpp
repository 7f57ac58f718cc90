#include "ennomp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "ennomp/datagen.hpp"
#include "ennomp/rng.hpp"

namespace ennomp {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

BenchOutput run_benchmark(const SearchContext& ctx, const BenchOptions& opt) {
  if (opt.j_min < 1 || opt.j_max < opt.j_min) {
    throw ValidationError("run_benchmark: bad sparsity range");
  }
  if (opt.queries_per_j < 1 || opt.repetitions < 1) {
    throw ValidationError("run_benchmark: need at least one query and repetition");
  }
  if (!ctx.embedding().has_delta()) {
    throw DeltaUnset("run_benchmark: embedding has no learned delta");
  }

  const Dictionary& dict = ctx.dict();
  BenchOutput out;

  for (int j = opt.j_min; j <= opt.j_max; ++j) {
    const MixtureSet mixtures = gen_mixtures(
        dict, j, opt.queries_per_j, derive_seed(opt.seed, static_cast<std::uint64_t>(j)));

    std::vector<double> eps(static_cast<std::size_t>(opt.queries_per_j));
    for (int q = 0; q < opt.queries_per_j; ++q) {
      eps[static_cast<std::size_t>(q)] = opt.eps_rel * mixtures.queries.col(q).norm();
    }

    // Warm-up pass; also collects the candidate-set telemetry.
    std::map<Index, std::pair<double, std::size_t>> per_iteration;
    double candidate_sum = 0.0;
    std::size_t candidate_calls = 0;
    for (int q = 0; q < opt.queries_per_j; ++q) {
      const Vector y = mixtures.queries.col(q);
      (void)fnnomp_baseline(dict, y, j, eps[static_cast<std::size_t>(q)]);
      const EnnResult r = fnnomp_enn(ctx, y, j, eps[static_cast<std::size_t>(q)]);
      for (const auto& call : r.telemetry.calls) {
        auto& slot = per_iteration[call.iteration];
        slot.first += static_cast<double>(call.candidates);
        slot.second += 1;
        candidate_sum += static_cast<double>(call.candidates);
        ++candidate_calls;
      }
    }

    std::vector<double> baseline_times, enn_times;
    for (int rep = 0; rep < opt.repetitions; ++rep) {
      double t0 = now_seconds();
      for (int q = 0; q < opt.queries_per_j; ++q) {
        (void)fnnomp_baseline(dict, mixtures.queries.col(q), j,
                              eps[static_cast<std::size_t>(q)]);
      }
      baseline_times.push_back((now_seconds() - t0) / opt.queries_per_j);

      t0 = now_seconds();
      for (int q = 0; q < opt.queries_per_j; ++q) {
        (void)fnnomp_enn(ctx, mixtures.queries.col(q), j,
                         eps[static_cast<std::size_t>(q)]);
      }
      enn_times.push_back((now_seconds() - t0) / opt.queries_per_j);
    }

    BenchRecord rec;
    rec.sparsity = j;
    rec.time_baseline = median(baseline_times);
    rec.time_enn = median(enn_times);
    rec.acceleration = rec.time_baseline / rec.time_enn;
    rec.avg_candidates =
        candidate_calls ? candidate_sum / static_cast<double>(candidate_calls) : 0.0;
    rec.runs = opt.repetitions;
    out.records.push_back(rec);

    for (const auto& [iteration, slot] : per_iteration) {
      out.profile.push_back(
          {j, iteration, slot.first / static_cast<double>(slot.second)});
    }
  }
  return out;
}

}  // namespace ennomp
