#include "ennomp/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "ennomp/bench.hpp"
#include "ennomp/datagen.hpp"
#include "ennomp/embedding.hpp"
#include "ennomp/io.hpp"
#include "ennomp/parallel.hpp"
#include "ennomp/pursuit.hpp"

namespace ennomp::cli {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  return os;
}

Dictionary load_dictionary(const std::string& path) {
  return Dictionary(read_matrix(path));
}

// Loads an embedding plus its sidecar delta, scaled by `delta_scale`.
Embedding load_embedding_with_delta(const std::string& path, double delta_scale) {
  Embedding e = load_embedding(path);
  e.set_delta(read_delta_sidecar(path) * delta_scale);
  return e;
}

}  // namespace

void cmd_gen_dict(const GenDictArgs& args) {
  const Dictionary d = gen_random_dictionary(args.m, args.n, args.seed);
  write_matrix(args.out, d.atoms());
  std::cout << "wrote " << d.m() << "x" << d.n() << " dictionary to " << args.out
            << "\n";
}

void cmd_gen_swiss(const GenSwissArgs& args) {
  const Dictionary d = gen_swiss_roll(args.n, args.m, args.seed);
  write_matrix(args.out, d.atoms());
  std::cout << "wrote " << d.m() << "x" << d.n() << " swiss roll library to "
            << args.out << "\n";
}

void cmd_gen_mix(const GenMixArgs& args) {
  const Dictionary d = load_dictionary(args.dict);
  const MixtureSet set = gen_mixtures(d, args.sparsity, args.count, args.seed);
  write_matrix(args.out, set.queries);

  const std::string truth =
      args.truth_out.empty() ? args.out + ".truth.csv" : args.truth_out;
  auto os = open_out(truth);
  os << "query_id,atom_id,weight\n";
  for (int q = 0; q < args.count; ++q) {
    const auto& sup = set.true_supports[static_cast<std::size_t>(q)];
    const auto& w = set.true_weights[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < sup.size(); ++i) {
      os << q << ',' << sup[i] << ',' << fmt(w[i]) << '\n';
    }
  }
  std::cout << "wrote " << args.count << " sparsity-" << args.sparsity
            << " mixtures to " << args.out << " (truth: " << truth << ")\n";
}

void cmd_learn(const LearnArgs& args) {
  const Dictionary d = load_dictionary(args.dict);

  Embedding e = [&] {
    if (args.method == "pca") {
      std::vector<std::string> warnings;
      Embedding fitted = fit_pca(d.atoms(), args.k, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      return fitted;
    }
    if (args.method == "randproj") {
      return random_projection(args.k, d.m(), args.seed);
    }
    if (args.method == "load") {
      if (args.src.empty()) {
        throw ValidationError("learn: method 'load' needs --src");
      }
      return load_embedding(args.src);
    }
    throw ValidationError("learn: unknown method '" + args.method + "'");
  }();

  const DeltaFit fit = learn_delta(e, d);
  save_embedding(args.out, e);
  write_delta_sidecar(args.out, fit.delta);

  // Empirical CDF of the pair distortions; subsampled evenly when huge so
  // the file stays plottable. First and last points are always kept.
  const std::string cdf_path = args.out + ".cdf.csv";
  auto os = open_out(cdf_path);
  os << "distortion,cum_prob\n";
  const std::size_t total = fit.cdf.size();
  const std::size_t rows = std::min(total, args.cdf_max_rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i =
        rows == 1 ? total - 1 : (r * (total - 1)) / (rows - 1);
    os << fmt(fit.cdf[i]) << ','
       << fmt(static_cast<double>(i + 1) / static_cast<double>(total)) << '\n';
  }

  std::cout << "learned delta " << fmt(fit.delta) << " over " << total
            << " atom pairs; embedding " << e.k() << "x" << e.m() << " ("
            << to_string(e.method()) << ") -> " << args.out << "\n";
}

void cmd_decompose(const DecomposeArgs& args) {
  const Dictionary d = load_dictionary(args.dict);
  const Vector y = read_vector(args.query);
  if (y.size() != d.m()) {
    throw DimensionMismatch("decompose: query dim " + std::to_string(y.size()) +
                            " vs dictionary dim " + std::to_string(d.m()));
  }
  const double eps_abs = args.eps * y.norm();

  SparseCode code;
  if (args.mode == "baseline") {
    code = fnnomp_baseline(d, y, args.j_max, eps_abs);
  } else if (args.mode == "enn") {
    if (args.embed.empty()) throw ValidationError("decompose: mode 'enn' needs --embed");
    SearchContext ctx(d, load_embedding_with_delta(args.embed, args.delta_scale));
    code = fnnomp_enn(ctx, y, args.j_max, eps_abs).code;
  } else {
    throw ValidationError("decompose: unknown mode '" + args.mode + "'");
  }

  auto os = open_out(args.out);
  os << "atom_id,coefficient\n";
  for (std::size_t i = 0; i < code.support.size(); ++i) {
    os << code.support[i] << ',' << fmt(code.coefficients[i]) << '\n';
  }
  os << "residual_norm,iterations\n";
  os << fmt(code.residual_norm) << ',' << code.iterations_used << '\n';

  std::cout << "decomposed with " << code.iterations_used
            << " atoms, residual norm " << fmt(code.residual_norm) << " -> "
            << args.out << "\n";
}

void cmd_study(const StudyArgs& args) {
  const Dictionary d = load_dictionary(args.dict);
  const Embedding e = load_embedding_with_delta(args.embed, args.delta_scale);
  const DistortionStats stats =
      mixture_distortion_study(d, e, args.j_max, args.l, args.seed);

  auto os = open_out(args.out);
  os << "j,delta_mean,delta_max,delta_min\n";
  for (const auto& row : stats.rows) {
    os << row.sparsity << ',' << fmt(row.mean) << ',' << fmt(row.max) << ','
       << fmt(row.min) << '\n';
  }
  os << "exceed_fraction," << fmt(stats.exceed_fraction) << '\n';

  std::cout << "distortion study over j=1.." << args.j_max << ", l=" << args.l
            << ": exceed_fraction " << fmt(stats.exceed_fraction) << " -> "
            << args.out << "\n";
}

void cmd_bench(const BenchArgs& args) {
  const Dictionary d = load_dictionary(args.dict);
  SearchContext ctx(d, load_embedding_with_delta(args.embed, args.delta_scale));

  BenchOptions opt;
  opt.j_min = args.j_min;
  opt.j_max = args.j_max;
  opt.queries_per_j = args.queries_per_j;
  opt.repetitions = args.repetitions;
  opt.seed = args.seed;
  const BenchOutput out = run_benchmark(ctx, opt);

  auto os = open_out(args.out);
  os << "# timing_workers=1 (timed decompositions run one at a time); "
     << "fanout_workers=" << worker_count()
     << "; times are median seconds per decomposition over " << args.repetitions
     << " repetitions\n";
  os << "j,time_baseline,time_enn,acceleration,avg_candidates,runs\n";
  for (const auto& rec : out.records) {
    os << rec.sparsity << ',' << fmt(rec.time_baseline) << ','
       << fmt(rec.time_enn) << ',' << fmt(rec.acceleration) << ','
       << fmt(rec.avg_candidates) << ',' << rec.runs << '\n';
  }

  const std::string cand_path =
      args.candidates_out.empty() ? args.out + ".candidates.csv" : args.candidates_out;
  auto cs = open_out(cand_path);
  cs << "j,iteration,avg_candidates\n";
  for (const auto& row : out.profile) {
    cs << row.sparsity << ',' << row.iteration << ',' << fmt(row.avg_candidates)
       << '\n';
  }

  std::cout << "benchmark j=" << args.j_min << ".." << args.j_max << " -> "
            << args.out << " (candidates: " << cand_path << ")\n";
}

}  // namespace ennomp::cli
