#include <CLI11.hpp>

#include <iostream>

#include "ennomp/commands.hpp"
#include "ennomp/errors.hpp"

// Exit codes: 0 success, 1 I/O failure, 2 validation failure (bad flags,
// incompatible shapes, out-of-range parameters).

int main(int argc, char** argv) {
  CLI::App app{"Non-negative orthogonal matching pursuit with embedded "
               "nearest-neighbor atom selection"};
  app.require_subcommand(1);

  ennomp::cli::GenDictArgs gen_dict;
  auto* cmd_gd = app.add_subcommand("gen-dict", "Generate a random unit-norm dictionary");
  cmd_gd->add_option("--m", gen_dict.m, "Ambient dimension")->required();
  cmd_gd->add_option("--n", gen_dict.n, "Number of atoms")->required();
  cmd_gd->add_option("--seed", gen_dict.seed, "RNG seed");
  cmd_gd->add_option("--out", gen_dict.out, "Output matrix path")->required();

  ennomp::cli::GenSwissArgs gen_swiss;
  auto* cmd_gs = app.add_subcommand("gen-swiss", "Generate a swiss roll library lifted to R^m");
  cmd_gs->add_option("--n", gen_swiss.n, "Number of points")->required();
  cmd_gs->add_option("--m", gen_swiss.m, "Ambient dimension (>= 3)")->required();
  cmd_gs->add_option("--seed", gen_swiss.seed, "RNG seed");
  cmd_gs->add_option("--out", gen_swiss.out, "Output matrix path")->required();

  ennomp::cli::GenMixArgs gen_mix;
  auto* cmd_gm = app.add_subcommand("gen-mix", "Generate unit-norm mixtures of dictionary atoms");
  cmd_gm->add_option("--dict", gen_mix.dict, "Dictionary path")->required();
  cmd_gm->add_option("--j", gen_mix.sparsity, "Atoms per mixture")->required();
  cmd_gm->add_option("--l", gen_mix.count, "Number of mixtures")->required();
  cmd_gm->add_option("--seed", gen_mix.seed, "RNG seed");
  cmd_gm->add_option("--out", gen_mix.out, "Output queries path")->required();
  cmd_gm->add_option("--truth-out", gen_mix.truth_out,
                     "Ground-truth CSV path (default: <out>.truth.csv)");

  ennomp::cli::LearnArgs learn;
  auto* cmd_l = app.add_subcommand("learn", "Construct an embedding and learn its distortion bound");
  cmd_l->add_option("--dict", learn.dict, "Dictionary path")->required();
  cmd_l->add_option("--method", learn.method, "pca | randproj | load")
      ->check(CLI::IsMember({"pca", "randproj", "load"}));
  cmd_l->add_option("--k", learn.k, "Embedded dimension (pca, randproj)");
  cmd_l->add_option("--seed", learn.seed, "RNG seed (randproj)");
  cmd_l->add_option("--src", learn.src, "External embedding to load (load)");
  cmd_l->add_option("--out", learn.out, "Embedding output path")->required();
  cmd_l->add_option("--cdf-max-rows", learn.cdf_max_rows,
                    "Cap on emitted CDF rows (evenly subsampled beyond)");

  ennomp::cli::DecomposeArgs dec;
  auto* cmd_d = app.add_subcommand("decompose", "Sparse non-negative decomposition of one query");
  cmd_d->add_option("--dict", dec.dict, "Dictionary path")->required();
  cmd_d->add_option("--embed", dec.embed, "Embedding path (mode enn)");
  cmd_d->add_option("--query", dec.query, "Query vector path")->required();
  cmd_d->add_option("--jmax", dec.j_max, "Maximum sparsity");
  cmd_d->add_option("--eps", dec.eps, "Residual tolerance relative to ||y||");
  cmd_d->add_option("--mode", dec.mode, "baseline | enn")
      ->check(CLI::IsMember({"baseline", "enn"}));
  cmd_d->add_option("--delta-scale", dec.delta_scale, "Multiplier on the sidecar delta");
  cmd_d->add_option("--out", dec.out, "Output CSV path")->required();

  ennomp::cli::StudyArgs study;
  auto* cmd_s = app.add_subcommand("study", "Mixture distortion study over sparsity");
  cmd_s->add_option("--dict", study.dict, "Dictionary path")->required();
  cmd_s->add_option("--embed", study.embed, "Embedding path")->required();
  cmd_s->add_option("--jmax", study.j_max, "Largest sparsity");
  cmd_s->add_option("--l", study.l, "Mixtures per sparsity");
  cmd_s->add_option("--seed", study.seed, "RNG seed");
  cmd_s->add_option("--delta-scale", study.delta_scale, "Multiplier on the sidecar delta");
  cmd_s->add_option("--out", study.out, "Output CSV path")->required();

  ennomp::cli::BenchArgs bench;
  auto* cmd_b = app.add_subcommand("bench", "Time both drivers over a sparsity range");
  cmd_b->add_option("--dict", bench.dict, "Dictionary path")->required();
  cmd_b->add_option("--embed", bench.embed, "Embedding path")->required();
  cmd_b->add_option("--jmin", bench.j_min, "Smallest sparsity");
  cmd_b->add_option("--jmax", bench.j_max, "Largest sparsity");
  cmd_b->add_option("--queries", bench.queries_per_j, "Queries per sparsity");
  cmd_b->add_option("--reps", bench.repetitions, "Timed repetitions per driver");
  cmd_b->add_option("--seed", bench.seed, "RNG seed");
  cmd_b->add_option("--delta-scale", bench.delta_scale, "Multiplier on the sidecar delta");
  cmd_b->add_option("--out", bench.out, "Records CSV path")->required();
  cmd_b->add_option("--candidates-out", bench.candidates_out,
                    "Candidate profile CSV (default: <out>.candidates.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_gd) ennomp::cli::cmd_gen_dict(gen_dict);
    if (*cmd_gs) ennomp::cli::cmd_gen_swiss(gen_swiss);
    if (*cmd_gm) ennomp::cli::cmd_gen_mix(gen_mix);
    if (*cmd_l) ennomp::cli::cmd_learn(learn);
    if (*cmd_d) ennomp::cli::cmd_decompose(dec);
    if (*cmd_s) ennomp::cli::cmd_study(study);
    if (*cmd_b) ennomp::cli::cmd_bench(bench);
  } catch (const ennomp::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ennomp::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
