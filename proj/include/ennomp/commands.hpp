#pragma once

#include <cstdint>
#include <string>

namespace ennomp::cli {

// Command implementations behind the CLI front end. Each one reads and
// writes the documented file formats and throws IoError / ValidationError;
// the executable maps those to exit codes 1 and 2.

struct GenDictArgs {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};
void cmd_gen_dict(const GenDictArgs& args);

struct GenSwissArgs {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
};
void cmd_gen_swiss(const GenSwissArgs& args);

struct GenMixArgs {
  std::string dict;
  int sparsity = 1;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out;        // queries, ENN1 or CSV by extension
  std::string truth_out;  // defaults to out + ".truth.csv"
};
void cmd_gen_mix(const GenMixArgs& args);

struct LearnArgs {
  std::string dict;
  std::string method = "pca";  // pca | randproj | load
  std::int64_t k = 0;          // pca / randproj
  std::uint64_t seed = 0;      // randproj
  std::string src;             // load: path of the external Q
  std::string out;             // embedding written here (ENN1); sidecar and
                               // CDF derive from this path
  std::size_t cdf_max_rows = 100000;
};
void cmd_learn(const LearnArgs& args);

struct DecomposeArgs {
  std::string dict;
  std::string embed;       // required for mode "enn"
  std::string query;
  int j_max = 5;
  double eps = 1e-6;       // relative to ||y||
  std::string mode = "baseline";  // baseline | enn
  double delta_scale = 1.0;
  std::string out;
};
void cmd_decompose(const DecomposeArgs& args);

struct StudyArgs {
  std::string dict;
  std::string embed;
  int j_max = 5;
  int l = 1000;
  std::uint64_t seed = 0;
  double delta_scale = 1.0;
  std::string out;
};
void cmd_study(const StudyArgs& args);

struct BenchArgs {
  std::string dict;
  std::string embed;
  int j_min = 1;
  int j_max = 5;
  int queries_per_j = 20;
  int repetitions = 5;
  std::uint64_t seed = 0;
  double delta_scale = 1.0;
  std::string out;             // records CSV
  std::string candidates_out;  // defaults to out + ".candidates.csv"
};
void cmd_bench(const BenchArgs& args);

}  // namespace ennomp::cli
