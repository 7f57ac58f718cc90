#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ennomp/core.hpp"

namespace ennomp {

enum class EmbeddingMethod { kPca, kRandomProjection, kLoaded };

const char* to_string(EmbeddingMethod m);

// A linear map Q: R^M -> R^K together with the distortion bound learned
// over a dictionary. K <= M; K == M is admitted so that exact isometries
// (square orthogonal Q) can be expressed, e.g. as baselines in studies.
class Embedding {
 public:
  Embedding(Matrix q, EmbeddingMethod method);

  const Matrix& q() const { return q_; }
  Index k() const { return q_.rows(); }
  Index m() const { return q_.cols(); }
  EmbeddingMethod method() const { return method_; }

  bool has_delta() const { return delta_.has_value(); }
  double delta() const;  // throws DeltaUnset
  void set_delta(double delta);

 private:
  Matrix q_;
  EmbeddingMethod method_;
  std::optional<double> delta_;
};

// Rows of Q are the k dominant eigenvectors of the raw second-moment matrix
// of the columns of `data` (no mean subtraction: the map must stay linear,
// y-hat = Qy with no offset). Appends to `warnings` if fewer than k
// eigenvalues exceed 1e-12; the embedding is still returned.
Embedding fit_pca(const Matrix& data, Index k,
                  std::vector<std::string>* warnings = nullptr);

// Entries i.i.d. Gaussian with mean 0 and variance 1/k.
Embedding random_projection(Index k, Index m, std::uint64_t seed);

// Reads Q from an ENN1 file; method becomes kLoaded, delta stays unset.
Embedding load_embedding(const std::string& path);
void save_embedding(const std::string& path, const Embedding& e);

Vector embed(const Embedding& e, const ConstVectorRef& v);

// Column i of the result equals embed(e, atom i). Computed column by
// column with the same kernel as embed() so that a query that is a copy of
// an atom embeds to bit-identical coordinates.
Matrix embed_dictionary(const Embedding& e, const Dictionary& d);

// |d(a, b) - d(Qa, Qb)|, the per-pair distortion.
double pair_distortion(const Embedding& e, const ConstVectorRef& a,
                       const ConstVectorRef& b);

struct DeltaFit {
  double delta = 0.0;
  std::vector<double> cdf;  // all pair distortions, ascending
};

// Scans all n(n-1)/2 atom pairs, stores the max distortion into `e` and
// returns it along with the sorted distortion values (the empirical CDF).
DeltaFit learn_delta(Embedding& e, const Dictionary& d);

struct DistortionStats {
  struct Row {
    int sparsity = 0;
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
  };
  std::vector<Row> rows;          // one per sparsity 1..j_max
  double exceed_fraction = 0.0;   // fraction of (atom, mixture) pairs over delta
};

// For each sparsity 1..j_max, draws l unit-norm mixtures and measures the
// distortion between every atom and every mixture. Requires e.delta set.
DistortionStats mixture_distortion_study(const Dictionary& d, const Embedding& e,
                                         int j_max, int l, std::uint64_t seed);

}  // namespace ennomp
