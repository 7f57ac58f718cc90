#include "ennomp/embedding.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ennomp/datagen.hpp"
#include "ennomp/io.hpp"
#include "ennomp/parallel.hpp"
#include "ennomp/rng.hpp"

namespace ennomp {

const char* to_string(EmbeddingMethod m) {
  switch (m) {
    case EmbeddingMethod::kPca: return "pca";
    case EmbeddingMethod::kRandomProjection: return "randproj";
    case EmbeddingMethod::kLoaded: return "loaded";
  }
  return "unknown";
}

Embedding::Embedding(Matrix q, EmbeddingMethod method)
    : q_(std::move(q)), method_(method) {
  if (q_.rows() < 1 || q_.cols() < 1) {
    throw ValidationError("embedding matrix must be non-empty");
  }
  if (q_.rows() > q_.cols()) {
    throw ValidationError("embedding must not increase dimension (k > m)");
  }
  require_finite(q_, "embedding matrix");
}

double Embedding::delta() const {
  if (!delta_) throw DeltaUnset("distortion bound has not been learned");
  return *delta_;
}

void Embedding::set_delta(double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw ValidationError("delta must be finite and non-negative");
  }
  delta_ = delta;
}

Embedding fit_pca(const Matrix& data, Index k, std::vector<std::string>* warnings) {
  if (k < 1 || k >= data.rows()) {
    throw ValidationError("fit_pca: require 1 <= k < rows");
  }
  if (data.cols() < 2) {
    throw ValidationError("fit_pca: need at least 2 samples");
  }
  require_finite(data, "pca data");

  const Index m = data.rows();
  // Second moment of the raw columns; no centering, see header.
  Matrix second_moment = (data * data.transpose()) / static_cast<double>(data.cols());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(second_moment);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("fit_pca: eigendecomposition failed");
  }

  // Eigenvalues come back ascending; order descending, ties kept in
  // ascending solver position for determinism.
  const Vector& evals = solver.eigenvalues();
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return evals[a] > evals[b];
  });

  Index above_tol = 0;
  for (Index i = 0; i < m; ++i) {
    if (evals[i] > 1e-12) ++above_tol;
  }
  if (above_tol < k && warnings) {
    warnings->push_back("fit_pca: only " + std::to_string(above_tol) +
                        " of " + std::to_string(k) +
                        " requested components exceed the 1e-12 eigenvalue floor");
  }

  Matrix q(k, m);
  for (Index i = 0; i < k; ++i) {
    q.row(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]).transpose();
  }
  return Embedding(std::move(q), EmbeddingMethod::kPca);
}

Embedding random_projection(Index k, Index m, std::uint64_t seed) {
  if (k < 1 || k >= m) throw ValidationError("random_projection: require 1 <= k < m");
  Rng rng(seed);
  const double sd = 1.0 / std::sqrt(static_cast<double>(k));
  Matrix q(k, m);
  for (Index c = 0; c < m; ++c) {
    for (Index r = 0; r < k; ++r) q(r, c) = sd * rng.gaussian();
  }
  return Embedding(std::move(q), EmbeddingMethod::kRandomProjection);
}

Embedding load_embedding(const std::string& path) {
  return Embedding(read_enn1(path), EmbeddingMethod::kLoaded);
}

void save_embedding(const std::string& path, const Embedding& e) {
  write_enn1(path, e.q());
}

Vector embed(const Embedding& e, const ConstVectorRef& v) {
  if (v.size() != e.m()) {
    throw DimensionMismatch("embed: vector dim " + std::to_string(v.size()) +
                            " vs embedding domain " + std::to_string(e.m()));
  }
  return e.q() * v;
}

Matrix embed_dictionary(const Embedding& e, const Dictionary& d) {
  if (d.m() != e.m()) {
    throw DimensionMismatch("embed_dictionary: dictionary dim " +
                            std::to_string(d.m()) + " vs embedding domain " +
                            std::to_string(e.m()));
  }
  Matrix out(e.k(), d.n());
  const Index n = d.n();
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (Index i = 0; i < n; ++i) out.col(i) = embed(e, d.atom(i));
  return out;
}

double pair_distortion(const Embedding& e, const ConstVectorRef& a,
                       const ConstVectorRef& b) {
  if (a.size() != e.m() || b.size() != e.m()) {
    throw DimensionMismatch("pair_distortion: dimensions do not match embedding");
  }
  return std::abs(distance(a, b) - distance(embed(e, a), embed(e, b)));
}

DeltaFit learn_delta(Embedding& e, const Dictionary& d) {
  if (d.n() < 2) throw ValidationError("learn_delta: need at least 2 atoms");
  if (d.m() != e.m()) {
    throw DimensionMismatch("learn_delta: dictionary dim vs embedding domain");
  }

  const Index n = d.n();
  const Matrix embedded = embed_dictionary(e, d);

  // Flat layout of the strict upper triangle: pair (i, c), i < c, lands at
  // offset(i) + (c - i - 1). Writing into preassigned slots keeps the scan
  // deterministic under any thread count.
  std::vector<std::size_t> offset(static_cast<std::size_t>(n), 0);
  std::size_t total = 0;
  for (Index i = 0; i < n; ++i) {
    offset[static_cast<std::size_t>(i)] = total;
    total += static_cast<std::size_t>(n - i - 1);
  }

  DeltaFit fit;
  fit.cdf.resize(total);
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
  for (Index i = 0; i < n; ++i) {
    double* row = fit.cdf.data() + offset[static_cast<std::size_t>(i)];
    for (Index c = i + 1; c < n; ++c) {
      const double orig = distance(d.atom(i), d.atom(c));
      const double emb = distance(embedded.col(i), embedded.col(c));
      row[c - i - 1] = std::abs(orig - emb);
    }
  }

  double delta = 0.0;
  for (const double v : fit.cdf) delta = std::max(delta, v);
  fit.delta = delta;
  std::sort(fit.cdf.begin(), fit.cdf.end());
  e.set_delta(delta);
  return fit;
}

DistortionStats mixture_distortion_study(const Dictionary& d, const Embedding& e,
                                         int j_max, int l, std::uint64_t seed) {
  if (!e.has_delta()) throw DeltaUnset("mixture_distortion_study needs a learned delta");
  if (j_max < 1 || l < 1) {
    throw ValidationError("mixture_distortion_study: require j_max >= 1 and l >= 1");
  }

  const double delta = e.delta();
  const Index n = d.n();
  const Matrix embedded = embed_dictionary(e, d);

  DistortionStats stats;
  std::size_t exceed = 0;
  std::size_t measured = 0;

  for (int j = 1; j <= j_max; ++j) {
    const MixtureSet mixtures =
        gen_mixtures(d, j, l, derive_seed(seed, static_cast<std::uint64_t>(j)));

    // Per-mixture partial results, reduced in a fixed-order final pass.
    std::vector<double> sum(static_cast<std::size_t>(l), 0.0);
    std::vector<double> mx(static_cast<std::size_t>(l), 0.0);
    std::vector<double> mn(static_cast<std::size_t>(l),
                           std::numeric_limits<double>::infinity());
    std::vector<std::size_t> over(static_cast<std::size_t>(l), 0);

#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int q = 0; q < l; ++q) {
      const Vector y = mixtures.queries.col(q);
      const Vector y_hat = embed(e, y);
      double s = 0.0, hi = 0.0, lo = std::numeric_limits<double>::infinity();
      std::size_t ov = 0;
      for (Index i = 0; i < n; ++i) {
        const double orig = distance(d.atom(i), y);
        const double emb = distance(embedded.col(i), y_hat);
        const double dist = std::abs(orig - emb);
        s += dist;
        hi = std::max(hi, dist);
        lo = std::min(lo, dist);
        // 1e-12 absolute slack keeps exact isometries (delta and distortion
        // both at roundoff scale) from reporting spurious exceedances.
        if (dist > delta + 1e-12) ++ov;
      }
      sum[static_cast<std::size_t>(q)] = s;
      mx[static_cast<std::size_t>(q)] = hi;
      mn[static_cast<std::size_t>(q)] = lo;
      over[static_cast<std::size_t>(q)] = ov;
    }

    DistortionStats::Row row;
    row.sparsity = j;
    double total = 0.0;
    row.max = 0.0;
    row.min = std::numeric_limits<double>::infinity();
    for (int q = 0; q < l; ++q) {
      total += sum[static_cast<std::size_t>(q)];
      row.max = std::max(row.max, mx[static_cast<std::size_t>(q)]);
      row.min = std::min(row.min, mn[static_cast<std::size_t>(q)]);
      exceed += over[static_cast<std::size_t>(q)];
    }
    row.mean = total / (static_cast<double>(l) * static_cast<double>(n));
    measured += static_cast<std::size_t>(l) * static_cast<std::size_t>(n);
    stats.rows.push_back(row);
  }

  stats.exceed_fraction =
      static_cast<double>(exceed) / static_cast<double>(measured);
  return stats;
}

}  // namespace ennomp
