#include "ennomp/datagen.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>

#include "ennomp/parallel.hpp"
#include "ennomp/rng.hpp"

namespace ennomp {

Dictionary gen_random_dictionary(Index m, Index n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw ValidationError("gen_random_dictionary: m, n >= 1");
  Rng rng(seed);
  Matrix raw(m, n);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < m; ++r) raw(r, c) = rng.gaussian();
  }
  return normalize_columns(raw);
}

Dictionary gen_swiss_roll(Index n, Index m, std::uint64_t seed) {
  if (m < 3) throw ValidationError("gen_swiss_roll: need ambient dimension >= 3");
  if (n < 1) throw ValidationError("gen_swiss_roll: need n >= 1");
  Rng rng(seed);

  Matrix g(m, 3);
  for (Index c = 0; c < 3; ++c) {
    for (Index r = 0; r < m; ++r) g(r, c) = rng.gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix lift = qr.householderQ() * Matrix::Identity(m, 3);

  const double pi = std::acos(-1.0);
  Matrix raw(m, n);
  Eigen::Vector3d p;
  for (Index i = 0; i < n; ++i) {
    const double t = rng.uniform(1.5 * pi, 4.5 * pi);
    const double h = rng.uniform(0.0, 21.0);
    p << t * std::cos(t), h, t * std::sin(t);
    raw.col(i) = lift * p;
  }
  return normalize_columns(raw);
}

MixtureSet gen_mixtures(const Dictionary& d, int j, int l, std::uint64_t seed) {
  if (j < 1 || static_cast<Index>(j) > d.n()) {
    throw ValidationError("gen_mixtures: require 1 <= j <= n");
  }
  if (l < 1) throw ValidationError("gen_mixtures: require l >= 1");

  MixtureSet set;
  set.sparsity = j;
  set.queries.resize(d.m(), l);
  set.true_supports.assign(static_cast<std::size_t>(l), {});
  set.true_weights.assign(static_cast<std::size_t>(l), {});

#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (int q = 0; q < l; ++q) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(q)));
    std::vector<Index> support;
    std::vector<double> weights;
    Vector y(d.m());
    for (;;) {
      support.clear();
      weights.clear();
      while (support.size() < static_cast<std::size_t>(j)) {
        const Index pick = static_cast<Index>(rng.below(static_cast<std::uint64_t>(d.n())));
        if (std::find(support.begin(), support.end(), pick) == support.end()) {
          support.push_back(pick);
        }
      }
      for (int w = 0; w < j; ++w) {
        double a = rng.uniform();
        while (a < 1e-12) a = rng.uniform();
        weights.push_back(a);
      }
      if (j == 1) {
        // a * phi / ||a * phi|| is the atom itself; emit it verbatim.
        y = d.atom(support[0]);
        break;
      }
      y.setZero();
      for (int w = 0; w < j; ++w) y += weights[static_cast<std::size_t>(w)] * d.atom(support[static_cast<std::size_t>(w)]);
      const double nrm = y.norm();
      if (nrm > 1e-12) {
        y /= nrm;
        break;
      }
      // Atoms cancelled out; redraw from the same stream.
    }
    set.queries.col(q) = y;
    set.true_supports[static_cast<std::size_t>(q)] = std::move(support);
    set.true_weights[static_cast<std::size_t>(q)] = std::move(weights);
  }
  return set;
}

}  // namespace ennomp
