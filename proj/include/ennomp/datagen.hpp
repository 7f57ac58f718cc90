#pragma once

#include <cstdint>
#include <vector>

#include "ennomp/core.hpp"

namespace ennomp {

// Unit-norm mixtures of dictionary atoms plus the ground truth that
// generated them. Weights are stored as drawn, before normalization.
struct MixtureSet {
  Matrix queries;  // m-by-l, unit-norm columns
  std::vector<std::vector<Index>> true_supports;
  std::vector<std::vector<double>> true_weights;
  int sparsity = 0;
};

// i.i.d. standard Gaussian entries, columns scaled to unit norm.
Dictionary gen_random_dictionary(Index m, Index n, std::uint64_t seed);

// Classic swiss roll: t uniform on [1.5*pi, 4.5*pi], h uniform on [0, 21],
// 3-D point (t*cos t, h, t*sin t), lifted into R^m by a seeded matrix with
// orthonormal columns (so 3-D pairwise distances survive the lift exactly),
// then each point scaled to unit norm. The whole library lies in one
// 3-dimensional linear subspace of R^m.
Dictionary gen_swiss_roll(Index n, Index m, std::uint64_t seed);

// Per query: j distinct atoms chosen uniformly, weights i.i.d. uniform on
// [0,1] (redrawn below 1e-12 so the effective sparsity stays j), combination
// scaled to unit norm. Queries are generated from per-index derived seeds,
// so the output is reproducible and order-independent.
MixtureSet gen_mixtures(const Dictionary& d, int j, int l, std::uint64_t seed);

}  // namespace ennomp
