#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately written against the plain definitions (full sorts,
// explicit loops, textbook active-set NNLS) rather than the library's own
// fast paths, so the tests stay meaningful cross-checks.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ennomp/core.hpp"
#include "ennomp/datagen.hpp"
#include "ennomp/embedding.hpp"
#include "ennomp/rng.hpp"

namespace ennomp::testsupport {

// All atom indices sorted by original-space distance to y, ties by index.
inline std::vector<Index> distance_sort(const Dictionary& d, const Vector& y) {
  std::vector<Index> order(static_cast<std::size_t>(d.n()));
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<double> dist(order.size());
  for (Index i = 0; i < d.n(); ++i) {
    dist[static_cast<std::size_t>(i)] = distance(d.atom(i), y);
  }
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const double da = dist[static_cast<std::size_t>(a)];
    const double db = dist[static_cast<std::size_t>(b)];
    if (da != db) return da < db;
    return a < b;
  });
  return order;
}

// Textbook Lawson-Hanson non-negative least squares on a small system.
inline Vector nnls_active_set(const Matrix& a, const Vector& b,
                              int max_outer = 300) {
  const Index n = a.cols();
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);

  auto solve_passive = [&](Vector& z) {
    std::vector<Index> idx;
    for (Index i = 0; i < n; ++i) {
      if (passive[static_cast<std::size_t>(i)]) idx.push_back(i);
    }
    Matrix ap(a.rows(), static_cast<Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) ap.col(static_cast<Index>(c)) = a.col(idx[c]);
    const Vector zp = ap.colPivHouseholderQr().solve(b);
    z.setZero();
    for (std::size_t c = 0; c < idx.size(); ++c) z[idx[c]] = zp[static_cast<Index>(c)];
  };

  for (int outer = 0; outer < max_outer; ++outer) {
    const Vector w = a.transpose() * (b - a * x);
    Index t = -1;
    double best = 1e-10;
    for (Index i = 0; i < n; ++i) {
      if (!passive[static_cast<std::size_t>(i)] && w[i] > best) {
        best = w[i];
        t = i;
      }
    }
    if (t < 0) break;
    passive[static_cast<std::size_t>(t)] = true;

    Vector z(n);
    for (;;) {
      solve_passive(z);
      bool feasible = true;
      double alpha = 1.0;
      for (Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)] && z[i] <= 1e-12) {
          feasible = false;
          alpha = std::min(alpha, x[i] / (x[i] - z[i]));
        }
      }
      if (feasible) {
        x = z;
        break;
      }
      x += alpha * (z - x);
      for (Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)] && x[i] <= 1e-12) {
          passive[static_cast<std::size_t>(i)] = false;
          x[i] = 0.0;
        }
      }
    }
  }
  return x;
}

// Library of atoms spanned by a rank-dimensional subspace, optionally
// perturbed by Gaussian noise of the given scale before normalization.
inline Dictionary planted_library(Index m, Index n, Index rank, double noise,
                                  std::uint64_t seed) {
  Rng rng(seed);
  Matrix g(m, rank);
  for (Index c = 0; c < rank; ++c) {
    for (Index r = 0; r < m; ++r) g(r, c) = rng.gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix basis = qr.householderQ() * Matrix::Identity(m, rank);

  Matrix coef(rank, n);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < rank; ++r) coef(r, c) = rng.gaussian();
  }
  Matrix raw = basis * coef;
  if (noise > 0.0) {
    for (Index c = 0; c < n; ++c) {
      for (Index r = 0; r < m; ++r) raw(r, c) += noise * rng.gaussian();
    }
  }
  return normalize_columns(raw);
}

// Count of singular values above rel_tol times the largest.
inline Index numerical_rank(const Matrix& a, double rel_tol = 1e-10) {
  Eigen::BDCSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_tol * sv[0]) ++rank;
  }
  return rank;
}

// Square orthogonal matrix (an exact isometry when used as an embedding).
inline Matrix random_orthogonal(Index m, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g(m, m);
  for (Index c = 0; c < m; ++c) {
    for (Index r = 0; r < m; ++r) g(r, c) = rng.gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(m, m);
}

inline Vector random_unit_vector(Index m, std::uint64_t seed) {
  Rng rng(seed);
  Vector v(m);
  for (Index i = 0; i < m; ++i) v[i] = rng.gaussian();
  return v / v.norm();
}

// A delta no candidate radius can miss: larger than any possible original
// plus embedded distance at unit scale.
inline double saturated_delta() { return 1e6; }

// Spearman rank correlation; ties get average ranks.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t joint = i;
      while (joint + 1 < n && v[order[joint + 1]] == v[order[i]]) ++joint;
      const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(joint)) + 1.0;
      for (std::size_t k = i; k <= joint; ++k) r[order[k]] = avg;
      i = joint + 1;
    }
    return r;
  };
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  return num / std::sqrt(da * db);
}

}  // namespace ennomp::testsupport
