#pragma once

#include <Eigen/Core>

#include "ennomp/errors.hpp"

namespace ennomp {

// Column-major throughout, so a dictionary atom is a contiguous column.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using ConstVectorRef = Eigen::Ref<const Vector>;

inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kZeroColumnTol = 1e-12;

bool all_finite(const Eigen::Ref<const Matrix>& m);

// Throws ValidationError naming `what` if any entry is NaN or infinite.
void require_finite(const Eigen::Ref<const Matrix>& m, const char* what);

// Euclidean distance ||a - b||. This is the one distance kernel in the
// project; the search, the delta learning and the test oracles all call it,
// so a learned distortion bound stays valid bit-for-bit at query time.
double distance(const ConstVectorRef& a, const ConstVectorRef& b);

// A library of unit-norm atoms, one per column. Immutable after
// construction and safe to share across threads.
class Dictionary {
 public:
  // Atoms must already have unit columns (within kUnitNormTol).
  explicit Dictionary(Matrix atoms);

  const Matrix& atoms() const { return atoms_; }
  Eigen::Ref<const Vector> atom(Index i) const { return atoms_.col(i); }
  Index m() const { return atoms_.rows(); }
  Index n() const { return atoms_.cols(); }

 private:
  Matrix atoms_;
};

// Scales every column of `raw` to unit norm. Throws ZeroColumn if a column
// norm is at or below kZeroColumnTol.
Dictionary normalize_columns(const Matrix& raw);

}  // namespace ennomp
