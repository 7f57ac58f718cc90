#include "ennomp/core.hpp"

#include <string>

namespace ennomp {

bool all_finite(const Eigen::Ref<const Matrix>& m) { return m.allFinite(); }

void require_finite(const Eigen::Ref<const Matrix>& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + " contains NaN or Inf entries");
  }
}

double distance(const ConstVectorRef& a, const ConstVectorRef& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("distance: dimensions " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  }
  return (a - b).norm();
}

Dictionary::Dictionary(Matrix atoms) : atoms_(std::move(atoms)) {
  if (atoms_.rows() < 1 || atoms_.cols() < 1) {
    throw ValidationError("dictionary must have at least one row and column");
  }
  require_finite(atoms_, "dictionary");
  for (Index i = 0; i < atoms_.cols(); ++i) {
    if (std::abs(atoms_.col(i).norm() - 1.0) > kUnitNormTol) {
      throw ValidationError("dictionary column " + std::to_string(i) +
                            " is not unit norm");
    }
  }
}

Dictionary normalize_columns(const Matrix& raw) {
  if (raw.rows() < 1 || raw.cols() < 1) {
    throw ValidationError("matrix must have at least one row and column");
  }
  require_finite(raw, "matrix");
  Matrix out(raw.rows(), raw.cols());
  for (Index i = 0; i < raw.cols(); ++i) {
    const double nrm = raw.col(i).norm();
    if (nrm <= kZeroColumnTol) throw ZeroColumn(i);
    out.col(i) = raw.col(i) / nrm;
  }
  return Dictionary(std::move(out));
}

}  // namespace ennomp
