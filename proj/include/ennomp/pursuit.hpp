#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ennomp/core.hpp"
#include "ennomp/nnsearch.hpp"

namespace ennomp {

// Outcome of one look-up-table row for a scanned atom.
enum class SelectionKind {
  kAccept,             // take the scanned atom with coefficient step z
  kAcceptCandidate,    // take the stored clipped candidate instead
  kContinueNext,       // move on to the next-nearest atom
  kClipAndContinue,    // store this atom clipped to z_t, keep scanning
  kTerminateNegative,  // no admissible atom remains; stop without accepting
};

struct SelectionAction {
  SelectionKind kind;
  double value = 0.0;  // z for kAccept, z_t for kClipAndContinue
};

// The look-up table, rows in printed order, first match wins. z_c is the
// best clipped candidate value seen so far in this scan (0 when none).
SelectionAction selection_rule(double z, double z_t, double z_c);

// Largest coefficient step that keeps the existing coefficients x
// non-negative, given the influence vector gamma of the candidate atom:
// min over gamma_i < 0 of |x_i| / |gamma_i|, +infinity when no gamma_i < 0.
double z_threshold(const ConstVectorRef& x, const ConstVectorRef& gamma);

// Greedy pursuit state after j accepted atoms: the support, the
// orthonormal basis spanning it, the inverse triangular factor, the
// basis-coefficients z and the residual.
class PursuitState {
 public:
  explicit PursuitState(Vector y);

  const std::vector<Index>& support() const { return support_; }
  const Matrix& psi() const { return psi_; }
  const Matrix& rinv() const { return rinv_; }
  const Vector& z() const { return z_; }
  const Vector& residual() const { return residual_; }
  Index iteration() const { return static_cast<Index>(support_.size()); }

  // Coefficients on the support, rinv * z.
  Vector coefficients() const { return rinv_ * z_; }

  friend void extend_state(PursuitState& s, Index mu, double z_new,
                           const struct Orthogonalization& orth);

 private:
  std::vector<Index> support_;
  Matrix psi_;      // m-by-j, orthonormal columns
  Matrix rinv_;     // j-by-j, upper triangular
  Vector z_;        // j
  Vector residual_; // m
};

struct Orthogonalization {
  double q_norm = 0.0;
  Vector psi;   // unit vector orthogonal to the current basis
  Vector proj;  // basis coefficients of the atom, needed for the R update
};

// Projects the atom off the current basis (with one re-orthogonalization
// pass for stability). Returns nullopt when the atom is numerically inside
// the span (q_norm <= 1e-10); callers skip such atoms and keep scanning.
std::optional<Orthogonalization> orthogonalize(const PursuitState& s,
                                               const ConstVectorRef& atom);

// Appends atom mu with coefficient step z_new: support, basis column,
// triangular inverse, z and residual all advance by one.
void extend_state(PursuitState& s, Index mu, double z_new,
                  const Orthogonalization& orth);

struct SparseCode {
  std::vector<Index> support;
  std::vector<double> coefficients;  // >= 0 up to roundoff
  double residual_norm = 0.0;
  int iterations_used = 0;
};

// Observer invoked after every accepted atom; used for telemetry and for
// invariant checks in tests.
struct IterationEvent {
  const PursuitState& state;
  Index atom;
  double z_accepted;
  bool clipped;  // accepted value came from a z_t clip
};
using IterationObserver = std::function<void(const IterationEvent&)>;

// Non-negative greedy decomposition, atoms visited in descending
// correlation order via a full scan of the dictionary per iteration.
SparseCode fnnomp_baseline(const Dictionary& d, const Vector& y, int j_max,
                           double eps, const IterationObserver& observer = {});

struct EnnTelemetry {
  struct Call {
    Index iteration;         // outer iteration the call belongs to
    std::size_t candidates;  // |S| right after the call
  };
  std::vector<Call> calls;
  double seconds = 0.0;
};

struct EnnResult {
  SparseCode code;
  EnnTelemetry telemetry;
};

// Same contract as fnnomp_baseline, but atoms are enumerated through the
// embedded search: one candidate-set build per outer iteration, then
// next-nearest updates whenever the table keeps scanning.
EnnResult fnnomp_enn(const SearchContext& ctx, const Vector& y, int j_max,
                     double eps, const IterationObserver& observer = {});

}  // namespace ennomp
