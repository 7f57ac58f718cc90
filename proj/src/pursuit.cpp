#include "ennomp/pursuit.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace ennomp {

namespace {

constexpr double kDegenerateTol = 1e-10;

}  // namespace

SelectionAction selection_rule(double z, double z_t, double z_c) {
  if (z > 0.0 && z <= z_t && z > z_c) return {SelectionKind::kAccept, z};
  if (z > 0.0 && z <= z_t && z <= z_c) return {SelectionKind::kAcceptCandidate};
  if (z > z_c && z_c >= z_t) return {SelectionKind::kContinueNext};
  if (z >= z_c && z_c > z_t) return {SelectionKind::kAcceptCandidate};
  if (z > z_t && z_t > z_c) return {SelectionKind::kClipAndContinue, z_t};
  if (z <= 0.0) return {SelectionKind::kTerminateNegative};
  // Remaining cell: 0 < z_t < z < z_c. The scanned atom cannot beat the
  // stored candidate even unclipped, so settle on the candidate, matching
  // the z <= z_c rows above.
  return {SelectionKind::kAcceptCandidate};
}

double z_threshold(const ConstVectorRef& x, const ConstVectorRef& gamma) {
  if (x.size() != gamma.size()) {
    throw DimensionMismatch("z_threshold: coefficient and gamma sizes differ");
  }
  double z_t = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < 0.0) z_t = std::min(z_t, std::abs(x[i]) / std::abs(gamma[i]));
  }
  return z_t;
}

PursuitState::PursuitState(Vector y)
    : psi_(y.size(), 0), rinv_(0, 0), z_(0), residual_(std::move(y)) {
  require_finite(residual_, "pursuit query");
}

std::optional<Orthogonalization> orthogonalize(const PursuitState& s,
                                               const ConstVectorRef& atom) {
  if (atom.size() != s.residual().size()) {
    throw DimensionMismatch("orthogonalize: atom dim vs state dim");
  }
  const Index j = s.iteration();
  Orthogonalization out;
  out.proj = s.psi().transpose() * atom;
  Vector q = atom - s.psi() * out.proj;
  if (j > 0) {
    // Second Gram-Schmidt pass; folded into proj so atom = psi*proj + q
    // still holds.
    const Vector corr = s.psi().transpose() * q;
    q -= s.psi() * corr;
    out.proj += corr;
  }
  out.q_norm = q.norm();
  if (out.q_norm <= kDegenerateTol) return std::nullopt;
  out.psi = q / out.q_norm;
  return out;
}

void extend_state(PursuitState& s, Index mu, double z_new,
                  const Orthogonalization& orth) {
  if (z_new < 0.0) throw ValidationError("extend_state: negative step");
  if (std::find(s.support_.begin(), s.support_.end(), mu) != s.support_.end()) {
    throw ValidationError("extend_state: atom already in support");
  }
  const Index j = s.iteration();

  Matrix rinv(j + 1, j + 1);
  rinv.setZero();
  rinv.topLeftCorner(j, j) = s.rinv_;
  if (j > 0) rinv.topRightCorner(j, 1) = -(s.rinv_ * orth.proj) / orth.q_norm;
  rinv(j, j) = 1.0 / orth.q_norm;
  s.rinv_ = std::move(rinv);

  s.psi_.conservativeResize(Eigen::NoChange, j + 1);
  s.psi_.col(j) = orth.psi;
  s.z_.conservativeResize(j + 1);
  s.z_[j] = z_new;
  s.residual_ -= z_new * orth.psi;
  s.support_.push_back(mu);
}

namespace {

struct ScanOutcome {
  Index atom = -1;
  double z_value = 0.0;
  Orthogonalization orth;
  bool clipped = false;
};

// One pass of the selection table over atoms produced by `next_atom`
// (nullopt = enumeration exhausted). Returns the accepted atom, or nullopt
// when the scan ends with nothing admissible.
template <typename NextAtom>
std::optional<ScanOutcome> selection_scan(const Dictionary& dict,
                                          const PursuitState& state,
                                          NextAtom&& next_atom) {
  const Vector x = state.coefficients();
  double z_c = 0.0;
  Index candidate_atom = -1;
  Orthogonalization candidate_orth;

  auto settle_on_candidate = [&]() -> std::optional<ScanOutcome> {
    // The table only routes here once a clip stored a positive candidate.
    assert(candidate_atom >= 0 && z_c > 0.0);
    return ScanOutcome{candidate_atom, z_c, candidate_orth, true};
  };

  for (std::optional<Index> mu = next_atom(); mu; mu = next_atom()) {
    const auto orth = orthogonalize(state, dict.atom(*mu));
    if (!orth) continue;  // atom inside the current span; next one

    // gamma is the head of the last column of the candidate-extended
    // triangular inverse: how admitting this atom would move the
    // existing coefficients per unit of step.
    const Vector gamma = state.iteration() > 0
                             ? Vector(-(state.rinv() * orth->proj) / orth->q_norm)
                             : Vector(0);
    const double z_t = z_threshold(x, gamma);
    const double z = orth->psi.dot(state.residual());

    const SelectionAction action = selection_rule(z, z_t, z_c);
    switch (action.kind) {
      case SelectionKind::kAccept:
        return ScanOutcome{*mu, action.value, *orth, false};
      case SelectionKind::kAcceptCandidate:
        return settle_on_candidate();
      case SelectionKind::kContinueNext:
        break;
      case SelectionKind::kClipAndContinue:
        z_c = action.value;
        candidate_atom = *mu;
        candidate_orth = *orth;
        break;
      case SelectionKind::kTerminateNegative:
        return std::nullopt;
    }
  }
  // Enumeration ran out. A positive stored candidate is still admissible.
  if (candidate_atom >= 0 && z_c > 0.0) return settle_on_candidate();
  return std::nullopt;
}

SparseCode finish(const PursuitState& state) {
  SparseCode code;
  code.support = state.support();
  const Vector x = state.coefficients();
  code.coefficients.assign(x.data(), x.data() + x.size());
  code.residual_norm = state.residual().norm();
  code.iterations_used = static_cast<int>(state.iteration());
  return code;
}

void check_driver_args(Index m, const Vector& y, int j_max, double eps) {
  if (y.size() != m) throw DimensionMismatch("pursuit: query dim vs dictionary dim");
  if (j_max < 1) throw ValidationError("pursuit: j_max must be >= 1");
  if (!(eps >= 0.0)) throw ValidationError("pursuit: eps must be >= 0");
}

}  // namespace

SparseCode fnnomp_baseline(const Dictionary& d, const Vector& y, int j_max,
                           double eps, const IterationObserver& observer) {
  check_driver_args(d.m(), y, j_max, eps);
  PursuitState state(y);
  const Index n = d.n();
  std::vector<Index> order(static_cast<std::size_t>(n));

  while (state.iteration() < j_max && state.residual().norm() > eps) {
    const Vector c = d.atoms().transpose() * state.residual();
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (c[a] != c[b]) return c[a] > c[b];
      return a < b;
    });

    std::size_t pos = 0;
    auto next = [&]() -> std::optional<Index> {
      if (pos >= order.size()) return std::nullopt;
      return order[pos++];
    };
    const auto outcome = selection_scan(d, state, next);
    if (!outcome) break;
    extend_state(state, outcome->atom, outcome->z_value, outcome->orth);
    if (observer) {
      observer({state, outcome->atom, outcome->z_value, outcome->clipped});
    }
  }
  return finish(state);
}

EnnResult fnnomp_enn(const SearchContext& ctx, const Vector& y, int j_max,
                     double eps, const IterationObserver& observer) {
  check_driver_args(ctx.dict().m(), y, j_max, eps);
  if (!ctx.embedding().has_delta()) {
    throw DeltaUnset("fnnomp_enn: embedding has no learned delta");
  }
  const auto started = std::chrono::steady_clock::now();

  EnnResult result;
  PursuitState state(y);

  while (state.iteration() < j_max && state.residual().norm() > eps) {
    CandidateState cs = enn_init(ctx, state.residual());
    result.telemetry.calls.push_back({state.iteration(), cs.candidates.size()});

    bool first = true;
    Index current = -1;
    auto next = [&]() -> std::optional<Index> {
      if (first) {
        first = false;
        current = enn_select(cs);
        return current;
      }
      const auto nxt = unn_next(ctx, cs, current);
      result.telemetry.calls.push_back({state.iteration(), cs.candidates.size()});
      if (nxt) current = *nxt;
      return nxt;
    };
    const auto outcome = selection_scan(ctx.dict(), state, next);
    if (!outcome) break;
    extend_state(state, outcome->atom, outcome->z_value, outcome->orth);
    if (observer) {
      observer({state, outcome->atom, outcome->z_value, outcome->clipped});
    }
  }

  result.code = finish(state);
  result.telemetry.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace ennomp
