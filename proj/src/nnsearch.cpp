#include "ennomp/nnsearch.hpp"

#include <algorithm>
#include <limits>

namespace ennomp {

namespace {

// Inserts `i` into an ascending index vector if absent.
void insert_sorted(std::vector<Index>& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i);
  if (it == v.end() || *it != i) v.insert(it, i);
}

// Caches the original-space distance of atom i and makes it a candidate.
void enroll(const SearchContext& ctx, CandidateState& s, Index i) {
  if (!s.has_original(i)) {
    s.original_dists[static_cast<std::size_t>(i)] =
        distance(ctx.dict().atom(i), s.query);
    s.cached[static_cast<std::size_t>(i)] = 1;
  }
  insert_sorted(s.candidates, i);
}

// Embedded-space argmin over non-rejected atoms; ties to smallest index.
std::optional<Index> embedded_argmin(const CandidateState& s) {
  Index best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < s.embedded_dists.size(); ++i) {
    if (s.is_rejected(i)) continue;
    const double d = s.embedded_dists[i];
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace

NnResult brute_force_nn(const Dictionary& d, const ConstVectorRef& y,
                        std::span<const Index> excluded) {
  if (y.size() != d.m()) {
    throw DimensionMismatch("brute_force_nn: query dim vs dictionary dim");
  }
  require_finite(y, "query");
  std::vector<char> skip(static_cast<std::size_t>(d.n()), 0);
  for (const Index i : excluded) {
    if (i >= 0 && i < d.n()) skip[static_cast<std::size_t>(i)] = 1;
  }
  NnResult best;
  best.dist = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < d.n(); ++i) {
    if (skip[static_cast<std::size_t>(i)]) continue;
    const double dist = distance(d.atom(i), y);
    if (dist < best.dist) {
      best.dist = dist;
      best.index = i;
    }
  }
  if (best.index < 0) throw AllExcluded("brute_force_nn: every atom excluded");
  return best;
}

SearchContext::SearchContext(Dictionary dict, Embedding embedding)
    : dict_(std::move(dict)),
      embedding_(std::move(embedding)),
      embedded_(embed_dictionary(embedding_, dict_)) {}

bool CandidateState::is_candidate(Index i) const {
  return std::binary_search(candidates.begin(), candidates.end(), i);
}

CandidateState enn_init(const SearchContext& ctx, const ConstVectorRef& y) {
  if (y.size() != ctx.dict().m()) {
    throw DimensionMismatch("enn_init: query dim vs dictionary dim");
  }
  require_finite(y, "query");
  const double delta = ctx.embedding().delta();  // throws DeltaUnset
  const Index n = ctx.dict().n();

  CandidateState s;
  s.query = y;
  s.embedded_query = embed(ctx.embedding(), y);
  s.embedded_dists.resize(n);
  for (Index i = 0; i < n; ++i) {
    s.embedded_dists[i] = distance(ctx.embedded().col(i), s.embedded_query);
  }
  s.original_dists.assign(static_cast<std::size_t>(n), 0.0);
  s.cached.assign(static_cast<std::size_t>(n), 0);
  s.rejected.assign(static_cast<std::size_t>(n), 0);

  const Index nn_k = *embedded_argmin(s);  // n >= 1, nothing rejected yet
  enroll(ctx, s, nn_k);
  const double radius = s.original(nn_k) + delta;
  for (Index i = 0; i < n; ++i) {
    if (s.embedded_dists[i] <= radius) enroll(ctx, s, i);
  }
  return s;
}

Index enn_select(const CandidateState& state) {
  if (state.candidates.empty()) {
    throw EmptyCandidates("enn_select: candidate set is empty");
  }
  // Candidates are kept in ascending index order, so the strict < keeps
  // ties on the smallest index.
  Index best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const Index i : state.candidates) {
    const double d = state.original(i);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

std::optional<Index> unn_next(const SearchContext& ctx, CandidateState& state,
                              Index mu) {
  if (!state.is_candidate(mu)) throw NotACandidate(mu);

  auto it = std::lower_bound(state.candidates.begin(), state.candidates.end(), mu);
  state.candidates.erase(it);
  state.rejected[static_cast<std::size_t>(mu)] = 1;
  ++state.rejected_count;

  const auto nn_k = embedded_argmin(state);
  if (!nn_k) return std::nullopt;  // every atom rejected

  enroll(ctx, state, *nn_k);
  const double radius = state.original(*nn_k) + ctx.embedding().delta();
  for (Index i = 0; i < state.embedded_dists.size(); ++i) {
    // S'' holds the atoms newly inside the radius; everything cached
    // already has its exact distance and needs only the comparison.
    if (state.is_rejected(i) || state.has_original(i)) continue;
    if (state.embedded_dists[i] <= radius) enroll(ctx, state, i);
  }

  // The radius atom is enrolled, so the set is non-empty here.
  Index best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const Index i : state.candidates) {
    const double d = state.original(i);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

}  // namespace ennomp
