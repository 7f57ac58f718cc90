#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ennomp/core.hpp"
#include "ennomp/embedding.hpp"

namespace ennomp {

struct NnResult {
  Index index = -1;
  double dist = 0.0;
};

// Linear scan over all non-excluded atoms; ties go to the smallest index.
// This is the reference the embedded search is measured against.
NnResult brute_force_nn(const Dictionary& d, const ConstVectorRef& y,
                        std::span<const Index> excluded = {});

// Immutable pairing of a dictionary with its embedded image; shared by all
// queries. The embedded matrix is computed once, column by column.
class SearchContext {
 public:
  SearchContext(Dictionary dict, Embedding embedding);

  const Dictionary& dict() const { return dict_; }
  const Embedding& embedding() const { return embedding_; }
  const Matrix& embedded() const { return embedded_; }

 private:
  Dictionary dict_;
  Embedding embedding_;
  Matrix embedded_;
};

// Working set of one query's search. Single-owner, mutated only through
// enn_init / unn_next. Every candidate has its original-space distance
// cached; rejected atoms keep their cache entries but never win again.
struct CandidateState {
  Vector query;           // dim M
  Vector embedded_query;  // dim K
  Vector embedded_dists;  // N embedded-space distances, fixed after init
  std::vector<Index> candidates;       // ascending index order
  std::vector<double> original_dists;  // N slots; valid where cached[i]
  std::vector<char> cached;            // N flags
  std::vector<char> rejected;          // N flags
  Index rejected_count = 0;

  bool is_candidate(Index i) const;
  bool is_rejected(Index i) const { return rejected[static_cast<std::size_t>(i)] != 0; }
  bool has_original(Index i) const { return cached[static_cast<std::size_t>(i)] != 0; }
  double original(Index i) const { return original_dists[static_cast<std::size_t>(i)]; }
};

// Embeds the query, finds the embedded-space nearest atom, and collects
// every atom whose embedded distance is within (original distance to that
// atom) + delta. The radius-defining atom is always enrolled: its original
// distance is computed for the radius anyway, and the bound argument places
// it inside the set whenever the bound holds, so floating-point noise on
// the boundary must not evict it.
CandidateState enn_init(const SearchContext& ctx, const ConstVectorRef& y);

// Candidate with the smallest cached original distance; ties go to the
// smallest index. Throws EmptyCandidates if the set is empty.
Index enn_select(const CandidateState& state);

// Rejects `mu`, re-derives the embedded-space nearest among the remaining
// atoms, widens the candidate set to the new radius (new members only; no
// cached distance is ever recomputed), and returns the next-best atom.
// Returns nullopt once every atom has been rejected.
std::optional<Index> unn_next(const SearchContext& ctx, CandidateState& state,
                              Index mu);

}  // namespace ennomp
