#ifndef RGMINOR_PAIR_STATE_HPP
#define RGMINOR_PAIR_STATE_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "rgminor/candidates.hpp"
#include "rgminor/graph.hpp"

namespace rgminor {

/// Unordered candidate pair, stored with first < second. The defaulted
/// comparison is the lexicographic pair order the greedy stages use.
struct CandidatePair {
  CandidateIndex first = 0;
  CandidateIndex second = 0;

  static CandidatePair of(CandidateIndex a, CandidateIndex b) { return a < b ? CandidatePair{a, b} : CandidatePair{b, a}; }

  friend auto operator<=>(const CandidatePair &, const CandidatePair &) = default;
};

/// Unjoined candidate pairs (the edges of the auxiliary graph on
/// candidates) together with the candidates discarded so far.
///
/// degree(i) always equals the number of unjoined pairs containing i.
class PairState {
public:
  PairState() = default;
  explicit PairState(std::size_t candidate_count);

  std::size_t candidate_count() const noexcept { return partners_.size(); }
  std::size_t u_count() const noexcept { return unjoined_.size(); }
  const std::set<CandidatePair> &unjoined() const noexcept { return unjoined_; }
  bool contains(CandidatePair pair) const { return unjoined_.contains(pair); }

  std::size_t degree(CandidateIndex i) const { return partners_.at(i).size(); }
  const std::set<CandidateIndex> &partners(CandidateIndex i) const { return partners_.at(i); }

  const std::set<CandidateIndex> &discarded() const noexcept { return discarded_; }
  bool is_discarded(CandidateIndex i) const { return discarded_.contains(i); }

  void add_unjoined(CandidatePair pair);
  /// Returns false if the pair was not present.
  bool remove(CandidatePair pair);
  void discard(CandidateIndex i);

private:
  std::set<CandidatePair> unjoined_;
  std::vector<std::set<CandidateIndex>> partners_;
  std::set<CandidateIndex> discarded_;
};

/// All pairs (i < j) of candidates with no edge between them in
/// `second_round`.
PairState compute_unjoined_pairs(const CandidateFamily &family, const Graph &second_round);

struct PruneResult {
  PairState state;
  std::vector<CandidateIndex> pruned;
};

/// Discards every candidate of degree > threshold and drops all unjoined
/// pairs touching one of them; those pairs count as joined from now on.
PruneResult prune_high_degree(PairState state, double threshold);

} // namespace rgminor

#endif
