#include "rgminor/pair_state.hpp"

#include <algorithm>
#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

PairState::PairState(std::size_t candidate_count) : partners_(candidate_count) {}

void PairState::add_unjoined(CandidatePair pair) {
  if (pair.first >= pair.second || pair.second >= partners_.size())
    throw DomainError("invalid candidate pair (" + std::to_string(pair.first) + ", " +
                      std::to_string(pair.second) + ")");
  if (unjoined_.insert(pair).second) {
    partners_[pair.first].insert(pair.second);
    partners_[pair.second].insert(pair.first);
  }
}

bool PairState::remove(CandidatePair pair) {
  if (unjoined_.erase(pair) == 0)
    return false;
  partners_[pair.first].erase(pair.second);
  partners_[pair.second].erase(pair.first);
  return true;
}

void PairState::discard(CandidateIndex i) {
  if (i >= partners_.size())
    throw DomainError("candidate index out of range");
  discarded_.insert(i);
}

PairState compute_unjoined_pairs(const CandidateFamily &family, const Graph &second_round) {
  if (second_round.vertex_count() != family.vertex_count())
    throw DomainError("second-round graph and candidate family disagree on the vertex universe");
  const std::size_t k = family.size();
  PairState state(k);
  // joined[j] == i + 1 marks B_j as adjacent to B_i
  std::vector<std::size_t> joined(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : family.set(static_cast<CandidateIndex>(i))) {
      for (Vertex w : second_round.neighbors(v)) {
        const std::int64_t j = family.owner(w);
        if (j != CandidateFamily::kNone)
          joined[static_cast<std::size_t>(j)] = i + 1;
      }
    }
    for (std::size_t j = i + 1; j < k; ++j)
      if (joined[j] != i + 1)
        state.add_unjoined({static_cast<CandidateIndex>(i), static_cast<CandidateIndex>(j)});
  }
  return state;
}

PruneResult prune_high_degree(PairState state, double threshold) {
  if (!(threshold > 0.0))
    throw DomainError("prune threshold must be positive");
  PruneResult result;
  for (CandidateIndex i = 0; i < state.candidate_count(); ++i)
    if (static_cast<double>(state.degree(i)) > threshold)
      result.pruned.push_back(i);
  for (CandidateIndex i : result.pruned) {
    const std::vector<CandidateIndex> partners(state.partners(i).begin(), state.partners(i).end());
    for (CandidateIndex j : partners)
      state.remove(CandidatePair::of(i, j));
    state.discard(i);
  }
  result.state = std::move(state);
  return result;
}

} // namespace rgminor
