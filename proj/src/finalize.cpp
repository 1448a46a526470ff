#include "rgminor/finalize.hpp"

#include <algorithm>

namespace rgminor {

FinalizedMinor finalize_minor(const CandidateFamily &family, const PairState &state,
                              std::span<const JoinRecord> joins) {
  const std::size_t k = family.size();
  std::vector<char> deleted(k, 0);
  FinalizedMinor out;
  for (CandidateIndex i : state.discarded()) {
    deleted[i] = 1;
    ++out.discarded_deletions;
  }

  // residual auxiliary graph on the surviving candidates
  std::vector<std::vector<CandidateIndex>> residual(k);
  std::vector<std::size_t> degree(k, 0);
  for (const auto &pair : state.unjoined()) {
    if (deleted[pair.first] || deleted[pair.second])
      continue;
    residual[pair.first].push_back(pair.second);
    residual[pair.second].push_back(pair.first);
    ++degree[pair.first];
    ++degree[pair.second];
  }
  for (;;) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (degree[i] > 0 && (pick == k || degree[i] > degree[pick]))
        pick = i;
    if (pick == k)
      break;
    deleted[pick] = 1;
    ++out.cover_deletions;
    degree[pick] = 0;
    for (CandidateIndex j : residual[pick])
      if (!deleted[j])
        --degree[j];
  }

  std::vector<std::vector<Vertex>> sets(k);
  for (CandidateIndex i = 0; i < k; ++i)
    if (!deleted[i])
      sets[i].assign(family.set(i).begin(), family.set(i).end());
  for (const auto &join : joins) {
    if (deleted[join.pair.first] || deleted[join.pair.second])
      continue;
    auto &target = sets[join.pair.first];
    target.insert(target.end(), join.path.begin(), join.path.end());
  }
  for (CandidateIndex i = 0; i < k; ++i) {
    if (deleted[i])
      continue;
    std::sort(sets[i].begin(), sets[i].end());
    out.retained.push_back(i);
    out.certificate.branch_sets.push_back(std::move(sets[i]));
  }
  return out;
}

} // namespace rgminor
