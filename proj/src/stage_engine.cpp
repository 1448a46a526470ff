#include "rgminor/stage_engine.hpp"

#include <algorithm>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

void check_paths(const CandidateFamily &family, std::span<const VertexPath> paths, const Graph &g) {
  if (g.vertex_count() != family.vertex_count())
    throw DomainError("joiner graph and candidate family disagree on the vertex universe");
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto &path : paths) {
    for (Vertex v : path.vertices) {
      if (v >= g.vertex_count())
        throw DomainError("joiner path vertex out of range");
      if (family.owner(v) != CandidateFamily::kNone)
        throw DomainError("joiner path meets a candidate set");
      if (used[v])
        throw DomainError("joiner paths overlap");
      used[v] = 1;
    }
  }
}

} // namespace

const char *to_string(StageStep step) noexcept {
  switch (step) {
  case StageStep::none:
    return "none";
  case StageStep::pruned_quota:
    return "pruned_quota";
  case StageStep::greedy:
    return "greedy";
  }
  return "unknown";
}

StageResult run_stage(PairState state, const CandidateFamily &family, std::span<const VertexPath> paths,
                      const Graph &joiner_graph, StageSettings settings) {
  check_paths(family, paths, joiner_graph);
  StageResult result;
  const std::size_t start = state.u_count();
  if (start <= settings.target_remaining) {
    result.state = std::move(state);
    result.reached_target = true;
    return result;
  }
  const std::size_t quota = start - settings.target_remaining;

  // step (i): high-degree candidates alone account for the quota
  std::vector<CandidateIndex> high;
  for (CandidateIndex i = 0; i < state.candidate_count(); ++i)
    if (static_cast<double>(state.degree(i)) > settings.prune_threshold)
      high.push_back(i);
  std::vector<CandidatePair> touching;
  for (const auto &pair : state.unjoined())
    if (std::binary_search(high.begin(), high.end(), pair.first) ||
        std::binary_search(high.begin(), high.end(), pair.second))
      touching.push_back(pair);
  if (touching.size() >= quota) {
    for (std::size_t i = 0; i < quota; ++i)
      state.remove(touching[i]);
    for (CandidateIndex i : high)
      state.discard(i);
    result.step = StageStep::pruned_quota;
    result.pruned = std::move(high);
    result.pruned_pairs = quota;
    result.state = std::move(state);
    result.reached_target = true;
    return result;
  }

  // step (ii): drop everything touching the high-degree candidates, then
  // join greedily
  result.step = StageStep::greedy;
  result.pruned_pairs = touching.size();
  if (!high.empty()) {
    auto pruned = prune_high_degree(std::move(state), settings.prune_threshold);
    state = std::move(pruned.state);
    result.pruned = std::move(pruned.pruned);
  }

  std::vector<std::size_t> touched_mark(family.size(), 0);
  std::vector<CandidateIndex> touched;
  for (std::size_t j = 0; j < paths.size(); ++j) {
    if (state.u_count() <= settings.target_remaining)
      break;
    ++result.paths_used;
    touched.clear();
    for (Vertex v : paths[j].vertices) {
      for (Vertex w : joiner_graph.neighbors(v)) {
        const std::int64_t c = family.owner(w);
        if (c != CandidateFamily::kNone && touched_mark[static_cast<std::size_t>(c)] != j + 1) {
          touched_mark[static_cast<std::size_t>(c)] = j + 1;
          touched.push_back(static_cast<CandidateIndex>(c));
        }
      }
    }
    std::sort(touched.begin(), touched.end());

    // smallest pair (a, b) in lexicographic order with both ends touched
    bool joined = false;
    for (CandidateIndex a : touched) {
      const auto &partners = state.partners(a);
      for (auto it = partners.upper_bound(a); it != partners.end(); ++it) {
        if (touched_mark[*it] == j + 1) {
          const CandidatePair pair{a, *it};
          state.remove(pair);
          result.joins.push_back({pair, j});
          joined = true;
          break;
        }
      }
      if (joined)
        break;
    }
    if (!joined)
      ++result.failed_paths;
  }
  result.reached_target = state.u_count() <= settings.target_remaining;
  result.state = std::move(state);
  return result;
}

} // namespace rgminor
