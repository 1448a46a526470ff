#ifndef RGMINOR_STAGE_ENGINE_HPP
#define RGMINOR_STAGE_ENGINE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rgminor/candidates.hpp"
#include "rgminor/graph.hpp"
#include "rgminor/pair_state.hpp"
#include "rgminor/path.hpp"

namespace rgminor {

struct StageSettings {
  std::size_t target_remaining = 0; // U_i
  double prune_threshold = 0.0;     // Delta_{i-1}
};

enum class StageStep {
  none,         // already at or below target
  pruned_quota, // enough pairs touched high-degree candidates
  greedy,       // joined through paths
};

const char *to_string(StageStep step) noexcept;

struct JoinAssignment {
  CandidatePair pair;
  std::size_t path_index = 0;
};

struct StageResult {
  PairState state;
  StageStep step = StageStep::none;
  std::vector<CandidateIndex> pruned;
  std::size_t pruned_pairs = 0;
  std::vector<JoinAssignment> joins;
  std::size_t failed_paths = 0;
  std::size_t paths_used = 0;
  bool reached_target = false;
};

/// One greedy stage.
///
/// Let B be the candidates of degree above the threshold. If at least
/// u_count - target pairs touch B, exactly that many of them (lowest pair
/// order first) are dropped and the stage ends. Otherwise all pairs touching
/// B are dropped, then each path in turn joins the smallest remaining pair
/// both of whose candidates it sends an edge to in `joiner_graph`, until
/// `target_remaining` pairs are left or the paths run out. B is discarded in
/// both cases.
///
/// Paths must avoid every candidate set and each other (DomainError).
StageResult run_stage(PairState state, const CandidateFamily &family, std::span<const VertexPath> paths,
                      const Graph &joiner_graph, StageSettings settings);

} // namespace rgminor

#endif
