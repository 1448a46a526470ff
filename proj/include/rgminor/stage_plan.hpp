#ifndef RGMINOR_STAGE_PLAN_HPP
#define RGMINOR_STAGE_PLAN_HPP

#include <cstddef>
#include <vector>

#include "rgminor/params.hpp"

namespace rgminor {

/// The geometric ladder for the greedy joining stages. Vectors are indexed
/// by stage i-1 for stages i = 1..i_star.
struct StagePlan {
  std::size_t u0 = 0;
  double expected_u0 = 0.0;
  std::size_t i_star = 0;
  std::vector<std::size_t> targets;      // U_i = U_0 / 8^i
  std::vector<double> formula_q_sizes;   // |Q_i| from the regime formula
  std::vector<std::size_t> q_sizes;      // |Q_i| after fitting the joiner path
  std::vector<std::size_t> piece_len;    // l_i = |Q_i| / U_{i-1}
  std::vector<std::size_t> path_counts;  // |P_i|
  std::vector<double> prune_deg;         // Delta_{i-1}
  bool clamped = false;                  // some l_i was raised from 0 to 1

  std::size_t previous_target(std::size_t stage_index) const {
    return stage_index == 0 ? u0 : targets[stage_index - 1];
  }
};

struct PlanOptions {
  /// Rescale every |Q_i| by one common factor so that they fill the joiner
  /// path exactly. When false, sizes are only scaled down, and only if they
  /// would overflow the path.
  bool scale_to_capacity = true;
  /// Raise l_i = 0 to 1 (with fewer pieces than pairs) instead of throwing.
  bool clamp_piece_len = false;
};

/// Empty ladder when u0 <= n^(1/3). Throws CapacityError when some l_i
/// rounds to 0 and clamping is off.
StagePlan plan_stages(std::size_t u0, double expected_u0, const DenseParams &params, std::size_t joiner_capacity,
                      PlanOptions options = {});
StagePlan plan_stages(std::size_t u0, double expected_u0, const SparseParams &params, std::size_t joiner_capacity,
                      PlanOptions options = {});

/// E(U_0) = C(k', 2) q with q = (1-p'')^(t^2) (dense) or (1-c2/n)^(t^2).
double expected_unjoined(std::size_t k_prime, std::size_t t, double second_round_p);

} // namespace rgminor

#endif
