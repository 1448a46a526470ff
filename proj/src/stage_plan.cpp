#include "rgminor/stage_plan.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

struct LadderShape {
  std::size_t n = 0;
  std::size_t k_prime = 0;
  // |Q_i| before fitting, as a function of i
  std::function<double(std::size_t)> q_size;
  // eps^(3/2) (dense) or delta^(1/2) (sparse) in Delta_{i-1}
  double prune_scale = 1.0;
};

StagePlan build_plan(std::size_t u0, double expected_u0, const LadderShape &shape, std::size_t capacity,
                     PlanOptions options) {
  StagePlan plan;
  plan.u0 = u0;
  plan.expected_u0 = expected_u0;

  const double floor_target = std::cbrt(static_cast<double>(shape.n));
  if (static_cast<double>(u0) <= floor_target)
    return plan;
  const double octaves = (std::log(static_cast<double>(u0)) - std::log(floor_target)) / std::log(8.0);
  plan.i_star = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(octaves - 1e-9)));

  double formula_total = 0.0;
  for (std::size_t i = 1; i <= plan.i_star; ++i) {
    plan.targets.push_back(static_cast<std::size_t>(static_cast<double>(u0) / std::pow(8.0, static_cast<double>(i))));
    plan.formula_q_sizes.push_back(shape.q_size(i));
    formula_total += plan.formula_q_sizes.back();
    plan.prune_deg.push_back(8.0 * expected_u0 /
                             (shape.prune_scale * std::pow(4.0, static_cast<double>(i - 1)) *
                              static_cast<double>(shape.k_prime)));
  }

  double factor = static_cast<double>(capacity) / formula_total;
  if (!options.scale_to_capacity)
    factor = std::min(1.0, factor);
  for (std::size_t s = 0; s < plan.i_star; ++s) {
    const std::size_t q = floor_size(plan.formula_q_sizes[s] * factor);
    std::size_t len = q / plan.previous_target(s);
    if (len == 0) {
      if (!options.clamp_piece_len)
        throw CapacityError("stage " + std::to_string(s + 1) + ": |Q| = " + std::to_string(q) +
                            " cannot give one vertex to each of " + std::to_string(plan.previous_target(s)) +
                            " pairs");
      len = 1;
      plan.clamped = true;
    }
    plan.q_sizes.push_back(q);
    plan.piece_len.push_back(len);
    plan.path_counts.push_back(std::min(plan.previous_target(s), q / len));
  }
  return plan;
}

} // namespace

double expected_unjoined(std::size_t k_prime, std::size_t t, double second_round_p) {
  const double k = static_cast<double>(k_prime);
  const double tt = static_cast<double>(t) * static_cast<double>(t);
  return k * (k - 1.0) / 2.0 * std::exp(tt * std::log1p(-second_round_p));
}

StagePlan plan_stages(std::size_t u0, double expected_u0, const DenseParams &params, std::size_t joiner_capacity,
                      PlanOptions options) {
  const double n = static_cast<double>(params.n);
  const double log_np = std::log(n * params.p);
  const double eps2 = params.eps * params.eps;
  LadderShape shape{params.n, params.k_prime,
                    [=](std::size_t i) { return eps2 * n / (std::pow(2.0, static_cast<double>(i)) * log_np); },
                    std::pow(params.eps, 1.5)};
  return build_plan(u0, expected_u0, shape, joiner_capacity, options);
}

StagePlan plan_stages(std::size_t u0, double expected_u0, const SparseParams &params, std::size_t joiner_capacity,
                      PlanOptions options) {
  const double n = static_cast<double>(params.n);
  const double base = params.delta * params.delta * params.delta * params.alpha * n;
  LadderShape shape{params.n, params.k_prime,
                    [=](std::size_t i) { return base / std::pow(2.0, static_cast<double>(i)); },
                    std::sqrt(params.delta)};
  return build_plan(u0, expected_u0, shape, joiner_capacity, options);
}

} // namespace rgminor
