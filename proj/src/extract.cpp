#include "rgminor/extract.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rgminor/candidates.hpp"
#include "rgminor/errors.hpp"
#include "rgminor/finalize.hpp"
#include "rgminor/pair_state.hpp"
#include "rgminor/path.hpp"
#include "rgminor/verify.hpp"

namespace rgminor {

namespace {

// substream labels
enum : std::uint64_t {
  kFirstRound = 1,
  kSecondRound = 2,
  kRemainder = 3,
  kCandidatePath = 4,
  kJoinerPath = 5,
};

std::vector<Vertex> vertex_range(std::size_t from, std::size_t to) {
  std::vector<Vertex> out(to - from);
  std::iota(out.begin(), out.end(), static_cast<Vertex>(from));
  return out;
}

template <class Params>
StagePlan plan_with_fallback(const TrialDiagnostics &diag, const Params &params, std::size_t capacity,
                             const ExtractorConfig &config) {
  try {
    return plan_stages(diag.u0, diag.expected_u0, params, capacity, {true, false});
  } catch (const CapacityError &) {
    if (!config.allow_clamped_pieces)
      throw;
    return plan_stages(diag.u0, diag.expected_u0, params, capacity, {true, true});
  }
}

// Runs the planned stages over consecutive pieces of `joiner`.
void run_ladder(const StagePlan &plan, const VertexPath &joiner, const CandidateFamily &family, const Graph &graph,
                PairState &state, std::vector<JoinRecord> &joins, TrialDiagnostics &diag) {
  std::size_t offset = 0;
  for (std::size_t s = 0; s < plan.i_star; ++s) {
    // after a short stage the pieces are laid out for the realised pair
    // count rather than the planned U_{i-1}
    std::size_t len = plan.piece_len[s];
    std::size_t count = plan.path_counts[s];
    if (state.u_count() > plan.previous_target(s)) {
      len = std::max<std::size_t>(1, plan.q_sizes[s] / state.u_count());
      count = std::min(state.u_count(), plan.q_sizes[s] / len);
    }
    std::vector<VertexPath> pieces;
    pieces.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      auto first = joiner.vertices.begin() + static_cast<std::ptrdiff_t>(offset + j * len);
      pieces.push_back(VertexPath{{first, first + static_cast<std::ptrdiff_t>(len)}});
    }
    offset += plan.q_sizes[s];

    StageReport report;
    report.stage = s + 1;
    report.start_count = state.u_count();
    report.target = plan.targets[s];
    report.prune_threshold = plan.prune_deg[s];
    report.piece_len = len;
    report.paths_available = pieces.size();

    auto result = run_stage(std::move(state), family, pieces, graph, {plan.targets[s], plan.prune_deg[s]});
    state = std::move(result.state);
    for (const auto &join : result.joins)
      joins.push_back({join.pair, pieces[join.path_index].vertices});

    report.end_count = state.u_count();
    report.step = result.step;
    report.pruned_candidates = result.pruned.size();
    report.pruned_pairs = result.pruned_pairs;
    report.joined = result.joins.size();
    report.failed_paths = result.failed_paths;
    diag.pruned_total += result.pruned.size();
    diag.stages.push_back(report);
  }
}

MinorCertificate finish(const CandidateFamily &family, const PairState &state, const std::vector<JoinRecord> &joins,
                        const Graph &graph, TrialDiagnostics &diag) {
  auto finalized = finalize_minor(family, state, joins);
  diag.cover_deletions = finalized.cover_deletions;
  diag.order = finalized.certificate.order();
  const auto check = verify_minor(graph, finalized.certificate);
  if (!check)
    throw std::logic_error("extracted certificate failed verification: " + check.message());
  return std::move(finalized.certificate);
}

} // namespace

const char *to_string(Regime r) noexcept { return r == Regime::dense ? "dense" : "sparse"; }

ExtractionResult extract_dense(std::size_t n, double p, double eps, const RngStream &rng,
                               const ExtractorConfig &config) {
  DenseParams params = dense_parameters(n, p, eps, config);
  ExtractionResult out;
  TrialDiagnostics &diag = out.diagnostics;
  diag.regime = Regime::dense;
  diag.n = n;
  diag.regime_warning = p * std::log(static_cast<double>(n)) > 1.0;
  diag.k_prime_planned = params.k_prime;
  diag.t = params.t;

  // two-round exposure on V' = [0, n'); every other pair is exposed once
  // with probability p
  const std::size_t n_prime = params.n_prime;
  auto first_rng = rng.child(kFirstRound);
  auto second_rng = rng.child(kSecondRound);
  auto rest_rng = rng.child(kRemainder);
  const Graph first = sample_gnp(n_prime, params.split.p_first, first_rng).with_vertex_count(n);
  const Graph second = sample_gnp(n_prime, params.split.p_second, second_rng).with_vertex_count(n);
  out.graph = union_graphs(union_graphs(first, second), sample_gnp_outside_block(n, n_prime, p, rest_rng));
  diag.m = out.graph.edge_count();

  const auto inner = vertex_range(0, n_prime);
  const VertexPath path = find_long_path(first, inner, rng.child(kCandidatePath), config.path_budget);
  diag.path_length = path.size();
  // a short path shrinks the candidate count, never the candidate size
  params.k_prime = std::min(params.k_prime, path.size() / params.t);
  diag.k_prime_used = params.k_prime;

  const CandidateFamily family = build_candidates(path, params.k_prime, params.t, n);
  PairState state = compute_unjoined_pairs(family, second);
  diag.u0 = state.u_count();
  diag.expected_u0 = expected_unjoined(params.k_prime, params.t, params.split.p_second);

  std::vector<JoinRecord> joins;
  if (static_cast<double>(diag.u0) <= params.eps * params.eps * static_cast<double>(params.k_prime)) {
    diag.shortcut = true;
  } else if (n_prime < n) {
    const auto outer = vertex_range(n_prime, n);
    const VertexPath joiner = find_long_path(out.graph, outer, rng.child(kJoinerPath), config.path_budget);
    diag.joiner_path_length = joiner.size();
    diag.plan = plan_with_fallback(diag, params, joiner.size(), config);
    run_ladder(diag.plan, joiner, family, out.graph, state, joins, diag);
  }
  out.certificate = finish(family, state, joins, out.graph, diag);
  return out;
}

ExtractionResult extract_sparse(std::size_t n, double c, double delta, double alpha, const RngStream &rng,
                                const ExtractorConfig &config) {
  SparseParams params = sparse_parameters(n, c, delta, alpha);
  ExtractionResult out;
  TrialDiagnostics &diag = out.diagnostics;
  diag.regime = Regime::sparse;
  diag.n = n;
  diag.k_prime_planned = params.k_prime;
  diag.t = params.t;

  const double nd = static_cast<double>(n);
  auto first_rng = rng.child(kFirstRound);
  auto second_rng = rng.child(kSecondRound);
  const Graph first = sample_gnp(n, params.c1 / nd, first_rng);
  const Graph second = sample_gnp(n, params.c2 / nd, second_rng);
  out.graph = union_graphs(first, second);
  diag.m = out.graph.edge_count();

  // one path, split into P' (candidates) and P'' (joiners)
  const VertexPath path = find_long_path(first, rng.child(kCandidatePath), config.path_budget);
  const std::size_t half = std::min(path.size() / 2, floor_size(alpha * nd));
  const VertexPath head{{path.vertices.begin(), path.vertices.begin() + static_cast<std::ptrdiff_t>(half)}};
  const VertexPath tail{{path.vertices.begin() + static_cast<std::ptrdiff_t>(half), path.vertices.end()}};
  diag.path_length = head.size();
  diag.joiner_path_length = tail.size();
  params.k_prime = std::min(params.k_prime, head.size() / params.t);
  diag.k_prime_used = params.k_prime;

  const CandidateFamily family = build_candidates(head, params.k_prime, params.t, n);
  PairState state = compute_unjoined_pairs(family, second);
  diag.u0 = state.u_count();
  diag.expected_u0 = expected_unjoined(params.k_prime, params.t, params.c2 / nd);

  std::vector<JoinRecord> joins;
  if (static_cast<double>(diag.u0) <= delta * delta * static_cast<double>(params.k_prime)) {
    diag.shortcut = true;
  } else {
    diag.plan = plan_with_fallback(diag, params, tail.size(), config);
    run_ladder(diag.plan, tail, family, out.graph, state, joins, diag);
  }
  out.certificate = finish(family, state, joins, out.graph, diag);
  return out;
}

} // namespace rgminor
