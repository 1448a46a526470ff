#ifndef RGMINOR_EXTRACT_HPP
#define RGMINOR_EXTRACT_HPP

#include <cstddef>
#include <vector>

#include "rgminor/certificate.hpp"
#include "rgminor/graph.hpp"
#include "rgminor/params.hpp"
#include "rgminor/rng.hpp"
#include "rgminor/stage_engine.hpp"
#include "rgminor/stage_plan.hpp"

namespace rgminor {

enum class Regime { dense, sparse };

const char *to_string(Regime r) noexcept;

struct StageReport {
  std::size_t stage = 0; // 1-based
  std::size_t start_count = 0;
  std::size_t target = 0;
  std::size_t end_count = 0;
  StageStep step = StageStep::none;
  double prune_threshold = 0.0;
  std::size_t pruned_candidates = 0;
  std::size_t pruned_pairs = 0;
  std::size_t piece_len = 0;
  std::size_t paths_available = 0;
  std::size_t joined = 0;
  std::size_t failed_paths = 0;
};

struct TrialDiagnostics {
  Regime regime = Regime::dense;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t path_length = 0;        // candidate path (P' or the whole of P)
  std::size_t joiner_path_length = 0; // path in V'' (dense) or P'' (sparse)
  std::size_t k_prime_planned = 0;
  std::size_t k_prime_used = 0;
  std::size_t t = 0;
  std::size_t u0 = 0;
  double expected_u0 = 0.0;
  bool shortcut = false;       // finished by deletion without stages
  bool regime_warning = false; // p is not small (dense) for this n
  StagePlan plan;
  std::vector<StageReport> stages;
  std::size_t pruned_total = 0;
  std::size_t cover_deletions = 0;
  std::size_t order = 0;
};

struct ExtractionResult {
  MinorCertificate certificate;
  TrialDiagnostics diagnostics;
  Graph graph; // the realised union of all exposure rounds
};

/// Dense regime on G(n, p). The returned certificate has been checked
/// against `graph` with verify_minor.
ExtractionResult extract_dense(std::size_t n, double p, double eps, const RngStream &rng,
                               const ExtractorConfig &config = {});

/// Sparse regime on G(n, c/n).
ExtractionResult extract_sparse(std::size_t n, double c, double delta, double alpha, const RngStream &rng,
                                const ExtractorConfig &config = {});

} // namespace rgminor

#endif
