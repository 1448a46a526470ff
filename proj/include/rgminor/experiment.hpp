#ifndef RGMINOR_EXPERIMENT_HPP
#define RGMINOR_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgminor/exact.hpp"
#include "rgminor/extract.hpp"
#include "rgminor/path.hpp"

namespace rgminor {

struct ExperimentConfig {
  Regime regime = Regime::dense;
  std::vector<std::size_t> n;
  std::vector<double> p;  // dense: edge probabilities
  std::vector<double> np; // dense: expected degrees, p = np / n
  std::vector<double> c;  // sparse: p = c / n
  std::vector<double> eps{0.2};
  std::vector<double> delta{0.05};
  std::vector<double> alpha{0.3};
  std::size_t seeds = 1;
  std::uint64_t base_seed = 1;
  PathSearchBudget budget;
  double path_constant = ExtractorConfig{}.path_constant;
  std::size_t exact_cap = kDefaultExactCap;
  std::filesystem::path output = ".";
  std::size_t jobs = 1;
  bool record_timing = false;
};

/// Reads the JSON config format; unknown keys are rejected.
ExperimentConfig parse_config(const std::string &json_text);
ExperimentConfig load_config(const std::filesystem::path &file);

/// One point of the parameter grid. `param` is p (dense) or c (sparse);
/// `shape` is eps (dense) or delta (sparse); alpha is 0 for dense points.
struct GridPoint {
  Regime regime = Regime::dense;
  std::size_t n = 0;
  double param = 0.0;
  double shape = 0.0;
  double alpha = 0.0;
};

/// Grid in canonical order: n, then p/np/c, then eps/delta, then alpha.
std::vector<GridPoint> expand_grid(const ExperimentConfig &config);

/// Throws DomainError naming the first invalid grid point or setting.
void validate_config(const ExperimentConfig &config);

inline constexpr std::uint64_t kStreamsPerGridPoint = 1'000'000;

struct TrialRecord {
  GridPoint point;
  std::uint64_t base_seed = 0;
  std::uint64_t stream_id = 0;
  std::size_t m = 0;
  std::size_t k_prime = 0;
  std::size_t t = 0;
  std::size_t u0 = 0;
  double expected_u0 = 0.0;
  std::vector<std::size_t> stage_joined;
  std::vector<std::size_t> stage_failed;
  std::size_t pruned_total = 0;
  std::size_t order = 0;
  bool verified = false;
  double theory_lower = 0.0;
  double theory_upper = 0.0;
  std::optional<std::size_t> exact;
  std::optional<double> wall_ms;
};

struct TrialOutput {
  TrialRecord record;
  ExtractionResult extraction;
};

/// Runs one extraction and re-verifies its certificate; throws if the
/// certificate does not verify.
TrialOutput run_trial(const GridPoint &point, std::uint64_t base_seed, std::uint64_t stream_id,
                      const ExperimentConfig &config);

/// Every (grid point x seed) trial, stream_id = grid_index * 10^6 +
/// seed_index. Rows go to <output>/trials.csv in grid-major, seed-minor
/// order as soon as they are available. The output file is opened before
/// any trial runs (IoError if that fails).
std::vector<TrialRecord> run_experiment(const ExperimentConfig &config);

std::filesystem::path trials_csv_path(const ExperimentConfig &config);

// CSV: a guard line carrying the schema version and a hash of the header,
// the header, then one row per trial. LF line endings.
const std::string &csv_header();
std::string csv_guard_line();
void write_csv_preamble(std::ostream &out);
void write_csv_row(std::ostream &out, const TrialRecord &record);
std::vector<TrialRecord> read_trials_csv(std::istream &in);

std::uint64_t fnv1a64(std::string_view text) noexcept;

} // namespace rgminor

#endif
