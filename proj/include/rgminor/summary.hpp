#ifndef RGMINOR_SUMMARY_HPP
#define RGMINOR_SUMMARY_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "rgminor/experiment.hpp"

namespace rgminor {

struct SummaryRow {
  GridPoint point;
  std::size_t trials = 0;
  double median_order = 0.0;
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  double band_midpoint = 0.0;
  double ratio = 0.0; // median order / band midpoint
  double pass_rate = 0.0;
  double mean_u0 = 0.0;
  double mean_expected_u0 = 0.0;
  double u0_relative_error = 0.0; // |mean U0 - mean E(U0)| / mean E(U0)
};

/// One row per grid point, in order of first appearance. Throws
/// DomainError on empty input.
std::vector<SummaryRow> summarize(std::span<const TrialRecord> records);

void write_summary(std::ostream &out, std::span<const SummaryRow> rows);

} // namespace rgminor

#endif
