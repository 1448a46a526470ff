#include "rgminor/summary.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

bool same_point(const GridPoint &a, const GridPoint &b) {
  return a.regime == b.regime && a.n == b.n && a.param == b.param && a.shape == b.shape && a.alpha == b.alpha;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

} // namespace

std::vector<SummaryRow> summarize(std::span<const TrialRecord> records) {
  if (records.empty())
    throw DomainError("nothing to summarize");
  std::vector<GridPoint> points;
  for (const auto &r : records)
    if (std::none_of(points.begin(), points.end(), [&](const GridPoint &p) { return same_point(p, r.point); }))
      points.push_back(r.point);

  std::vector<SummaryRow> rows;
  for (const auto &point : points) {
    SummaryRow row;
    row.point = point;
    std::vector<double> orders;
    std::size_t passed = 0;
    double midpoint_sum = 0.0;
    row.min_order = std::numeric_limits<std::size_t>::max();
    for (const auto &r : records) {
      if (!same_point(point, r.point))
        continue;
      ++row.trials;
      orders.push_back(static_cast<double>(r.order));
      row.min_order = std::min(row.min_order, r.order);
      row.max_order = std::max(row.max_order, r.order);
      passed += r.verified ? 1 : 0;
      midpoint_sum += 0.5 * (r.theory_lower + r.theory_upper);
      row.mean_u0 += static_cast<double>(r.u0);
      row.mean_expected_u0 += r.expected_u0;
    }
    const double count = static_cast<double>(row.trials);
    row.median_order = median(orders);
    row.band_midpoint = midpoint_sum / count;
    row.ratio = row.band_midpoint > 0.0 ? row.median_order / row.band_midpoint : 0.0;
    row.pass_rate = static_cast<double>(passed) / count;
    row.mean_u0 /= count;
    row.mean_expected_u0 /= count;
    if (row.mean_expected_u0 > 0.0)
      row.u0_relative_error = std::abs(row.mean_u0 - row.mean_expected_u0) / row.mean_expected_u0;
    else
      row.u0_relative_error = row.mean_u0 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    rows.push_back(row);
  }
  return rows;
}

void write_summary(std::ostream &out, std::span<const SummaryRow> rows) {
  out << std::left << std::setw(7) << "regime" << std::right << std::setw(9) << "n" << std::setw(12) << "param"
      << std::setw(8) << "shape" << std::setw(7) << "alpha" << std::setw(7) << "trials" << std::setw(9)
      << "median" << std::setw(7) << "min" << std::setw(7) << "max" << std::setw(10) << "midpoint"
      << std::setw(8) << "ratio" << std::setw(7) << "pass" << std::setw(10) << "mean_U0" << std::setw(10)
      << "mean_EU0" << std::setw(9) << "U0_err" << '\n';
  for (const auto &r : rows) {
    out << std::left << std::setw(7) << to_string(r.point.regime) << std::right << std::setw(9) << r.point.n
        << std::setw(12) << std::setprecision(6) << r.point.param << std::setw(8) << r.point.shape
        << std::setw(7) << r.point.alpha << std::setw(7) << r.trials << std::fixed << std::setprecision(1)
        << std::setw(9) << r.median_order << std::setw(7) << r.min_order << std::setw(7) << r.max_order
        << std::setw(10) << r.band_midpoint << std::setprecision(3) << std::setw(8) << r.ratio
        << std::setw(7) << r.pass_rate << std::setprecision(1) << std::setw(10) << r.mean_u0 << std::setw(10)
        << r.mean_expected_u0 << std::setprecision(3) << std::setw(9) << r.u0_relative_error
        << std::defaultfloat << '\n';
  }
}

} // namespace rgminor
