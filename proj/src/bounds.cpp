#include "rgminor/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

double dense_scale(std::size_t n, double p) {
  const double np = static_cast<double>(n) * p;
  if (!(p > 0.0 && p <= 1.0) || !(std::log(np) > 1.0))
    throw RegimeError("dense regime needs np > e, got np = " + std::to_string(np));
  const double nd = static_cast<double>(n);
  return std::sqrt(nd * nd * p / std::log(np));
}

DenseBand theoretical_ccl_dense(std::size_t n, double p, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw DomainError("eps must lie in [0, 1]");
  const double scale = dense_scale(n, p);
  const double np = static_cast<double>(n) * p;
  // n / sqrt(log_b(np)) = n * sqrt(ln b / ln(np)), ln b = -ln(1 - p)
  const double corollary =
      static_cast<double>(n) * std::sqrt(-std::log1p(-p) / std::log(np));
  return {(1.0 - eps) * scale, (1.0 + eps) * scale, (1.0 - eps) * corollary, (1.0 + eps) * corollary};
}

SparseBand sparse_bounds(std::size_t n, double c, double delta) {
  if (!(c > 1.0))
    throw RegimeError("sparse regime needs c > 1");
  if (n < 1)
    throw DomainError("sparse bounds need n >= 1");
  const double nd = static_cast<double>(n);
  return {delta * std::sqrt(nd), 2.0 * std::sqrt(c * nd)};
}

std::size_t edge_bound_ccl(std::size_t m) {
  auto k = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0);
  auto fits = [m](std::size_t x) { return x * (x - 1) / 2 <= m; };
  while (k > 1 && !fits(k))
    --k;
  while (fits(k + 1))
    ++k;
  return k;
}

BoundReport first_moment_log_bound(std::size_t n, double p, std::size_t k) {
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("first-moment bound needs 0 < p < 1");
  if (k < 2 || k > n)
    throw DomainError("first-moment bound needs 2 <= k <= n");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double log_np = std::log(nd * p);
  const double ratio = nd / kd;
  // (1-p)^((n/k)^2) through exp/log1p so it underflows gracefully to 0
  const double unjoined = std::exp(ratio * ratio * std::log1p(-p));
  const double fixed = 2.0 * nd - kd * std::log(p) - kd * (kd - 1.0) / 2.0 * unjoined;

  BoundReport report{n, p, k, -std::numeric_limits<double>::infinity(), 0, false};
  for (std::size_t s = 0; s + k <= n; ++s) {
    const double value = fixed + (nd - static_cast<double>(s)) * log_np;
    if (value > report.log_expected_count) {
      report.log_expected_count = value;
      report.s_argmax = s;
    }
  }
  report.log_expected_count += log_binomial(nd, kd);
  report.negative = report.log_expected_count < 0.0;
  return report;
}

} // namespace rgminor
