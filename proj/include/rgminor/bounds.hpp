#ifndef RGMINOR_BOUNDS_HPP
#define RGMINOR_BOUNDS_HPP

#include <cstddef>

namespace rgminor {

/// sqrt(n^2 p / ln(np)), the dense-regime scale of the largest complete
/// minor. Requires np > e.
double dense_scale(std::size_t n, double p);

struct DenseBand {
  double lower = 0.0;
  double upper = 0.0;
  // same band written as n / sqrt(log_b(np)) with b = 1/(1-p), the form
  // used for constant p
  double corollary_lower = 0.0;
  double corollary_upper = 0.0;

  double midpoint() const noexcept { return 0.5 * (lower + upper); }
};

DenseBand theoretical_ccl_dense(std::size_t n, double p, double eps);

struct SparseBand {
  double lower = 0.0;
  double upper = 0.0;

  double midpoint() const noexcept { return 0.5 * (lower + upper); }
};

/// (delta * sqrt(n), 2 * sqrt(c n)) for G(n, c/n), c > 1.
SparseBand sparse_bounds(std::size_t n, double c, double delta);

/// Largest k with k(k-1)/2 <= m: no graph with m edges has a larger
/// complete minor.
std::size_t edge_bound_ccl(std::size_t m);

struct BoundReport {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
  /// ln of the first-moment upper bound on the expected number of
  /// K_k-minor branch-set families, maximised over the free-vertex count.
  double log_expected_count = 0.0;
  std::size_t s_argmax = 0;
  bool negative = false;
};

/// ln C(n,k) + max_s [2n + (n-s) ln(np) - k ln p - C(k,2) (1-p)^((n/k)^2)],
/// evaluated in log space with an explicit scan over s in [0, n-k].
BoundReport first_moment_log_bound(std::size_t n, double p, std::size_t k);

} // namespace rgminor

#endif
