#ifndef RGMINOR_PARAMS_HPP
#define RGMINOR_PARAMS_HPP

#include <cstddef>
#include <optional>

#include "rgminor/graph.hpp"
#include "rgminor/path.hpp"

namespace rgminor {

/// floor() for quantities that are integers in exact arithmetic but may
/// land a hair below in floating point (e.g. 0.4 * 100 / 0.2).
std::size_t floor_size(double x);

struct ExtractorConfig {
  /// C' in p' = min(p/10, C'/|V'|): expected first-round degree inside V'
  /// that the long-path search relies on.
  double path_constant = 40.0;
  /// Overrides the first-round probability p' of the dense regime.
  std::optional<double> p_first;
  PathSearchBudget path_budget;
  /// Allow one-vertex joiner pieces (and fewer pieces than pairs) when the
  /// joiner path is too short for the planned piece lengths.
  bool allow_clamped_pieces = true;
};

/// Scalars of the dense construction (np > e).
struct DenseParams {
  std::size_t n = 0;
  double p = 0.0;
  double eps = 0.0;
  std::size_t k = 0;        // target order (1-eps) sqrt(n^2 p / ln np)
  std::size_t k_prime = 0;  // candidate count (1+eps/4) k
  std::size_t n_prime = 0;  // |V'| = (1-eps/4) n
  std::size_t t = 0;        // candidate size (1-eps/4) n' / k'
  ExposureSplit split;
  double b = 0.0;           // 1/(1-p)
};

DenseParams dense_parameters(std::size_t n, double p, double eps, const ExtractorConfig &config = {});

/// Scalars of the sparse construction on G(n, c/n), c > 1.
struct SparseParams {
  std::size_t n = 0;
  double c = 0.0;
  double c1 = 0.0; // first round c1/n, c1 = (c+1)/2
  double c2 = 0.0; // second round c2/n, c2 = (c-c1)/(1-c1/n)
  double delta = 0.0;
  double alpha = 0.0;
  std::size_t k = 0;       // delta sqrt(n)
  std::size_t k_prime = 0; // 2k
  std::size_t t = 0;       // alpha sqrt(n) / (2 delta)
};

SparseParams sparse_parameters(std::size_t n, double c, double delta, double alpha);

} // namespace rgminor

#endif
