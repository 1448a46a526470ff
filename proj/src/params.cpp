#include "rgminor/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rgminor/bounds.hpp"
#include "rgminor/errors.hpp"

namespace rgminor {

std::size_t floor_size(double x) {
  if (!(x > 0.0))
    return 0;
  return static_cast<std::size_t>(std::floor(x + 1e-9 * std::max(1.0, x)));
}

DenseParams dense_parameters(std::size_t n, double p, double eps, const ExtractorConfig &config) {
  if (!(eps > 0.0 && eps < 1.0))
    throw DomainError("eps must lie in (0, 1)");
  const double scale = dense_scale(n, p); // RegimeError when np <= e

  DenseParams d;
  d.n = n;
  d.p = p;
  d.eps = eps;
  const double k_real = (1.0 - eps) * scale;
  d.k = floor_size(k_real);
  if (d.k < 2)
    throw DomainError("target order " + std::to_string(k_real) + " is below 2");
  d.k_prime = floor_size((1.0 + eps / 4.0) * k_real);
  d.n_prime = floor_size((1.0 - eps / 4.0) * static_cast<double>(n));
  d.t = floor_size((1.0 - eps / 4.0) * static_cast<double>(d.n_prime) / static_cast<double>(d.k_prime));
  if (d.t < 1)
    throw DomainError("candidate size rounds to 0");

  const double p_first = config.p_first.value_or(
      std::min(p / 10.0, config.path_constant / static_cast<double>(d.n_prime)));
  d.split = split_exposure(p, p_first);
  d.b = p < 1.0 ? 1.0 / (1.0 - p) : std::numeric_limits<double>::infinity();
  return d;
}

SparseParams sparse_parameters(std::size_t n, double c, double delta, double alpha) {
  if (!(c > 1.0))
    throw RegimeError("sparse regime needs c > 1, got " + std::to_string(c));
  if (!(delta > 0.0) || !(alpha > 0.0))
    throw DomainError("delta and alpha must be positive");
  SparseParams s;
  s.n = n;
  s.c = c;
  s.c1 = (c + 1.0) / 2.0;
  const double nd = static_cast<double>(n);
  if (!(nd > c))
    throw DomainError("sparse regime needs n > c");
  s.c2 = (c - s.c1) / (1.0 - s.c1 / nd);
  s.delta = delta;
  s.alpha = alpha;
  const double root = std::sqrt(nd);
  s.k = floor_size(delta * root);
  s.k_prime = 2 * s.k;
  s.t = floor_size(alpha * root / (2.0 * delta));
  if (static_cast<double>(s.k_prime * s.t) > alpha * nd * (1.0 + 1e-9))
    throw DomainError("k' * t exceeds alpha * n");
  return s;
}

} // namespace rgminor
