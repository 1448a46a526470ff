#ifndef RGMINOR_EXACT_HPP
#define RGMINOR_EXACT_HPP

#include <cstddef>

#include "rgminor/certificate.hpp"
#include "rgminor/graph.hpp"

namespace rgminor {

inline constexpr std::size_t kDefaultExactCap = 10;

struct ExactResult {
  std::size_t order = 0;
  MinorCertificate witness;
};

/// Largest complete minor by branch and bound over vertex -> block
/// assignments. Throws SizeError above `vertex_cap` vertices.
ExactResult exact_ccl(const Graph &g, std::size_t vertex_cap = kDefaultExactCap);

} // namespace rgminor

#endif
