#ifndef RGMINOR_CERTIFICATE_HPP
#define RGMINOR_CERTIFICATE_HPP

#include <cstddef>
#include <vector>

#include "rgminor/graph.hpp"

namespace rgminor {

/// Witness for a K_k minor: k disjoint connected branch sets, pairwise
/// adjacent. Each set is kept sorted.
struct MinorCertificate {
  std::vector<std::vector<Vertex>> branch_sets;

  std::size_t order() const noexcept { return branch_sets.size(); }

  friend bool operator==(const MinorCertificate &, const MinorCertificate &) = default;
};

} // namespace rgminor

#endif
