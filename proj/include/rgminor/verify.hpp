#ifndef RGMINOR_VERIFY_HPP
#define RGMINOR_VERIFY_HPP

#include <cstddef>
#include <string>

#include "rgminor/certificate.hpp"
#include "rgminor/graph.hpp"

namespace rgminor {

enum class VerifyFailure { none, empty_set, out_of_range, overlap, disconnected, not_adjacent };

const char *to_string(VerifyFailure f) noexcept;

struct VerifyResult {
  VerifyFailure failure = VerifyFailure::none;
  // offending branch-set indices; `second` is only meaningful for
  // overlap and not_adjacent
  std::size_t first = 0;
  std::size_t second = 0;

  bool ok() const noexcept { return failure == VerifyFailure::none; }
  explicit operator bool() const noexcept { return ok(); }
  std::string message() const;
};

/// Checks, in this order: every set non-empty and in range, sets pairwise
/// disjoint, each set connected in g, every pair of sets joined by an edge.
/// Reports the first violation found.
VerifyResult verify_minor(const Graph &g, const MinorCertificate &cert);

} // namespace rgminor

#endif
