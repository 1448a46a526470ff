#ifndef RGMINOR_CANDIDATES_HPP
#define RGMINOR_CANDIDATES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rgminor/graph.hpp"
#include "rgminor/path.hpp"

namespace rgminor {

using CandidateIndex = std::uint32_t;

/// Candidate branch sets B_0..B_{k'-1}: consecutive equal-size segments of
/// one path, with a vertex -> candidate lookup over the host universe.
class CandidateFamily {
public:
  static constexpr std::int64_t kNone = -1;

  CandidateFamily() = default;
  CandidateFamily(std::vector<std::vector<Vertex>> sets, std::size_t vertex_count);

  std::size_t size() const noexcept { return sets_.size(); }
  std::size_t vertex_count() const noexcept { return owner_.size(); }
  std::span<const Vertex> set(CandidateIndex i) const { return sets_[i]; }
  const std::vector<std::vector<Vertex>> &sets() const noexcept { return sets_; }

  /// Candidate containing v, or kNone.
  std::int64_t owner(Vertex v) const { return owner_[v]; }

private:
  std::vector<std::vector<Vertex>> sets_;
  std::vector<std::int64_t> owner_;
};

/// `count` consecutive segments of `size` vertices from the head of `path`.
/// Throws CapacityError when the path is shorter than count * size.
CandidateFamily build_candidates(const VertexPath &path, std::size_t count, std::size_t size,
                                 std::size_t vertex_count);

} // namespace rgminor

#endif
