#include "rgminor/candidates.hpp"

#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

CandidateFamily::CandidateFamily(std::vector<std::vector<Vertex>> sets, std::size_t vertex_count)
    : sets_(std::move(sets)), owner_(vertex_count, kNone) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (Vertex v : sets_[i]) {
      if (v >= vertex_count)
        throw DomainError("candidate vertex out of range");
      if (owner_[v] != kNone)
        throw DomainError("candidate sets overlap");
      owner_[v] = static_cast<std::int64_t>(i);
    }
  }
}

CandidateFamily build_candidates(const VertexPath &path, std::size_t count, std::size_t size,
                                 std::size_t vertex_count) {
  if (size == 0 && count > 0)
    throw DomainError("candidate size must be positive");
  if (count * size > path.size())
    throw CapacityError("path of " + std::to_string(path.size()) + " vertices is too short for " +
                        std::to_string(count) + " candidates of size " + std::to_string(size));
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto first = path.vertices.begin() + static_cast<std::ptrdiff_t>(i * size);
    sets.emplace_back(first, first + static_cast<std::ptrdiff_t>(size));
  }
  return CandidateFamily(std::move(sets), vertex_count);
}

} // namespace rgminor
