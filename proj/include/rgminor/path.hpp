#ifndef RGMINOR_PATH_HPP
#define RGMINOR_PATH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rgminor/graph.hpp"
#include "rgminor/rng.hpp"

namespace rgminor {

/// Simple path: consecutive vertices adjacent in the host, none repeated.
struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  bool empty() const noexcept { return vertices.empty(); }

  friend bool operator==(const VertexPath &, const VertexPath &) = default;
};

bool is_valid_path(const Graph &g, const VertexPath &path);

struct PathSearchBudget {
  std::size_t restarts = 8;
  /// Total work cap is step_factor * (number of searchable vertices),
  /// counted in vertex visits and path position updates.
  double step_factor = 50.0;
};

/// Long simple path by randomised depth-first growth followed by
/// rotation-extension. Deterministic in (graph, restriction, stream, budget);
/// no optimality guarantee.
VertexPath find_long_path(const Graph &g, RngStream rng, PathSearchBudget budget = {});
VertexPath find_long_path(const Graph &g, std::span<const Vertex> restrict_to, RngStream rng,
                          PathSearchBudget budget = {});

/// Consecutive subpaths of the requested sizes starting at the head of
/// `path`; the unused tail is dropped. Throws CapacityError when the sizes
/// sum past the path length.
std::vector<VertexPath> segment_path(const VertexPath &path, std::span<const std::size_t> piece_sizes);

} // namespace rgminor

#endif
