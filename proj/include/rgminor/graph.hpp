#ifndef RGMINOR_GRAPH_HPP
#define RGMINOR_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rgminor/rng.hpp"

namespace rgminor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Neighbours are stored in compressed sorted rows. When the graph is dense
/// enough (average degree above 64) and small enough for an n*n bit matrix
/// to stay modest, a bitset row per vertex is built as well and used by
/// has_edge().
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds from an arbitrary edge list. Self-loops and out-of-range
  /// endpoints are rejected; duplicates and orientation are normalised.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  /// Fast path for edge lists already normalised (u < v, strictly
  /// increasing lexicographically), as produced by the samplers.
  static Graph from_sorted_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_dense_rows() const noexcept { return !rows_.empty(); }

  /// Lexicographically sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  /// Same edges on a larger vertex universe; new vertices are isolated.
  Graph with_vertex_count(std::size_t n) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

private:
  void build_dense_rows();

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// (p, p', p'') with p = p' + p'' - p'p''.
struct ExposureSplit {
  double p = 0.0;
  double p_first = 0.0;
  double p_second = 0.0;
};

ExposureSplit split_exposure(double p, double p_first);

/// G(n, p). Sparse probabilities (p < 0.05) use geometric gap skipping over
/// the lexicographic pair order, so the cost is O(n + m).
Graph sample_gnp(std::size_t n, double p, RngStream &rng);

/// G(n, p) restricted to the pairs that are not both inside [0, block).
/// Used for the part of a graph that a two-round exposure on the first
/// `block` vertices does not cover.
Graph sample_gnp_outside_block(std::size_t n, std::size_t block, double p, RngStream &rng);

Graph union_graphs(const Graph &g1, const Graph &g2);

/// True iff some edge joins a vertex of `a` to a vertex of `b`.
/// The sets must be non-empty, disjoint and in range.
bool set_adjacent(const Graph &g, std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace rgminor

#endif
