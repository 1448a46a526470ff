#include "rgminor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

constexpr double kSkipSamplingThreshold = 0.05;
constexpr std::size_t kDenseRowDegree = 64;
constexpr std::size_t kDenseRowMaxVertices = 16384;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("edge probability must lie in [0, 1], got " + std::to_string(p));
}

// Enumerates the pairs (u, v), u < v, v >= row_start(u), in lexicographic
// order and keeps each with probability p.
template <class RowStart>
std::vector<Edge> sample_pairs(std::size_t n, double p, RngStream &rng, RowStart row_start) {
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0)
    return edges;

  if (p >= kSkipSamplingThreshold) {
    for (std::size_t u = 0; u + 1 < n; ++u)
      for (std::size_t v = row_start(u); v < n; ++v)
        if (rng.uniform() < p)
          edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    return edges;
  }

  // Geometric gap skipping: the number of rejected pairs before the next
  // accepted one is Geometric(p).
  const double log_q = std::log1p(-p);
  const double pair_limit = static_cast<double>(n) * static_cast<double>(n);
  edges.reserve(static_cast<std::size_t>(p * pair_limit / 2.0 * 1.05) + 16);
  std::size_t u = 0;
  std::size_t v = row_start(0);
  for (;;) {
    const double gap = std::floor(std::log(rng.uniform_open()) / log_q);
    if (gap >= pair_limit)
      break;
    auto skip = static_cast<std::size_t>(gap);
    while (v + skip >= n) {
      skip -= n - v;
      ++u;
      if (u + 1 >= n)
        return edges;
      v = row_start(u);
    }
    v += skip;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    ++v;
  }
  return edges;
}

} // namespace

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto &e : edges) {
    if (e.u >= n || e.v >= n)
      throw DomainError("edge endpoint out of range");
    if (e.u == e.v)
      throw DomainError("self-loops are not allowed");
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return from_sorted_edges(n, edges);
}

Graph Graph::from_sorted_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  std::vector<std::size_t> degree(n, 0);
  for (const auto &e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t v = 0; v < n; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // With lexicographic input every row is filled in increasing order:
  // smaller neighbours arrive while their own rows are scanned, larger ones
  // while this vertex's row is scanned.
  for (const auto &e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  g.build_dense_rows();
  return g;
}

void Graph::build_dense_rows() {
  rows_.clear();
  words_per_row_ = 0;
  if (n_ == 0 || n_ > kDenseRowMaxVertices || adjacency_.size() <= kDenseRowDegree * n_)
    return;
  words_per_row_ = (n_ + 63) / 64;
  rows_.assign(words_per_row_ * n_, 0);
  for (std::size_t u = 0; u < n_; ++u)
    for (Vertex v : neighbors(static_cast<Vertex>(u)))
      rows_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v)
    return false;
  if (!rows_.empty())
    return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  if (degree(u) > degree(v))
    std::swap(u, v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < n_; ++u)
    for (Vertex v : neighbors(static_cast<Vertex>(u)))
      if (v > u)
        out.push_back({static_cast<Vertex>(u), v});
  return out;
}

Graph Graph::with_vertex_count(std::size_t n) const {
  if (n < n_)
    throw DomainError("with_vertex_count cannot drop vertices");
  Graph g = *this;
  g.n_ = n;
  g.offsets_.resize(n + 1, offsets_.back());
  g.build_dense_rows();
  return g;
}

ExposureSplit split_exposure(double p, double p_first) {
  check_probability(p);
  if (!(p_first >= 0.0) || p_first > p)
    throw DomainError("first-round probability must lie in [0, p]");
  if (p_first >= 1.0)
    throw DomainError("first-round probability must be below 1");
  return {p, p_first, (p - p_first) / (1.0 - p_first)};
}

Graph sample_gnp(std::size_t n, double p, RngStream &rng) {
  check_probability(p);
  auto edges = sample_pairs(n, p, rng, [](std::size_t u) { return u + 1; });
  return Graph::from_sorted_edges(n, edges);
}

Graph sample_gnp_outside_block(std::size_t n, std::size_t block, double p, RngStream &rng) {
  check_probability(p);
  if (block > n)
    throw DomainError("block larger than vertex count");
  auto edges = sample_pairs(n, p, rng, [block](std::size_t u) { return std::max(u + 1, block); });
  return Graph::from_sorted_edges(n, edges);
}

Graph union_graphs(const Graph &g1, const Graph &g2) {
  if (g1.vertex_count() != g2.vertex_count())
    throw DomainError("union of graphs on different vertex counts");
  const std::size_t n = g1.vertex_count();
  std::vector<Edge> merged;
  merged.reserve(g1.edge_count() + g2.edge_count());
  std::vector<Vertex> row;
  for (std::size_t u = 0; u < n; ++u) {
    auto a = g1.neighbors(static_cast<Vertex>(u));
    auto b = g2.neighbors(static_cast<Vertex>(u));
    auto a_from = std::upper_bound(a.begin(), a.end(), static_cast<Vertex>(u));
    auto b_from = std::upper_bound(b.begin(), b.end(), static_cast<Vertex>(u));
    row.clear();
    std::set_union(a_from, a.end(), b_from, b.end(), std::back_inserter(row));
    for (Vertex v : row)
      merged.push_back({static_cast<Vertex>(u), v});
  }
  return Graph::from_sorted_edges(n, merged);
}

bool set_adjacent(const Graph &g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty())
    throw DomainError("set_adjacent needs non-empty vertex sets");
  std::vector<Vertex> sa(a.begin(), a.end());
  std::vector<Vertex> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa.back() >= g.vertex_count() || sb.back() >= g.vertex_count())
    throw DomainError("set_adjacent vertex out of range");
  for (auto ia = sa.begin(), ib = sb.begin(); ia != sa.end() && ib != sb.end();) {
    if (*ia == *ib)
      throw DomainError("set_adjacent needs disjoint vertex sets");
    *ia < *ib ? ++ia : ++ib;
  }

  auto total_degree = [&g](const std::vector<Vertex> &s) {
    std::size_t d = 0;
    for (Vertex v : s)
      d += g.degree(v);
    return d;
  };
  const std::size_t deg_a = total_degree(sa);
  const std::size_t deg_b = total_degree(sb);
  const auto &small = deg_a <= deg_b ? sa : sb;
  const auto &other = deg_a <= deg_b ? sb : sa;
  const std::size_t small_degree = std::min(deg_a, deg_b);

  if (g.has_dense_rows() && small.size() * other.size() < small_degree) {
    for (Vertex u : small)
      for (Vertex v : other)
        if (g.has_edge(u, v))
          return true;
    return false;
  }
  for (Vertex u : small)
    for (Vertex w : g.neighbors(u))
      if (std::binary_search(other.begin(), other.end(), w))
        return true;
  return false;
}

} // namespace rgminor
