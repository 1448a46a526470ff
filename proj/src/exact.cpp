#include "rgminor/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rgminor/bounds.hpp"
#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

class MinorSearch {
public:
  explicit MinorSearch(const Graph &g) : g_(g), order_(g.vertex_count()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    // high-degree vertices first: dense cores fill blocks early
    std::stable_sort(order_.begin(), order_.end(),
                     [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    ceiling_ = g.vertex_count() == 0 ? 0 : std::min(g.vertex_count(), edge_bound_ccl(g.edge_count()));
  }

  ExactResult run() {
    if (g_.vertex_count() > 0) {
      best_blocks_ = {{order_.front()}};
      assign(0);
    }
    ExactResult result;
    result.order = best_blocks_.size();
    for (auto &block : best_blocks_) {
      std::sort(block.begin(), block.end());
      result.witness.branch_sets.push_back(block);
    }
    return result;
  }

private:
  void assign(std::size_t idx) {
    if (best_blocks_.size() >= ceiling_)
      return;
    if (blocks_.size() + (order_.size() - idx) <= best_blocks_.size())
      return;
    if (idx == order_.size()) {
      if (blocks_.size() > best_blocks_.size() && is_clique_minor())
        best_blocks_ = blocks_;
      return;
    }
    const Vertex v = order_[idx];
    blocks_.push_back({v});
    assign(idx + 1);
    blocks_.pop_back();
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      blocks_[b].push_back(v);
      assign(idx + 1);
      blocks_[b].pop_back();
    }
    assign(idx + 1); // v unused
  }

  bool connected(const std::vector<Vertex> &block) const {
    std::vector<char> in(g_.vertex_count(), 0);
    std::vector<char> seen(g_.vertex_count(), 0);
    for (Vertex v : block)
      in[v] = 1;
    std::vector<Vertex> stack{block.front()};
    seen[block.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(v))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == block.size();
  }

  bool adjacent(const std::vector<Vertex> &a, const std::vector<Vertex> &b) const {
    for (Vertex u : a)
      for (Vertex v : b)
        if (g_.has_edge(u, v))
          return true;
    return false;
  }

  bool is_clique_minor() const {
    for (const auto &block : blocks_)
      if (!connected(block))
        return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (std::size_t j = i + 1; j < blocks_.size(); ++j)
        if (!adjacent(blocks_[i], blocks_[j]))
          return false;
    return true;
  }

  const Graph &g_;
  std::vector<Vertex> order_;
  std::size_t ceiling_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::vector<Vertex>> best_blocks_;
};

} // namespace

ExactResult exact_ccl(const Graph &g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw SizeError("exact search is capped at " + std::to_string(vertex_cap) + " vertices, got " +
                    std::to_string(g.vertex_count()));
  return MinorSearch(g).run();
}

} // namespace rgminor
