#include "rgminor/path.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

constexpr std::int64_t kOffPath = -1;

class PathSearch {
public:
  PathSearch(const Graph &g, std::vector<char> allowed, RngStream &rng)
      : g_(g), allowed_(std::move(allowed)), rng_(rng),
        position_(g.vertex_count(), kOffPath), seen_(g.vertex_count(), 0),
        parent_(g.vertex_count(), 0) {}

  VertexPath run(std::span<const Vertex> starts, const PathSearchBudget &budget) {
    const std::size_t target = starts.size();
    const auto total = static_cast<std::size_t>(budget.step_factor * static_cast<double>(target));
    const std::size_t restarts = std::max<std::size_t>(1, budget.restarts);
    std::vector<Vertex> best;
    std::size_t spent = 0;
    for (std::size_t r = 0; r < restarts && best.size() < target; ++r) {
      // unused budget carries over to later restarts
      budget_ = spent + (total - std::min(total, spent)) / (restarts - r);
      steps_ = spent;
      grow_from(starts[rng_.below(starts.size())], target);
      spent = steps_;
      if (path_.size() > best.size())
        best = path_;
      clear_path();
    }
    return VertexPath{std::move(best)};
  }

private:
  bool usable(Vertex v) const { return allowed_[v] && position_[v] == kOffPath; }

  void clear_path() {
    for (Vertex v : path_)
      position_[v] = kOffPath;
    path_.clear();
  }

  void grow_from(Vertex start, std::size_t target) {
    path_.push_back(start);
    position_[start] = 0;
    extend_tail();
    std::reverse(path_.begin(), path_.end());
    renumber(0);
    extend_tail();
    while (path_.size() < target && steps_ < budget_) {
      if (!rotate())
        break;
      extend_tail();
    }
  }

  void renumber(std::size_t from) {
    for (std::size_t i = from; i < path_.size(); ++i)
      position_[path_[i]] = static_cast<std::int64_t>(i);
    steps_ += path_.size() - from;
  }

  // Depth-first search from the tail through usable vertices; the deepest
  // branch of the search tree is appended to the path.
  void extend_tail() {
    const Vertex root = path_.back();
    ++epoch_;
    seen_[root] = epoch_;
    Vertex deepest = root;
    std::size_t deepest_depth = 0;

    struct Frame {
      Vertex v;
      std::size_t offset;
      std::size_t next;
    };
    std::vector<Frame> stack;
    auto push = [&](Vertex v) {
      const std::size_t d = g_.degree(v);
      stack.push_back({v, d == 0 ? 0 : static_cast<std::size_t>(rng_.below(d)), 0});
    };
    push(root);
    while (!stack.empty() && steps_ < budget_) {
      Frame &f = stack.back();
      auto nbrs = g_.neighbors(f.v);
      bool descended = false;
      while (f.next < nbrs.size()) {
        const Vertex w = nbrs[(f.offset + f.next) % nbrs.size()];
        ++f.next;
        if (seen_[w] != epoch_ && usable(w)) {
          seen_[w] = epoch_;
          parent_[w] = f.v;
          ++steps_;
          push(w);
          if (stack.size() - 1 > deepest_depth) {
            deepest_depth = stack.size() - 1;
            deepest = w;
          }
          descended = true;
          break;
        }
      }
      if (!descended)
        stack.pop_back();
    }
    if (deepest == root)
      return;
    const std::size_t old_size = path_.size();
    path_.resize(old_size + deepest_depth);
    for (std::size_t i = path_.size() - 1; i >= old_size; --i) {
      path_[i] = deepest;
      position_[deepest] = static_cast<std::int64_t>(i);
      deepest = parent_[deepest];
    }
    steps_ += deepest_depth;
  }

  // Posa rotation at the tail: for a path neighbour w of the tail at index
  // i, reversing path[i+1..] makes path[i+1] the new tail. Rotations whose
  // new tail can be extended are preferred.
  bool rotate() {
    const std::size_t len = path_.size();
    if (len < 3)
      return false;
    const Vertex tail = path_.back();
    std::vector<std::size_t> any;
    std::vector<std::size_t> extendable;
    for (Vertex w : g_.neighbors(tail)) {
      const std::int64_t i = position_[w];
      if (i == kOffPath || static_cast<std::size_t>(i) + 2 >= len)
        continue;
      any.push_back(static_cast<std::size_t>(i));
      const Vertex candidate = path_[static_cast<std::size_t>(i) + 1];
      for (Vertex x : g_.neighbors(candidate)) {
        if (usable(x)) {
          extendable.push_back(static_cast<std::size_t>(i));
          break;
        }
      }
      steps_ += 1;
    }
    if (any.empty())
      return false;
    const auto &pool = extendable.empty() ? any : extendable;
    const std::size_t i = pool[rng_.below(pool.size())];
    std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(i) + 1, path_.end());
    renumber(i + 1);
    return true;
  }

  const Graph &g_;
  std::vector<char> allowed_;
  RngStream &rng_;
  std::vector<std::int64_t> position_;
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> parent_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> path_;
  std::size_t steps_ = 0;
  std::size_t budget_ = 0;
};

VertexPath search(const Graph &g, std::vector<char> allowed, std::span<const Vertex> starts, RngStream &rng,
                  const PathSearchBudget &budget) {
  if (starts.empty())
    throw DomainError("long-path search needs at least one vertex");
  PathSearch s(g, std::move(allowed), rng);
  return s.run(starts, budget);
}

} // namespace

bool is_valid_path(const Graph &g, const VertexPath &path) {
  std::vector<char> used(g.vertex_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path.vertices[i];
    if (v >= g.vertex_count() || used[v])
      return false;
    used[v] = 1;
    if (i > 0 && !g.has_edge(path.vertices[i - 1], v))
      return false;
  }
  return true;
}

VertexPath find_long_path(const Graph &g, RngStream rng, PathSearchBudget budget) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  return search(g, std::vector<char>(g.vertex_count(), 1), all, rng, budget);
}

VertexPath find_long_path(const Graph &g, std::span<const Vertex> restrict_to, RngStream rng,
                          PathSearchBudget budget) {
  std::vector<char> allowed(g.vertex_count(), 0);
  std::vector<Vertex> starts;
  starts.reserve(restrict_to.size());
  for (Vertex v : restrict_to) {
    if (v >= g.vertex_count())
      throw DomainError("path restriction vertex out of range");
    if (!allowed[v])
      starts.push_back(v);
    allowed[v] = 1;
  }
  return search(g, std::move(allowed), starts, rng, budget);
}

std::vector<VertexPath> segment_path(const VertexPath &path, std::span<const std::size_t> piece_sizes) {
  const std::size_t total = std::accumulate(piece_sizes.begin(), piece_sizes.end(), std::size_t{0});
  if (total > path.size())
    throw CapacityError("path of " + std::to_string(path.size()) + " vertices cannot hold " +
                        std::to_string(total));
  std::vector<VertexPath> pieces;
  pieces.reserve(piece_sizes.size());
  auto it = path.vertices.begin();
  for (std::size_t s : piece_sizes) {
    if (s == 0)
      throw DomainError("segment sizes must be positive");
    pieces.push_back(VertexPath{{it, it + static_cast<std::ptrdiff_t>(s)}});
    it += static_cast<std::ptrdiff_t>(s);
  }
  return pieces;
}

} // namespace rgminor
