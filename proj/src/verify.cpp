#include "rgminor/verify.hpp"

#include <cstdint>
#include <vector>

namespace rgminor {

const char *to_string(VerifyFailure f) noexcept {
  switch (f) {
  case VerifyFailure::none:
    return "ok";
  case VerifyFailure::empty_set:
    return "empty_set";
  case VerifyFailure::out_of_range:
    return "out_of_range";
  case VerifyFailure::overlap:
    return "overlap";
  case VerifyFailure::disconnected:
    return "disconnected";
  case VerifyFailure::not_adjacent:
    return "not_adjacent";
  }
  return "unknown";
}

std::string VerifyResult::message() const {
  switch (failure) {
  case VerifyFailure::none:
    return "ok";
  case VerifyFailure::overlap:
  case VerifyFailure::not_adjacent:
    return std::string(to_string(failure)) + ": branch sets " + std::to_string(first) + " and " +
           std::to_string(second);
  default:
    return std::string(to_string(failure)) + ": branch set " + std::to_string(first);
  }
}

VerifyResult verify_minor(const Graph &g, const MinorCertificate &cert) {
  constexpr std::int64_t kFree = -1;
  const auto &sets = cert.branch_sets;
  const std::size_t k = sets.size();
  std::vector<std::int64_t> owner(g.vertex_count(), kFree);

  for (std::size_t i = 0; i < k; ++i) {
    if (sets[i].empty())
      return {VerifyFailure::empty_set, i, 0};
    for (Vertex v : sets[i])
      if (v >= g.vertex_count())
        return {VerifyFailure::out_of_range, i, 0};
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : sets[i]) {
      if (owner[v] != kFree)
        return {VerifyFailure::overlap, static_cast<std::size_t>(owner[v]), i};
      owner[v] = static_cast<std::int64_t>(i);
    }
  }

  // connectivity: traversal inside the induced subgraph of each set
  std::vector<char> reached(g.vertex_count(), 0);
  std::vector<Vertex> frontier;
  for (std::size_t i = 0; i < k; ++i) {
    const auto id = static_cast<std::int64_t>(i);
    frontier.assign(1, sets[i].front());
    reached[sets[i].front()] = 1;
    std::size_t count = 1;
    while (!frontier.empty()) {
      const Vertex v = frontier.back();
      frontier.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] == id && !reached[w]) {
          reached[w] = 1;
          ++count;
          frontier.push_back(w);
        }
      }
    }
    if (count != sets[i].size())
      return {VerifyFailure::disconnected, i, 0};
  }

  // adjacency: mark every set touched by an edge out of set i
  std::vector<std::size_t> touched(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : sets[i])
      for (Vertex w : g.neighbors(v))
        if (owner[w] != kFree)
          touched[static_cast<std::size_t>(owner[w])] = i;
    for (std::size_t j = i + 1; j < k; ++j)
      if (touched[j] != i)
        return {VerifyFailure::not_adjacent, i, j};
  }
  return {};
}

} // namespace rgminor
