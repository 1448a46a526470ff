#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rgminor/bounds.hpp"
#include "rgminor/errors.hpp"
#include "rgminor/exact.hpp"
#include "rgminor/rng.hpp"
#include "rgminor/verify.hpp"
#include "test_support.hpp"

using namespace rgminor;
using testing::make_graph;

namespace {

// every assignment of vertices to {unused, block 0, block 1, ...} in
// restricted-growth form, scored by verify_minor
std::size_t brute_force_ccl(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::size_t best = n > 0 ? 1 : 0;
  std::function<void(std::size_t, int)> go = [&](std::size_t v, int blocks) {
    if (v == n) {
      if (static_cast<std::size_t>(blocks) <= best)
        return;
      MinorCertificate cert;
      cert.branch_sets.resize(static_cast<std::size_t>(blocks));
      for (std::size_t u = 0; u < n; ++u)
        if (label[u] >= 0)
          cert.branch_sets[static_cast<std::size_t>(label[u])].push_back(static_cast<Vertex>(u));
      if (verify_minor(g, cert).ok())
        best = static_cast<std::size_t>(blocks);
      return;
    }
    for (int b = -1; b <= blocks; ++b) {
      label[v] = b;
      go(v + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  go(0, 0);
  return best;
}

double first_moment_oracle(std::size_t n, double p, std::size_t k) {
  const double nn = static_cast<double>(n), kk = static_cast<double>(k);
  const double log_choose = std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1);
  const double join = kk * (kk - 1) / 2 * std::pow(1 - p, (nn / kk) * (nn / kk));
  double best = -INFINITY;
  for (std::size_t s = 0; s + k <= n; ++s)
    best = std::max(best, 2 * nn + (nn - static_cast<double>(s)) * std::log(nn * p) - kk * std::log(p) - join);
  return log_choose + best;
}

Graph random_graph(std::size_t n, double p, RngStream &r) { return sample_gnp(n, p, r); }

} // namespace

TEST_CASE("theoretical_ccl_dense") {
  const auto band = theoretical_ccl_dense(10000, 0.01, 0.0);
  CHECK(band.lower == doctest::Approx(465.99).epsilon(1e-5));
  CHECK(band.upper == band.lower);
  CHECK(band.lower == doctest::Approx(std::sqrt(1e6 / std::log(100.0))));

  const auto cor = theoretical_ccl_dense(1024, 0.5, 0.0);
  CHECK(cor.corollary_lower == doctest::Approx(1024.0 / 3.0));
  CHECK(cor.corollary_upper == cor.corollary_lower);

  CHECK(theoretical_ccl_dense(10000, 0.01, 1.0).lower == 0.0);
  const auto wide = theoretical_ccl_dense(10000, 0.01, 0.2);
  CHECK(wide.midpoint() == doctest::Approx(band.lower));
  CHECK_THROWS_AS(theoretical_ccl_dense(100, 0.02, 0.2), RegimeError);
}

TEST_CASE("sparse_bounds") {
  auto b = sparse_bounds(10000, 4, 0.1);
  CHECK(b.lower == doctest::Approx(10));
  CHECK(b.upper == doctest::Approx(400));
  b = sparse_bounds(1, 4, 1);
  CHECK(b.lower == doctest::Approx(1));
  CHECK(b.upper == doctest::Approx(4));
  b = sparse_bounds(1000000, 2, 0.05);
  CHECK(b.lower == doctest::Approx(50));
  CHECK(b.upper == doctest::Approx(2 * std::sqrt(2e6)));
  CHECK(b.upper == doctest::Approx(2828.43).epsilon(1e-5));
  CHECK_THROWS_AS(sparse_bounds(100, 1, 0.1), RegimeError);
}

TEST_CASE("edge_bound_ccl") {
  CHECK(edge_bound_ccl(10) == 5);
  CHECK(edge_bound_ccl(0) == 1);
  CHECK(edge_bound_ccl(11) == 5);
  for (std::size_t m = 0; m < 3000; ++m) {
    std::size_t k = 1;
    while ((k + 1) * k / 2 <= m)
      ++k;
    CHECK(edge_bound_ccl(m) == k);
  }
  CHECK(edge_bound_ccl(4999950000ULL) == 100000);
}

TEST_CASE("first_moment_log_bound") {
  const auto full = first_moment_log_bound(200, 0.5, 200);
  CHECK(full.negative);
  CHECK(full.s_argmax == 0);
  CHECK(full.log_expected_count < -9950 + 200 * 10);
  CHECK(full.log_expected_count == doctest::Approx(first_moment_oracle(200, 0.5, 200)));

  for (std::size_t k : {2, 20, 57, 100, 150, 499})
    CHECK(first_moment_log_bound(500, 0.3, k).log_expected_count ==
          doctest::Approx(first_moment_oracle(500, 0.3, k)).epsilon(1e-12));

  // the free-vertex count is maximised at s = 0 since ln(np) > 0
  CHECK(first_moment_log_bound(500, 0.5, 100).s_argmax == 0);

  std::size_t crossing = 0;
  for (std::size_t k = 2; k <= 500 && crossing == 0; ++k)
    if (first_moment_log_bound(500, 0.5, k).negative)
      crossing = k;
  const double scale = 500 / std::sqrt(std::log2(500.0));
  CHECK(crossing >= scale / 2);
  CHECK(crossing <= scale * 2);

  CHECK_THROWS_AS(first_moment_log_bound(100, 0.0, 10), DomainError);
  CHECK_THROWS_AS(first_moment_log_bound(100, 1.0, 10), DomainError);
  CHECK_THROWS_AS(first_moment_log_bound(100, 0.5, 1), DomainError);
  CHECK_THROWS_AS(first_moment_log_bound(100, 0.5, 101), DomainError);
}

TEST_CASE("verify_minor examples") {
  const Graph tri = testing::complete_graph(3);
  CHECK(verify_minor(tri, MinorCertificate{{{0}, {1}, {2}}}).ok());
  const Graph p4 = testing::path_graph(4);
  CHECK(verify_minor(p4, MinorCertificate{{{0, 1}, {2, 3}}}).ok());

  auto r = verify_minor(p4, MinorCertificate{{{0, 1}, {1, 2}}});
  CHECK(r.failure == VerifyFailure::overlap);
  CHECK(r.first == 0);
  CHECK(r.second == 1);
  CHECK(verify_minor(p4, MinorCertificate{{{0}, {}}}).failure == VerifyFailure::empty_set);
  CHECK(verify_minor(p4, MinorCertificate{{{0}, {7}}}).failure == VerifyFailure::out_of_range);
  r = verify_minor(p4, MinorCertificate{{{0, 2}, {1}}});
  CHECK(r.failure == VerifyFailure::disconnected);
  CHECK(r.first == 0);
  r = verify_minor(p4, MinorCertificate{{{0}, {1}, {3}}});
  CHECK(r.failure == VerifyFailure::not_adjacent);
  CHECK_FALSE(r.message().empty());
  CHECK(verify_minor(p4, MinorCertificate{}).ok());
}

TEST_CASE("verify_minor ignores set order and automorphic relabelling") {
  const std::size_t n = 9;
  const Graph c9 = testing::cycle_graph(n);
  const MinorCertificate cert{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
  REQUIRE(verify_minor(c9, cert).ok());
  for (std::size_t shift = 0; shift < n; ++shift) {
    MinorCertificate moved;
    for (const auto &set : cert.branch_sets) {
      std::vector<Vertex> s;
      for (Vertex v : set)
        s.push_back(static_cast<Vertex>((v + shift) % n));
      std::sort(s.begin(), s.end());
      moved.branch_sets.push_back(s);
    }
    std::rotate(moved.branch_sets.begin(), moved.branch_sets.begin() + shift % 3, moved.branch_sets.end());
    CHECK(verify_minor(c9, moved).ok());
  }
  const MinorCertificate broken{{{0, 1}, {3, 4, 5}, {6, 7, 8}}};
  CHECK_FALSE(verify_minor(c9, broken).ok());
}

TEST_CASE("exact_ccl examples") {
  CHECK(exact_ccl(testing::complete_graph(4)).order == 4);
  CHECK(exact_ccl(testing::cycle_graph(5)).order == 3);
  CHECK(brute_force_ccl(testing::cycle_graph(5)) == 3);
  const Graph star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(exact_ccl(star).order == 2);
  CHECK(exact_ccl(Graph(3)).order == 1);
  CHECK(exact_ccl(Graph(0)).order == 0);
  CHECK_THROWS_AS(exact_ccl(Graph(11)), SizeError);
  CHECK(exact_ccl(Graph(11), 11).order == 1);
}

TEST_CASE("exact_ccl agrees with exhaustive search") {
  RngStream r(21, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + r.below(5);
    const Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(r.below(6)), r);
    const auto result = exact_ccl(g);
    CHECK(result.order == brute_force_ccl(g));
    CHECK(result.order == result.witness.order());
    CHECK(verify_minor(g, result.witness).ok());
    CHECK(result.order <= edge_bound_ccl(g.edge_count()));
  }
}
