// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rgminor/bounds.hpp"
#include "rgminor/exact.hpp"
#include "rgminor/experiment.hpp"
#include "rgminor/pair_state.hpp"
#include "rgminor/rng.hpp"
#include "rgminor/stage_engine.hpp"
#include "rgminor/verify.hpp"

using namespace rgminor;
namespace fs = std::filesystem;

namespace {

// Tolerances and sample sizes.
constexpr std::uint64_t kBaseSeed = 20240601;
constexpr double kSoundnessSeconds = 600.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kDenseRatioLow = 0.5, kDenseRatioHigh = 1.2;
constexpr double kSparseLowerFactor = 0.05, kSparseLowerRate = 0.8;
constexpr double kU0Tolerance = 0.3, kU0Rate = 0.9;
constexpr double kCrossingFactor = 2.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

std::string fmt(const char *format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<TrialOutput> run_point(const GridPoint &point, std::size_t seeds, std::uint64_t grid_index) {
  ExperimentConfig config;
  config.regime = point.regime;
  config.exact_cap = 0;
  std::vector<TrialOutput> out;
  for (std::size_t s = 0; s < seeds; ++s)
    out.push_back(run_trial(point, kBaseSeed, grid_index * kStreamsPerGridPoint + s, config));
  return out;
}

GridPoint dense_point(std::size_t n, double p, double eps = 0.2) { return {Regime::dense, n, p, eps, 0.0}; }
GridPoint sparse_point(std::size_t n, double c) { return {Regime::sparse, n, c, 0.05, 0.3}; }

Outcome certificate_soundness() {
  struct Block {
    GridPoint point;
    std::size_t seeds;
  };
  std::vector<Block> blocks;
  const std::pair<std::size_t, std::size_t> dense_sizes[] = {{2000, 60}, {5000, 40}, {20000, 15}};
  for (auto [n, seeds] : dense_sizes)
    for (double np : {20.0, 100.0, 400.0})
      blocks.push_back({dense_point(n, np / static_cast<double>(n)), seeds});
  const std::pair<std::size_t, std::size_t> sparse_sizes[] = {{10000, 60}, {100000, 20}};
  for (auto [n, seeds] : sparse_sizes)
    for (double c : {2.0, 4.0})
      blocks.push_back({sparse_point(n, c), seeds});

  const auto start = std::chrono::steady_clock::now();
  std::size_t runs = 0, verified = 0, within_edges = 0, dense_runs = 0, sparse_runs = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto &trial : run_point(blocks[b].point, blocks[b].seeds, b)) {
      ++runs;
      (blocks[b].point.regime == Regime::dense ? dense_runs : sparse_runs) += 1;
      const auto &cert = trial.extraction.certificate;
      verified += verify_minor(trial.extraction.graph, cert).ok();
      const std::size_t k = cert.order();
      within_edges += k * (k - 1) / 2 <= trial.extraction.graph.edge_count();
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = runs >= 500 && verified == runs && within_edges == runs && elapsed <= kSoundnessSeconds;
  o.detail = fmt("%zu runs (%zu dense, %zu sparse), %zu verified, %zu with C(k,2)<=m, %.1f s (limit %.0f s)", runs,
                 dense_runs, sparse_runs, verified, within_edges, elapsed, kSoundnessSeconds);
  return o;
}

Outcome oracle_sandwich() {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(kBaseSeed, 77);
  const double ps[] = {0.3, 0.5, 0.7};
  std::size_t graphs = 0, bounded = 0, witnessed = 0;
  for (; graphs < 300; ++graphs) {
    const std::size_t n = 4 + rng.below(6);
    const Graph g = sample_gnp(n, ps[graphs % 3], rng);
    const auto r = exact_ccl(g);
    bounded += r.order <= edge_bound_ccl(g.edge_count());
    witnessed += r.witness.order() == r.order && verify_minor(g, r.witness).ok();
  }
  std::size_t pairs = 0, monotone = 0;
  while (pairs < 100) {
    const std::size_t n = 4 + rng.below(6);
    const Graph g = sample_gnp(n, ps[pairs % 3], rng);
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v))
          missing.push_back({u, v});
    if (missing.empty())
      continue;
    auto edges = g.edges();
    edges.push_back(missing[rng.below(missing.size())]);
    const Graph h = Graph::from_edges(n, edges);
    ++pairs;
    monotone += exact_ccl(h).order >= exact_ccl(g).order;
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = bounded == graphs && witnessed == graphs && monotone == pairs && elapsed <= kOracleSeconds;
  o.detail = fmt("%zu graphs: %zu within edge bound, %zu witnesses verified; %zu/%zu edge additions monotone; "
                 "%.1f s (limit %.0f s)",
                 graphs, bounded, witnessed, monotone, pairs, elapsed, kOracleSeconds);
  return o;
}

std::vector<double> dense_ratios(const std::vector<TrialOutput> &trials, std::size_t n, double p) {
  std::vector<double> ratios;
  for (const auto &t : trials)
    ratios.push_back(static_cast<double>(t.extraction.certificate.order()) / dense_scale(n, p));
  return ratios;
}

Outcome dense_tracking(const std::vector<TrialOutput> &main_point) {
  const std::size_t n = 20000;
  std::vector<TrialOutput> first20(main_point.begin(), main_point.begin() + 20);
  const double m_main = median(dense_ratios(first20, n, 0.02));
  const double m_40 = median(dense_ratios(run_point(dense_point(n, 40.0 / n), 20, 101), n, 40.0 / n));
  const double m_400 = median(dense_ratios(run_point(dense_point(n, 400.0 / n), 20, 102), n, 400.0 / n));
  Outcome o;
  o.pass = m_main >= kDenseRatioLow && m_main <= kDenseRatioHigh && m_400 > m_40;
  o.detail = fmt("median order/scale at p=0.02: %.3f (band [%.1f, %.1f]); np=40: %.3f, np=400: %.3f", m_main,
                 kDenseRatioLow, kDenseRatioHigh, m_40, m_400);
  return o;
}

Outcome sparse_tracking() {
  const std::size_t n = 100000;
  const double c = 4.0;
  const auto trials = run_point(sparse_point(n, c), 20, 103);
  const double lower = kSparseLowerFactor * std::sqrt(static_cast<double>(n));
  const double upper = 2 * std::sqrt(c * static_cast<double>(n));
  std::size_t above = 0, below = 0;
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto &t : trials) {
    const double k = static_cast<double>(t.extraction.certificate.order());
    above += k >= lower;
    below += k <= upper;
    lo = std::min(lo, t.extraction.certificate.order());
    hi = std::max(hi, t.extraction.certificate.order());
  }
  const double rate = static_cast<double>(above) / static_cast<double>(trials.size());
  Outcome o;
  o.pass = rate >= kSparseLowerRate && below == trials.size();
  o.detail = fmt("orders in [%zu, %zu]; %.0f%% >= %.2f (need %.0f%%), %zu/%zu <= %.1f", lo, hi, 100 * rate, lower,
                 100 * kSparseLowerRate, below, trials.size(), upper);
  return o;
}

Outcome u0_concentration(const std::vector<TrialOutput> &trials) {
  std::size_t inside = 0;
  double worst = 0.0;
  for (const auto &t : trials) {
    const auto &d = t.extraction.diagnostics;
    const double rel = std::abs(static_cast<double>(d.u0) - d.expected_u0) / d.expected_u0;
    worst = std::max(worst, rel);
    inside += rel <= kU0Tolerance;
  }
  const double rate = static_cast<double>(inside) / static_cast<double>(trials.size());
  Outcome o;
  o.pass = rate >= kU0Rate;
  o.detail = fmt("%zu/%zu runs with |U0-E(U0)| <= %.1f E(U0) (need %.0f%%); worst relative error %.3f", inside,
                 trials.size(), kU0Tolerance, 100 * kU0Rate, worst);
  return o;
}

Outcome first_moment_sign() {
  Outcome o;
  o.pass = true;
  for (std::size_t n : {200, 500}) {
    const double p = 0.5;
    std::size_t increases = 0, first_increase = 0, crossing = 0;
    double previous = INFINITY;
    for (std::size_t k = 20; k <= n; ++k) {
      const auto r = first_moment_log_bound(n, p, k);
      if (r.log_expected_count > previous) {
        if (increases++ == 0)
          first_increase = k;
      }
      previous = r.log_expected_count;
    }
    for (std::size_t k = 2; k <= n && crossing == 0; ++k)
      if (first_moment_log_bound(n, p, k).negative)
        crossing = k;
    const bool full_negative = first_moment_log_bound(n, p, n).negative;
    const double scale = static_cast<double>(n) / std::sqrt(std::log2(static_cast<double>(n)));
    const bool near = crossing > 0 && crossing >= scale / kCrossingFactor && crossing <= scale * kCrossingFactor;
    o.pass = o.pass && increases == 0 && full_negative && near;
    if (!o.detail.empty())
      o.detail += "; ";
    o.detail += fmt("n=%zu: %zu increases over k in [20,%zu]%s, verdict at k=n %s, first negative k=%zu vs "
                    "n/sqrt(log2 n)=%.1f",
                    n, increases, n, increases ? fmt(" (first at k=%zu)", first_increase).c_str() : "",
                    full_negative ? "negative" : "positive", crossing, scale);
  }
  return o;
}

std::string slurp(const fs::path &file) {
  std::ifstream in(file, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string &args) {
  const std::string cmd = std::string("\"") + RGMINOR_CLI + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "rgminor-acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::ofstream cfg(root / "config.json");
    cfg << R"({"regime": "dense", "n": [2000, 5000], "np": [20, 100], "seeds": 3, "base_seed": 5, "jobs": 3})"
        << '\n';
  }
  const std::string config = (root / "config.json").string();
  const int e1 = run_cli("experiment --config \"" + config + "\" --output \"" + (root / "run1").string() + "\"");
  const int e2 = run_cli("experiment --config \"" + config + "\" --output \"" + (root / "run2").string() + "\"");
  const std::string csv1 = slurp(root / "run1" / "trials.csv"), csv2 = slurp(root / "run2" / "trials.csv");
  const bool csv_same = e1 == 0 && e2 == 0 && !csv1.empty() && csv1 == csv2;

  const std::string extract = "extract --regime sparse --n 20000 --c 3 --seed 11 --output ";
  const int x1 = run_cli(extract + "\"" + (root / "x1").string() + "\"");
  const int x2 = run_cli(extract + "\"" + (root / "x2").string() + "\"");
  const std::string c1 = slurp(root / "x1" / "certificate.txt"), c2 = slurp(root / "x2" / "certificate.txt");
  const bool cert_same = x1 == 0 && x2 == 0 && !c1.empty() && c1 == c2;

  Outcome o;
  o.pass = csv_same && cert_same;
  o.detail = fmt("experiment CSV %s (%zu bytes, fnv1a %016llx); extract certificate %s (%zu bytes)",
                 csv_same ? "identical" : "differs", csv1.size(),
                 static_cast<unsigned long long>(fnv1a64(csv1)), cert_same ? "identical" : "differs", c1.size());
  fs::remove_all(root);
  return o;
}

Outcome stage_engine_semantics() {
  auto pr = CandidatePair::of;
  auto state = [](std::size_t k, std::vector<CandidatePair> pairs) {
    PairState s(k);
    for (auto p : pairs)
      s.add_unjoined(p);
    return s;
  };
  auto singletons = [](std::size_t k, std::size_t n) {
    std::vector<std::vector<Vertex>> sets;
    for (std::size_t i = 0; i < k; ++i)
      sets.push_back({static_cast<Vertex>(i)});
    return CandidateFamily(sets, n);
  };
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char *name) {
    if (!ok)
      failed.push_back(name);
  };

  {
    const Graph g = Graph::from_edges(6, {{4, 0}, {4, 1}, {5, 2}, {5, 3}});
    const std::vector<VertexPath> paths{{{4}}, {{5}}};
    const auto r = run_stage(state(4, {pr(0, 1), pr(2, 3)}), singletons(4, 6), paths, g, {0, 100});
    expect(r.state.u_count() == 0 && r.joins.size() == 2 && r.joins[0].pair == pr(0, 1) &&
               r.joins[0].path_index == 0 && r.joins[1].pair == pr(2, 3) && r.joins[1].path_index == 1,
           "join-both");
  }
  {
    const Graph g = Graph::from_edges(3, {{2, 0}});
    const std::vector<VertexPath> paths{{{2}}};
    const auto r = run_stage(state(2, {pr(0, 1)}), singletons(2, 3), paths, g, {0, 100});
    expect(r.joins.empty() && r.failed_paths == 1 && r.state.contains(pr(0, 1)), "fail");
  }
  {
    const Graph g = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
    const std::vector<VertexPath> paths{{{3}}};
    const auto r = run_stage(state(3, {pr(0, 1), pr(0, 2), pr(1, 2)}), singletons(3, 4), paths, g, {0, 100});
    expect(r.joins.size() == 1 && r.joins[0].pair == pr(0, 1) && r.state.u_count() == 2 &&
               r.state.contains(pr(0, 2)) && r.state.contains(pr(1, 2)),
           "tie-break");
  }
  {
    const auto s = state(6, {pr(0, 1), pr(2, 3)});
    const auto r = prune_high_degree(s, 4);
    expect(r.pruned.empty() && r.state.unjoined() == s.unjoined() && r.state.discarded().empty(), "prune-identity");
  }
  {
    const auto r = prune_high_degree(state(6, {pr(0, 1), pr(0, 2), pr(0, 3), pr(0, 4), pr(0, 5)}), 4);
    expect(r.pruned == std::vector<CandidateIndex>{0} && r.state.u_count() == 0 && r.state.is_discarded(0),
           "prune-star");
  }
  {
    const auto s = state(6, {pr(0, 1), pr(0, 2), pr(0, 3), pr(1, 4), pr(1, 5), pr(2, 3)});
    const auto r = prune_high_degree(s, 2);
    expect(r.pruned == std::vector<CandidateIndex>{0, 1} && r.state.u_count() == 1 && r.state.contains(pr(2, 3)) &&
               r.state.degree(0) == 0 && r.state.degree(2) == 1,
           "prune-shared-pair");
  }
  Outcome o;
  o.pass = failed.empty();
  o.detail = failed.empty() ? std::string("6/6 fixed examples hold") : "failed:";
  for (const auto &f : failed)
    o.detail += " " + f;
  return o;
}

} // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char *name, const std::function<Outcome()> &check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  criterion %d  %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  std::vector<TrialOutput> desk_point;
  auto desk = [&]() -> const std::vector<TrialOutput> & {
    if (desk_point.empty())
      desk_point = run_point(dense_point(20000, 0.02), 50, 100);
    return desk_point;
  };

  report(1, "certificate soundness", certificate_soundness);
  report(2, "oracle sandwich", oracle_sandwich);
  report(3, "dense tracking", [&] { return dense_tracking(desk()); });
  report(4, "sparse tracking", sparse_tracking);
  report(5, "U0 concentration", [&] { return u0_concentration(desk()); });
  report(6, "first-moment sign", first_moment_sign);
  report(7, "determinism", determinism);
  report(8, "stage engine semantics", stage_engine_semantics);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
