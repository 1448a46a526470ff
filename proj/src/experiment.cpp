#include "rgminor/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rgminor/bounds.hpp"
#include "rgminor/errors.hpp"
#include "rgminor/verify.hpp"

namespace rgminor {

namespace {

constexpr const char *kSchema = "rgminor-trials v1";

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

template <class T> T parse_number(std::string_view field, const char *what) {
  T value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw ParseError(std::string("bad ") + what + " field: \"" + std::string(field) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

std::string join_counts(const std::vector<std::size_t> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ";" : "") + std::to_string(xs[i]);
  return s;
}

std::vector<std::size_t> parse_counts(std::string_view field) {
  std::vector<std::size_t> out;
  if (field.empty())
    return out;
  for (auto part : split(field, ';'))
    out.push_back(parse_number<std::size_t>(part, "stage count"));
  return out;
}

template <class T> std::vector<T> number_list(const nlohmann::json &value, const char *key) {
  if (value.is_array())
    return value.get<std::vector<T>>();
  if (value.is_number())
    return {value.get<T>()};
  throw ParseError(std::string("config key \"") + key + "\" must be a number or a list of numbers");
}

ExtractorConfig extractor_config(const ExperimentConfig &config) {
  ExtractorConfig ec;
  ec.path_constant = config.path_constant;
  ec.path_budget = config.budget;
  return ec;
}

} // namespace

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExperimentConfig parse_config(const std::string &json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("config must be a JSON object");

  ExperimentConfig config;
  try {
    for (const auto &[key, value] : doc.items()) {
      if (key == "regime") {
        const auto r = value.get<std::string>();
        if (r != "dense" && r != "sparse")
          throw ParseError("regime must be \"dense\" or \"sparse\"");
        config.regime = r == "dense" ? Regime::dense : Regime::sparse;
      } else if (key == "n") {
        config.n = number_list<std::size_t>(value, "n");
      } else if (key == "p") {
        config.p = number_list<double>(value, "p");
      } else if (key == "np") {
        config.np = number_list<double>(value, "np");
      } else if (key == "c") {
        config.c = number_list<double>(value, "c");
      } else if (key == "eps") {
        config.eps = number_list<double>(value, "eps");
      } else if (key == "delta") {
        config.delta = number_list<double>(value, "delta");
      } else if (key == "alpha") {
        config.alpha = number_list<double>(value, "alpha");
      } else if (key == "seeds") {
        config.seeds = value.get<std::size_t>();
      } else if (key == "base_seed") {
        config.base_seed = value.get<std::uint64_t>();
      } else if (key == "restarts") {
        config.budget.restarts = value.get<std::size_t>();
      } else if (key == "step_factor") {
        config.budget.step_factor = value.get<double>();
      } else if (key == "path_constant") {
        config.path_constant = value.get<double>();
      } else if (key == "exact_cap") {
        config.exact_cap = value.get<std::size_t>();
      } else if (key == "output") {
        config.output = value.get<std::string>();
      } else if (key == "jobs") {
        config.jobs = value.get<std::size_t>();
      } else if (key == "record_timing") {
        config.record_timing = value.get<bool>();
      } else {
        throw ParseError("unknown config key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("bad config value: ") + e.what());
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in)
    throw IoError("cannot open config " + file.string());
  std::stringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<GridPoint> expand_grid(const ExperimentConfig &config) {
  std::vector<GridPoint> grid;
  for (std::size_t n : config.n) {
    if (config.regime == Regime::dense) {
      std::vector<double> ps = config.p;
      for (double d : config.np)
        ps.push_back(d / static_cast<double>(n));
      for (double p : ps)
        for (double eps : config.eps)
          grid.push_back({Regime::dense, n, p, eps, 0.0});
    } else {
      for (double c : config.c)
        for (double delta : config.delta)
          for (double alpha : config.alpha)
            grid.push_back({Regime::sparse, n, c, delta, alpha});
    }
  }
  return grid;
}

void validate_config(const ExperimentConfig &config) {
  if (config.seeds < 1 || config.seeds > kStreamsPerGridPoint)
    throw DomainError("seeds must lie in [1, 10^6]");
  const auto grid = expand_grid(config);
  if (grid.empty())
    throw DomainError("parameter grid is empty");
  const auto ec = extractor_config(config);
  for (const auto &point : grid) {
    try {
      if (point.regime == Regime::dense)
        dense_parameters(point.n, point.param, point.shape, ec);
      else
        sparse_parameters(point.n, point.param, point.shape, point.alpha);
    } catch (const std::exception &e) {
      std::ostringstream msg;
      msg << "invalid grid point n=" << point.n << " param=" << point.param << " shape=" << point.shape
          << ": " << e.what();
      throw DomainError(msg.str());
    }
  }
}

TrialOutput run_trial(const GridPoint &point, std::uint64_t base_seed, std::uint64_t stream_id,
                      const ExperimentConfig &config) {
  const auto started = std::chrono::steady_clock::now();
  const RngStream rng(base_seed, stream_id);
  const auto ec = extractor_config(config);
  TrialOutput out{{}, point.regime == Regime::dense
                           ? extract_dense(point.n, point.param, point.shape, rng, ec)
                           : extract_sparse(point.n, point.param, point.shape, point.alpha, rng, ec)};
  const auto &diag = out.extraction.diagnostics;
  TrialRecord &r = out.record;
  r.point = point;
  r.base_seed = base_seed;
  r.stream_id = stream_id;
  r.m = diag.m;
  r.k_prime = diag.k_prime_used;
  r.t = diag.t;
  r.u0 = diag.u0;
  r.expected_u0 = diag.expected_u0;
  for (const auto &stage : diag.stages) {
    r.stage_joined.push_back(stage.joined);
    r.stage_failed.push_back(stage.failed_paths);
  }
  r.pruned_total = diag.pruned_total;
  r.order = out.extraction.certificate.order();
  r.verified = verify_minor(out.extraction.graph, out.extraction.certificate).ok();
  if (!r.verified)
    throw std::logic_error("trial produced an unverifiable certificate");
  if (point.regime == Regime::dense) {
    const auto band = theoretical_ccl_dense(point.n, point.param, point.shape);
    r.theory_lower = band.lower;
    r.theory_upper = band.upper;
  } else {
    const auto band = sparse_bounds(point.n, point.param, point.shape);
    r.theory_lower = band.lower;
    r.theory_upper = band.upper;
  }
  if (point.n <= config.exact_cap)
    r.exact = exact_ccl(out.extraction.graph, config.exact_cap).order;
  if (config.record_timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return out;
}

std::filesystem::path trials_csv_path(const ExperimentConfig &config) { return config.output / "trials.csv"; }

std::vector<TrialRecord> run_experiment(const ExperimentConfig &config) {
  validate_config(config);
  const auto grid = expand_grid(config);

  std::error_code fs_error;
  std::filesystem::create_directories(config.output, fs_error);
  const auto csv_path = trials_csv_path(config);
  std::ofstream out(csv_path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + csv_path.string());
  write_csv_preamble(out);
  out.flush();

  const std::size_t total = grid.size() * config.seeds;
  std::vector<std::optional<TrialRecord>> results(total);
  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::size_t next_row = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= total || stop)
        return;
      const std::size_t g = job / config.seeds;
      const std::size_t s = job % config.seeds;
      try {
        auto trial = run_trial(grid[g], config.base_seed, g * kStreamsPerGridPoint + s, config);
        std::lock_guard lock(mutex);
        results[job] = std::move(trial.record);
        // rows leave in canonical order regardless of completion order
        while (next_row < total && results[next_row]) {
          write_csv_row(out, *results[next_row]);
          ++next_row;
        }
        out.flush();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure)
          failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(config.jobs, total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);
  if (!out)
    throw IoError("write failed: " + csv_path.string());

  std::vector<TrialRecord> records;
  records.reserve(total);
  for (auto &r : results)
    records.push_back(std::move(*r));
  return records;
}

const std::string &csv_header() {
  static const std::string header = "regime,n,param,shape,alpha,base_seed,stream_id,m,k_prime,t,u0,expected_u0,"
                                    "stage_joined,stage_failed,pruned_total,order,verify,theory_lower,"
                                    "theory_upper,exact,wall_ms";
  return header;
}

std::string csv_guard_line() {
  std::ostringstream line;
  line << "# " << kSchema << " header-fnv1a=" << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a64(csv_header());
  return line.str();
}

void write_csv_preamble(std::ostream &out) { out << csv_guard_line() << '\n' << csv_header() << '\n'; }

void write_csv_row(std::ostream &out, const TrialRecord &r) {
  out << to_string(r.point.regime) << ',' << r.point.n << ',' << format_double(r.point.param) << ','
      << format_double(r.point.shape) << ',' << format_double(r.point.alpha) << ',' << r.base_seed << ','
      << r.stream_id << ',' << r.m << ',' << r.k_prime << ',' << r.t << ',' << r.u0 << ','
      << format_double(r.expected_u0) << ',' << join_counts(r.stage_joined) << ',' << join_counts(r.stage_failed)
      << ',' << r.pruned_total << ',' << r.order << ',' << (r.verified ? "pass" : "fail") << ','
      << format_double(r.theory_lower) << ',' << format_double(r.theory_upper) << ','
      << (r.exact ? std::to_string(*r.exact) : "") << ',' << (r.wall_ms ? format_double(*r.wall_ms) : "")
      << '\n';
}

std::vector<TrialRecord> read_trials_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_guard_line())
    throw ParseError("trial CSV guard line missing or schema/header hash mismatch");
  if (!std::getline(in, line) || line != csv_header())
    throw ParseError("trial CSV header does not match schema " + std::string(kSchema));
  std::vector<TrialRecord> records;
  const std::size_t columns = split(csv_header(), ',').size();
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    const auto f = split(line, ',');
    if (f.size() != columns)
      throw ParseError("trial CSV row has " + std::to_string(f.size()) + " fields, expected " +
                       std::to_string(columns));
    TrialRecord r;
    if (f[0] != "dense" && f[0] != "sparse")
      throw ParseError("bad regime field: " + std::string(f[0]));
    r.point.regime = f[0] == "dense" ? Regime::dense : Regime::sparse;
    r.point.n = parse_number<std::size_t>(f[1], "n");
    r.point.param = parse_number<double>(f[2], "param");
    r.point.shape = parse_number<double>(f[3], "shape");
    r.point.alpha = parse_number<double>(f[4], "alpha");
    r.base_seed = parse_number<std::uint64_t>(f[5], "base_seed");
    r.stream_id = parse_number<std::uint64_t>(f[6], "stream_id");
    r.m = parse_number<std::size_t>(f[7], "m");
    r.k_prime = parse_number<std::size_t>(f[8], "k_prime");
    r.t = parse_number<std::size_t>(f[9], "t");
    r.u0 = parse_number<std::size_t>(f[10], "u0");
    r.expected_u0 = parse_number<double>(f[11], "expected_u0");
    r.stage_joined = parse_counts(f[12]);
    r.stage_failed = parse_counts(f[13]);
    r.pruned_total = parse_number<std::size_t>(f[14], "pruned_total");
    r.order = parse_number<std::size_t>(f[15], "order");
    if (f[16] != "pass" && f[16] != "fail")
      throw ParseError("bad verify field: " + std::string(f[16]));
    r.verified = f[16] == "pass";
    r.theory_lower = parse_number<double>(f[17], "theory_lower");
    r.theory_upper = parse_number<double>(f[18], "theory_upper");
    if (!f[19].empty())
      r.exact = parse_number<std::size_t>(f[19], "exact");
    if (!f[20].empty())
      r.wall_ms = parse_number<double>(f[20], "wall_ms");
    records.push_back(std::move(r));
  }
  return records;
}

} // namespace rgminor
