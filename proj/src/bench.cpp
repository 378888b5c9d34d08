#include "matroidqq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "matroidqq/enumeration.hpp"
#include "matroidqq/errors.hpp"

namespace mqq {

namespace {

constexpr std::string_view kFamilyNames[] = {"uniformDecision", "girth", "pavingDecision", "trivial", "loopless"};

std::string bit_answer(bool holds) { return holds ? "1" : "0"; }

bool singleton_family(BenchFamily family) {
  return family == BenchFamily::kTrivial || family == BenchFamily::kLoopless;
}

double search_size(BenchFamily family, int n) {
  return singleton_family(family) ? static_cast<double>(n) : static_cast<double>(binomial(n, n / 2));
}

SubsetMask random_subset(int n, int k, Rng& rng) { return colex_unrank(rng.below(binomial(n, k)), n, k); }

struct Timer {
  bool enabled;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t micros() const {
    if (!enabled) return 0;
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  }
};

BenchRow make_row(const BenchOptions& options, int n, int r, int trial, std::string algorithm) {
  BenchRow row;
  row.n = n;
  row.r = r;
  row.trial = trial;
  row.seed = options.seed;
  row.algorithm = std::move(algorithm);
  return row;
}

void fill(BenchRow& row, const QueryReport& report, std::string answer, std::string truth, std::int64_t micros) {
  row.classical_queries = report.classical;
  row.quantum_queries = report.quantum;
  row.answer = std::move(answer);
  row.ground_truth = std::move(truth);
  row.correct = row.answer == row.ground_truth;
  row.wall_time_micros = micros;
}

std::vector<BenchRow> run_trial(const BenchOptions& options, int n, int trial) {
  Rng rng = Rng(options.seed).split(static_cast<std::uint64_t>(n)).split(static_cast<std::uint64_t>(trial));
  const AmplificationConfig& cfg = options.amplification;
  std::vector<BenchRow> rows;

  switch (options.family) {
    case BenchFamily::kUniformDecision: {
      const int r = n / 2;
      const IndependenceOracle oracle =
          oracle_of(make_deleted_basis(n, r, random_subset(n, r, rng), DeletedVariant::kOne));
      const std::string truth = bit_answer(!find_uniform_violation(oracle));

      BenchRow quantum = make_row(options, n, r, trial, "uniform-quantum");
      Timer qt{options.record_wall_time};
      const DecisionResult q = decide_uniform(oracle, cfg, rng);
      fill(quantum, q.report, bit_answer(q.answer == 1), truth, qt.micros());
      rows.push_back(std::move(quantum));

      BenchRow classical = make_row(options, n, r, trial, "uniform-classical");
      Timer ct{options.record_wall_time};
      CountingOracle counter(oracle);
      const DecisionResult c = decide_uniform_classical(counter);
      fill(classical, c.report, bit_answer(c.answer == 1), truth, ct.micros());
      rows.push_back(std::move(classical));
      break;
    }
    case BenchFamily::kGirth: {
      const int r = n / 2;
      const IndependenceOracle oracle =
          oracle_of(make_deleted_basis(n, r, random_subset(n, r, rng), DeletedVariant::kOne));
      const std::string truth = girth_bruteforce(oracle).to_string();
      BenchRow row = make_row(options, n, r, trial, "girth-quantum");
      Timer t{options.record_wall_time};
      const GirthResult g = compute_girth(oracle, cfg, rng);
      fill(row, g.report, g.girth.to_string(), truth, t.micros());
      rows.push_back(std::move(row));
      break;
    }
    case BenchFamily::kPavingDecision: {
      const int r = n / 2 + 1;
      const IndependenceOracle oracle = oracle_of(make_paving_counterexample(n, r, random_subset(n, r - 1, rng)));
      const std::string truth = bit_answer(!find_paving_violation(oracle));
      BenchRow row = make_row(options, n, r, trial, "paving-quantum");
      Timer t{options.record_wall_time};
      const DecisionResult d = decide_paving(oracle, cfg, rng);
      fill(row, d.report, bit_answer(d.answer == 1), truth, t.micros());
      rows.push_back(std::move(row));
      break;
    }
    case BenchFamily::kTrivial:
    case BenchFamily::kLoopless: {
      const bool trivial = options.family == BenchFamily::kTrivial;
      SubsetMask coloops = trivial ? SubsetMask::empty() : SubsetMask::full(n);
      if (trial % 2 == 1) {
        const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        coloops = trivial ? coloops.with(e) : coloops.without(e);
      }
      const IndependenceOracle oracle = loops_and_coloops(n, coloops);
      const std::string truth =
          bit_answer(trivial ? !find_trivial_violation(oracle) : !find_loopless_violation(oracle));
      BenchRow row = make_row(options, n, coloops.size(), trial, trivial ? "trivial-quantum" : "loopless-quantum");
      Timer t{options.record_wall_time};
      const DecisionResult d = trivial ? decide_trivial(oracle, cfg, rng) : decide_loopless(oracle, cfg, rng);
      fill(row, d.report, bit_answer(d.answer == 1), truth, t.micros());
      rows.push_back(std::move(row));
      break;
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(BenchFamily family) { return kFamilyNames[static_cast<int>(family)]; }

BenchFamily parse_bench_family(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kFamilyNames)); ++i) {
    if (kFamilyNames[i] == name) return static_cast<BenchFamily>(i);
  }
  throw ParseError("unknown bench family '" + std::string(name) + "'");
}

int bench_min_n(BenchFamily family) {
  switch (family) {
    case BenchFamily::kUniformDecision:
    case BenchFamily::kGirth:
      return 2;
    case BenchFamily::kPavingDecision:
      return 3;
    case BenchFamily::kTrivial:
    case BenchFamily::kLoopless:
      return 1;
  }
  return 1;
}

int bench_max_n(BenchFamily family) { return singleton_family(family) ? kMaxGround : kMaxEnumerationGround; }

std::uint64_t projected_memory_bytes(BenchFamily family, int n, int threads) {
  const auto workers = static_cast<std::uint64_t>(std::max(threads, 1));
  if (singleton_family(family)) return workers * 16 * static_cast<std::uint64_t>(n);
  // Independence table plus rank/circuit scratch (~10 bytes per subset),
  // plus the simulator's marked-index list.
  const std::uint64_t subsets = std::uint64_t{1} << n;
  return workers * (10 * subsets + 8 * binomial(n, n / 2));
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.trials < 0) throw ParameterError("trials must be >= 0");
  if (options.n_min > options.n_max) throw ParameterError("empty n range");
  if (options.n_min < bench_min_n(options.family) || options.n_max > bench_max_n(options.family)) {
    throw CapacityError(std::string(to_string(options.family)) + " supports n in [" +
                        std::to_string(bench_min_n(options.family)) + ", " +
                        std::to_string(bench_max_n(options.family)) + "]");
  }
  if (projected_memory_bytes(options.family, options.n_max, options.threads) > kMaxBenchMemory) {
    throw CapacityError("projected memory exceeds 1 GiB");
  }

  std::vector<std::pair<int, int>> tasks;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (int t = 0; t < options.trials; ++t) tasks.emplace_back(n, t);
  }
  std::vector<std::vector<BenchRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_trial(options, tasks[i].first, tasks[i].second);
    }
  };
  const int threads = std::clamp(options.threads, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<BenchRow> rows;
  for (auto& chunk : results) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,r,algorithm,trial,seed,classicalQueries,quantumQueries,answer,groundTruth,correct,wallTimeMicros\r\n";
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.r << ',' << csv_field(row.algorithm) << ',' << row.trial << ',' << row.seed << ','
        << row.classical_queries << ',' << row.quantum_queries << ',' << csv_field(row.answer) << ','
        << csv_field(row.ground_truth) << ',' << (row.correct ? "true" : "false") << ',' << row.wall_time_micros
        << "\r\n";
  }
}

std::optional<double> loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) return std::nullopt;
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto count = static_cast<double>(xs.size());
  const double denom = count * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (count * sxy - sx * sy) / denom;
}

BenchSummary summarize(BenchFamily family, std::span<const BenchRow> rows) {
  struct Acc {
    double quantum = 0, classical = 0, correct = 0, count = 0;
  };
  // Algorithms keep first-seen order; points are ordered by n within each.
  std::vector<std::string> order;
  std::map<std::string, std::map<int, Acc>> acc;
  for (const BenchRow& row : rows) {
    if (!acc.contains(row.algorithm)) order.push_back(row.algorithm);
    Acc& a = acc[row.algorithm][row.n];
    a.quantum += static_cast<double>(row.quantum_queries);
    a.classical += static_cast<double>(row.classical_queries);
    a.correct += row.correct ? 1 : 0;
    a.count += 1;
  }

  BenchSummary summary;
  for (const std::string& algorithm : order) {
    std::vector<double> xs, qs, cs;
    for (const auto& [n, a] : acc[algorithm]) {
      BenchPoint p{algorithm, n, search_size(family, n), a.quantum / a.count, a.classical / a.count,
                   a.correct / a.count};
      xs.push_back(p.search_size);
      qs.push_back(p.mean_quantum);
      cs.push_back(p.mean_classical);
      summary.points.push_back(std::move(p));
    }
    summary.fits.push_back(BenchFit{algorithm, loglog_slope(xs, qs), loglog_slope(xs, cs)});
  }
  return summary;
}

void write_summary(std::ostream& out, const BenchSummary& summary) {
  for (const BenchPoint& p : summary.points) {
    nlohmann::ordered_json j;
    j["algorithm"] = p.algorithm;
    j["n"] = p.n;
    j["searchSize"] = p.search_size;
    j["meanQuantum"] = p.mean_quantum;
    j["meanClassical"] = p.mean_classical;
    j["accuracy"] = p.accuracy;
    out << j.dump() << '\n';
  }
  for (const BenchFit& f : summary.fits) {
    nlohmann::ordered_json j;
    j["algorithm"] = f.algorithm;
    j["quantumSlope"] = f.quantum_slope ? nlohmann::ordered_json(*f.quantum_slope) : nlohmann::ordered_json(nullptr);
    j["classicalSlope"] =
        f.classical_slope ? nlohmann::ordered_json(*f.classical_slope) : nlohmann::ordered_json(nullptr);
    out << j.dump() << '\n';
  }
}

}  // namespace mqq
