#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroidqq/algorithms.hpp"

namespace mqq {

enum class BenchFamily { kUniformDecision, kGirth, kPavingDecision, kTrivial, kLoopless };

std::string_view to_string(BenchFamily family);
BenchFamily parse_bench_family(std::string_view name);

// Fixtures per family (A drawn uniformly from the trial's stream):
//   uniformDecision  deletedBasis1(n, n/2, A); quantum and classical rows
//   girth            deletedBasis1(n, n/2, A)
//   pavingDecision   pavingCounter(n, n/2 + 1, A)
//   trivial          even trials U_{0,n}; odd trials one coloop at random
//   loopless         even trials U_{n,n}; odd trials one loop at random
struct BenchOptions {
  BenchFamily family = BenchFamily::kUniformDecision;
  int n_min = 8;
  int n_max = 8;
  int trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  bool record_wall_time = false;  // off: the column is 0 and output is replayable
  AmplificationConfig amplification;
};

struct BenchRow {
  int n = 0;
  int r = 0;
  std::string algorithm;
  int trial = 0;
  std::uint64_t seed = 0;
  std::int64_t classical_queries = 0;
  std::int64_t quantum_queries = 0;
  std::string answer;
  std::string ground_truth;
  bool correct = false;
  std::int64_t wall_time_micros = 0;
};

inline constexpr std::uint64_t kMaxBenchMemory = std::uint64_t{1} << 30;

// Smallest and largest n a family accepts.
int bench_min_n(BenchFamily family);
int bench_max_n(BenchFamily family);
// Rough peak memory of one trial at ground size n, times `threads`.
std::uint64_t projected_memory_bytes(BenchFamily family, int n, int threads);

// Rows sorted by (n, trial), then algorithm order within a trial. Output is
// independent of options.threads. Throws CapacityError outside the family's
// n range or above kMaxBenchMemory.
std::vector<BenchRow> run_bench(const BenchOptions& options);

void write_csv(std::ostream& out, std::span<const BenchRow> rows);
std::string csv_field(std::string_view value);

struct BenchPoint {
  std::string algorithm;
  int n = 0;
  double search_size = 0.0;  // C(n, n/2) for subset families, n for singleton ones
  double mean_quantum = 0.0;
  double mean_classical = 0.0;
  double accuracy = 0.0;
};

struct BenchFit {
  std::string algorithm;
  std::optional<double> quantum_slope;    // log mean quantum vs log search size
  std::optional<double> classical_slope;  // log mean classical vs log search size
};

struct BenchSummary {
  std::vector<BenchPoint> points;
  std::vector<BenchFit> fits;
};

BenchSummary summarize(BenchFamily family, std::span<const BenchRow> rows);
void write_summary(std::ostream& out, const BenchSummary& summary);

// Least-squares slope of log(y) against log(x); needs >= 2 points, all > 0.
std::optional<double> loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace mqq
