#include <doctest.h>

#include <cmath>
#include <sstream>

#include "matroidqq/bench.hpp"
#include "matroidqq/errors.hpp"

using namespace mqq;

namespace {

const char* kHeader =
    "n,r,algorithm,trial,seed,classicalQueries,quantumQueries,answer,groundTruth,correct,wallTimeMicros\r\n";

std::string csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace

TEST_CASE("zero trials write the header only") {
  BenchOptions options;
  options.trials = 0;
  options.n_min = 6;
  options.n_max = 8;
  const auto rows = run_bench(options);
  CHECK(rows.empty());
  CHECK(csv(rows) == kHeader);
}

TEST_CASE("rows are ordered and consistent") {
  for (BenchFamily family : {BenchFamily::kUniformDecision, BenchFamily::kGirth, BenchFamily::kPavingDecision,
                             BenchFamily::kTrivial, BenchFamily::kLoopless}) {
    CAPTURE(to_string(family));
    BenchOptions options;
    options.family = family;
    options.n_min = 5;
    options.n_max = 7;
    options.trials = 6;
    options.seed = 42;
    const auto rows = run_bench(options);
    const std::size_t per_trial = family == BenchFamily::kUniformDecision ? 2 : 1;
    REQUIRE(rows.size() == 3 * 6 * per_trial);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const BenchRow& row = rows[i];
      CHECK(row.n == 5 + static_cast<int>(i / (6 * per_trial)));
      CHECK(row.trial == static_cast<int>((i / per_trial) % 6));
      CHECK(row.seed == 42);
      CHECK(row.correct == (row.answer == row.ground_truth));
      CHECK(row.wall_time_micros == 0);
    }
    CHECK(parse_bench_family(to_string(family)) == family);
  }
}

TEST_CASE("output does not depend on the thread count") {
  for (BenchFamily family : {BenchFamily::kUniformDecision, BenchFamily::kGirth, BenchFamily::kTrivial}) {
    BenchOptions options;
    options.family = family;
    options.n_min = 6;
    options.n_max = 9;
    options.trials = 12;
    options.seed = 7;
    options.threads = 1;
    const std::string single = csv(run_bench(options));
    options.threads = 4;
    CHECK(csv(run_bench(options)) == single);
    CHECK(csv(run_bench(options)) == single);
    options.seed = 8;
    CHECK(csv(run_bench(options)) != single);
  }
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_field("") == "");

  BenchRow row;
  row.n = 4;
  row.r = 2;
  row.algorithm = "x,y";
  row.answer = "1";
  row.ground_truth = "1";
  row.correct = true;
  CHECK(csv({row}) == std::string(kHeader) + "4,2,\"x,y\",0,0,0,0,1,1,true,0\r\n");
}

TEST_CASE("log-log slope") {
  const std::vector<double> xs = {1, 10, 100, 1000};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, 0.5));
  CHECK(*loglog_slope(xs, ys) == doctest::Approx(0.5));
  CHECK_FALSE(loglog_slope(std::vector<double>{1}, std::vector<double>{1}));
  CHECK_FALSE(loglog_slope(std::vector<double>{1, 2}, std::vector<double>{0, 1}));
  CHECK_FALSE(loglog_slope(std::vector<double>{2, 2}, std::vector<double>{1, 3}));
}

TEST_CASE("summary means") {
  std::vector<BenchRow> rows(4);
  for (int i = 0; i < 4; ++i) {
    rows[i].n = i < 2 ? 4 : 6;
    rows[i].algorithm = "a";
    rows[i].quantum_queries = 10 * (i + 1);
    rows[i].classical_queries = 1;
    rows[i].correct = i != 0;
  }
  const BenchSummary s = summarize(BenchFamily::kUniformDecision, rows);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].search_size == 6);
  CHECK(s.points[0].mean_quantum == 15);
  CHECK(s.points[0].accuracy == 0.5);
  CHECK(s.points[1].search_size == 20);
  CHECK(s.points[1].mean_quantum == 35);
  REQUIRE(s.fits.size() == 1);
  CHECK(*s.fits[0].quantum_slope == doctest::Approx(std::log(35.0 / 15) / std::log(20.0 / 6)));
  CHECK(*s.fits[0].classical_slope == doctest::Approx(0.0));
}

TEST_CASE("bench limits") {
  BenchOptions options;
  options.n_min = 8;
  options.n_max = 17;
  CHECK_THROWS_AS(run_bench(options), CapacityError);
  options.family = BenchFamily::kTrivial;
  options.n_max = 65;
  CHECK_THROWS_AS(run_bench(options), CapacityError);
  options.n_max = 64;
  options.n_min = 64;
  options.trials = 2;
  CHECK(run_bench(options).size() == 2);
  CHECK_THROWS_AS(parse_bench_family("bogus"), ParseError);
}
