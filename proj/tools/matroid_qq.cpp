// matroid-qq: generate matroid files, decide properties with the simulated
// quantum algorithms or by brute force, benchmark query counts, and print
// adversary lower-bound tables.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroidqq/adversary.hpp"
#include "matroidqq/algorithms.hpp"
#include "matroidqq/bench.hpp"
#include "matroidqq/enumeration.hpp"
#include "matroidqq/errors.hpp"
#include "matroidqq/matroid.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct NRange {
  int lo = 0;
  int hi = 0;
};

NRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw mqq::ParseError("bad n range '" + text + "' (expected N or LO..HI)");
  }
}

mqq::MatroidSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mqq::ParseError("cannot open '" + path + "'");
  return mqq::read_matroid(in);
}

int default_threads() {
  if (const char* env = std::getenv("MATROID_QQ_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw mqq::ParameterError("MATROID_QQ_THREADS must be a positive integer");
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

// An oracle view that bills every answer to `counter` as a classical query.
mqq::IndependenceOracle billed(mqq::CountingOracle& counter) {
  return mqq::IndependenceOracle(counter.ground_size(), [&counter](mqq::SubsetMask s) {
    return counter.query_classical(s);
  });
}

void put_report(ordered_json& j, const mqq::QueryReport& report) {
  j["classical"] = report.classical;
  j["quantum"] = report.quantum;
  j["total"] = report.total();
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = -1;
  int r = -1;
  std::string elements;
  bool has_elements = false;
  std::string payload;
  std::string from;
  std::string out;
};

int run_gen(const GenArgs& args) {
  const mqq::MatroidKind kind = mqq::parse_kind(args.kind);
  mqq::MatroidSpec spec = mqq::make_uniform(0, 0);
  if (!args.from.empty()) {
    const mqq::MatroidSpec source = load(args.from);
    if (args.n >= 0 && args.n != source.ground_size()) throw mqq::ParameterError("--n does not match --from file");
    if (kind == mqq::MatroidKind::kBasisFamily) {
      spec = mqq::materialize_bases(source);
      if (args.r >= 0 && args.r != *spec.rank()) throw mqq::ParameterError("--r does not match the source rank");
    } else if (kind == mqq::MatroidKind::kSubsetFamily) {
      spec = mqq::materialize_subsets(source);
    } else {
      throw mqq::ParameterError("--from materializes into basisFamily or subsetFamily only");
    }
  } else {
    if (args.n < 0) throw mqq::ParameterError("--n is required");
    const bool needs_r = kind != mqq::MatroidKind::kSubsetFamily;
    if (needs_r && args.r < 0) throw mqq::ParameterError("--r is required for " + args.kind);
    const mqq::SubsetMask a = mqq::parse_elements(args.elements, args.n);
    switch (kind) {
      case mqq::MatroidKind::kUniform:
        spec = mqq::make_uniform(args.n, args.r);
        break;
      case mqq::MatroidKind::kBasisFamily:
        spec = mqq::make_basis_family(args.n, args.r, mqq::parse_bits(args.payload));
        break;
      case mqq::MatroidKind::kSubsetFamily:
        spec = mqq::make_subset_family(args.n, mqq::parse_bits(args.payload));
        break;
      case mqq::MatroidKind::kDeletedBasis1:
      case mqq::MatroidKind::kDeletedBasis2:
        if (!args.has_elements) throw mqq::ParameterError("--A is required for " + args.kind);
        spec = mqq::make_deleted_basis(
            args.n, args.r, a,
            kind == mqq::MatroidKind::kDeletedBasis1 ? mqq::DeletedVariant::kOne : mqq::DeletedVariant::kTwo);
        break;
      case mqq::MatroidKind::kPavingCounter:
        if (!args.has_elements) throw mqq::ParameterError("--A is required for " + args.kind);
        spec = mqq::make_paving_counterexample(args.n, args.r, a);
        break;
    }
  }
  if (args.out.empty()) {
    mqq::write_matroid(std::cout, spec);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw mqq::ParameterError("cannot write '" + args.out + "'");
    mqq::write_matroid(out, spec);
  }
  return 0;
}

// --- check / girth / count ------------------------------------------------

struct RunArgs {
  std::string file;
  std::string property;
  std::string mode;
  std::uint64_t seed = 0;
  int max_repeat = 5;
};

int run_check(const RunArgs& args) {
  const mqq::MatroidSpec spec = load(args.file);
  const std::string& property = args.property;
  const bool enumeration_only = property == "eulerian" || property == "axioms";
  const std::string mode = args.mode.empty() ? (enumeration_only ? "bruteforce" : "quantum") : args.mode;
  if (mode != "quantum" && mode != "bruteforce") throw mqq::ParameterError("unknown mode '" + mode + "'");
  if (enumeration_only && mode == "quantum") {
    throw mqq::ParameterError("property '" + property + "' has no quantum algorithm; use --mode bruteforce");
  }

  mqq::CountingOracle counter(mqq::oracle_of(spec));
  mqq::DecisionResult result;
  if (mode == "quantum") {
    mqq::Rng rng(args.seed);
    const mqq::AmplificationConfig cfg{args.max_repeat};
    if (property == "uniform") {
      result = mqq::decide_uniform(counter, cfg, rng);
    } else if (property == "paving") {
      result = mqq::decide_paving(counter, cfg, rng);
    } else if (property == "trivial") {
      result = mqq::decide_trivial(counter, cfg, rng);
    } else if (property == "loopless") {
      result = mqq::decide_loopless(counter, cfg, rng);
    } else {
      throw mqq::ParameterError("unknown property '" + property + "'");
    }
  } else {
    const mqq::IndependenceOracle oracle = billed(counter);
    std::optional<mqq::SubsetMask> violation;
    bool holds = true;
    if (property == "uniform") {
      violation = mqq::find_uniform_violation(oracle);
    } else if (property == "paving") {
      violation = mqq::find_paving_violation(oracle);
    } else if (property == "trivial") {
      violation = mqq::find_trivial_violation(oracle);
    } else if (property == "loopless") {
      violation = mqq::find_loopless_violation(oracle);
    } else if (property == "eulerian") {
      holds = mqq::is_eulerian_bruteforce(oracle);
    } else if (property == "axioms") {
      holds = mqq::verify_axioms(oracle);
    } else {
      throw mqq::ParameterError("unknown property '" + property + "'");
    }
    result.answer = (holds && !violation) ? 1 : 0;
    result.witness = violation;
    result.report = counter.report();
  }

  ordered_json j;
  j["property"] = property;
  j["mode"] = mode;
  j["answer"] = result.answer;
  j["witness"] = result.witness ? ordered_json(mqq::format_elements(*result.witness)) : ordered_json(nullptr);
  put_report(j, result.report);
  std::cout << j.dump() << '\n';
  return result.answer == 1 ? kExitHolds : kExitFails;
}

int run_girth(const RunArgs& args) {
  const mqq::MatroidSpec spec = load(args.file);
  const std::string mode = args.mode.empty() ? "quantum" : args.mode;
  mqq::CountingOracle counter(mqq::oracle_of(spec));
  mqq::GirthResult result;
  if (mode == "quantum") {
    mqq::Rng rng(args.seed);
    result = mqq::compute_girth(counter, mqq::AmplificationConfig{args.max_repeat}, rng);
  } else if (mode == "bruteforce") {
    result.girth = mqq::girth_bruteforce(billed(counter));
    result.report = counter.report();
  } else {
    throw mqq::ParameterError("unknown mode '" + mode + "'");
  }
  ordered_json j;
  j["girth"] = result.girth.is_infinite() ? ordered_json("inf") : ordered_json(result.girth.value());
  j["mode"] = mode;
  put_report(j, result.report);
  std::cout << j.dump() << '\n';
  return 0;
}

int run_count(const std::string& file, const std::string& what) {
  const mqq::MatroidSpec spec = load(file);
  mqq::CountingOracle counter(mqq::oracle_of(spec));
  const mqq::IndependenceOracle oracle = billed(counter);
  ordered_json j;
  j["what"] = what;
  if (what == "circuits") {
    j["count"] = mqq::circuits(oracle).size();
  } else if (what == "bases") {
    j["count"] = mqq::bases(oracle).size();
  } else if (what == "flats") {
    j["count"] = mqq::flats(oracle).size();
  } else if (what == "hyperplanes") {
    const auto found = mqq::hyperplanes(oracle);
    j["count"] = found.size();
    int largest = 0;
    for (mqq::SubsetMask h : found) largest = std::max(largest, h.size());
    j["largestHyperplane"] = found.empty() ? ordered_json(nullptr) : ordered_json(largest);
  } else {
    throw mqq::ParameterError("unknown count target '" + what + "'");
  }
  put_report(j, counter.report());
  std::cout << j.dump() << '\n';
  return 0;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::string n = "8";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string out;
  int max_repeat = 5;
  int max_n = -1;
  int threads = 0;
  bool wall_time = false;
};

int run_bench(const BenchArgs& args) {
  mqq::BenchOptions options;
  options.family = mqq::parse_bench_family(args.family);
  const NRange range = parse_range(args.n);
  options.n_min = range.lo;
  options.n_max = range.hi;
  options.trials = args.trials;
  options.seed = args.seed;
  options.threads = args.threads > 0 ? args.threads : default_threads();
  options.record_wall_time = args.wall_time;
  options.amplification.max_repeat = args.max_repeat;
  if (args.max_n >= 0 && range.hi > args.max_n) {
    throw mqq::CapacityError("n = " + std::to_string(range.hi) + " exceeds --max-n " + std::to_string(args.max_n));
  }

  const auto rows = mqq::run_bench(options);
  const mqq::BenchSummary summary = mqq::summarize(options.family, rows);
  if (args.out.empty()) {
    mqq::write_csv(std::cout, rows);
    mqq::write_summary(std::cerr, summary);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw mqq::ParameterError("cannot write '" + args.out + "'");
    mqq::write_csv(out, rows);
    mqq::write_summary(std::cout, summary);
  }
  return 0;
}

// --- bound ----------------------------------------------------------------

int run_bound(const std::string& kind_name, const std::string& n_text) {
  const mqq::RelationKind kind = mqq::parse_relation_kind(kind_name);
  const NRange range = parse_range(n_text);
  std::cout << std::left << std::setw(4) << "n" << std::setw(4) << "r" << std::setw(8) << "m" << std::setw(8) << "m'"
            << std::setw(6) << "l" << std::setw(6) << "l'" << std::setw(16) << "radicand" << std::setw(14)
            << "exhaustive" << std::setw(14) << "closed_form"
            << "match\n";
  for (int n = range.lo; n <= range.hi; ++n) {
    if (kind == mqq::RelationKind::kEulerianEven && n % 2 != 0) continue;
    const int r = mqq::relation_rank(kind, n);
    const double closed = mqq::theoretical_bound(kind, n);
    std::ostringstream line;
    line << std::left << std::fixed << std::setprecision(6) << std::setw(4) << n << std::setw(4) << r;
    if (n <= mqq::kMaxRelationGround) {
      const mqq::AdversaryParams p = mqq::relation_params(mqq::build_relation(kind, n, r));
      const bool match = std::abs(p.bound - closed) <= 1e-9 * closed;
      line << std::setw(8) << p.m << std::setw(8) << p.m_prime << std::setw(6) << p.l << std::setw(6) << p.l_prime
           << std::setw(16) << p.radicand() << std::setw(14) << p.bound << std::setw(14) << closed
           << (match ? "true" : "false");
    } else {
      line << std::setw(8) << "-" << std::setw(8) << "-" << std::setw(6) << "-" << std::setw(6) << "-" << std::setw(16)
           << "-" << std::setw(14) << "-" << std::setw(14) << closed << "-";
    }
    std::cout << line.str() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum query algorithms for matroid properties, simulated"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a matroid file");
  gen_cmd->add_option("--kind", gen.kind, "Matroid kind")->required();
  gen_cmd->add_option("--n", gen.n, "Ground size");
  gen_cmd->add_option("--r", gen.r, "Rank parameter");
  auto* a_opt = gen_cmd->add_option("--A", gen.elements, "Excluded set, comma-separated elements");
  gen_cmd->add_option("--payload", gen.payload, "0/1 payload for basisFamily/subsetFamily");
  gen_cmd->add_option("--from", gen.from, "Materialize an existing matroid file into --kind");
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default: stdout)");

  RunArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide a matroid property");
  check_cmd->add_option("file", check.file)->required();
  check_cmd->add_option("property", check.property, "uniform|paving|trivial|loopless|eulerian|axioms")->required();
  check_cmd->add_option("--mode", check.mode, "quantum|bruteforce");
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--max-repeat", check.max_repeat);

  RunArgs girth;
  auto* girth_cmd = app.add_subcommand("girth", "Compute the girth");
  girth_cmd->add_option("file", girth.file)->required();
  girth_cmd->add_option("--mode", girth.mode, "quantum|bruteforce");
  girth_cmd->add_option("--seed", girth.seed);
  girth_cmd->add_option("--max-repeat", girth.max_repeat);

  std::string count_file;
  std::string count_what;
  auto* count_cmd = app.add_subcommand("count", "Count circuits, bases, flats or hyperplanes");
  count_cmd->add_option("file", count_file)->required();
  count_cmd->add_option("what", count_what, "circuits|bases|flats|hyperplanes")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark query counts, CSV output");
  bench_cmd->add_option("family", bench.family, "uniformDecision|girth|pavingDecision|trivial|loopless")->required();
  bench_cmd->add_option("--n", bench.n, "N or LO..HI");
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("-o,--out", bench.out, "CSV path (default: stdout, summary to stderr)");
  bench_cmd->add_option("--max-repeat", bench.max_repeat);
  bench_cmd->add_option("--max-n", bench.max_n, "Refuse ground sizes above this");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (default: MATROID_QQ_THREADS or core count)");
  bench_cmd->add_flag("--wall-time", bench.wall_time, "Record wall time per trial (output no longer replayable)");

  std::string bound_kind;
  std::string bound_n = "4";
  auto* bound_cmd = app.add_subcommand("bound", "Adversary lower-bound table");
  bound_cmd->add_option("kind", bound_kind, "uniformVsDeleted1|eulerianEven|pavingVsCounter")->required();
  bound_cmd->add_option("--n", bound_n, "N or LO..HI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    gen.has_elements = a_opt->count() > 0;
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) return run_check(check);
    if (*girth_cmd) return run_girth(girth);
    if (*count_cmd) return run_count(count_file, count_what);
    if (*bench_cmd) return run_bench(bench);
    if (*bound_cmd) return run_bound(bound_kind, bound_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
