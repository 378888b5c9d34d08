#include "matroidqq/algorithms.hpp"

#include "matroidqq/errors.hpp"

namespace mqq {

namespace {

void check_config(const AmplificationConfig& cfg) {
  if (cfg.max_repeat < 1) throw ParameterError("max_repeat must be >= 1");
}

// Up to max_repeat Grover searches over one space; the first verified hit wins.
std::optional<SubsetMask> amplified_search(const SearchSpace& space, CountingOracle& oracle,
                                           const AmplificationConfig& cfg, Rng& rng) {
  const GroverSimulator simulator = GroverSimulator::prepare(space, oracle.inner());
  for (int round = 0; round < cfg.max_repeat; ++round) {
    const GroverOutcome outcome = grover_search(space, simulator, oracle, rng);
    if (outcome.found) return space.element(*outcome.found);
  }
  return std::nullopt;
}

DecisionResult decide_by_search(CountingOracle& oracle, const SearchSpace& space, const AmplificationConfig& cfg,
                                Rng& rng, QueryReport start) {
  DecisionResult result;
  result.witness = amplified_search(space, oracle, cfg, rng);
  result.answer = result.witness ? 0 : 1;
  result.report = oracle.report() - start;
  return result;
}

DecisionResult decide_singletons(CountingOracle& oracle, Target target, const AmplificationConfig& cfg, Rng& rng) {
  check_config(cfg);
  if (oracle.ground_size() < 1) throw ParameterError("singleton search needs n >= 1");
  const QueryReport start = oracle.report();
  return decide_by_search(oracle, SearchSpace{oracle.ground_size(), 1, target}, cfg, rng, start);
}

}  // namespace

int greedy_rank(CountingOracle& oracle) {
  SubsetMask kept;
  for (int e = 0; e < oracle.ground_size(); ++e) {
    if (oracle.query_classical(kept.with(e))) kept = kept.with(e);
  }
  return kept.size();
}

DecisionResult decide_uniform(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  check_config(cfg);
  const QueryReport start = oracle.report();
  const int r = greedy_rank(oracle);
  return decide_by_search(oracle, SearchSpace{oracle.ground_size(), r, Target::kDependent}, cfg, rng, start);
}

DecisionResult decide_paving(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  check_config(cfg);
  const QueryReport start = oracle.report();
  const int r = greedy_rank(oracle);
  if (r <= 1) {
    // Every circuit has at least one element, so |C| >= r holds vacuously.
    return DecisionResult{1, oracle.report() - start, std::nullopt};
  }
  return decide_by_search(oracle, SearchSpace{oracle.ground_size(), r - 1, Target::kDependent}, cfg, rng, start);
}

DecisionResult decide_trivial(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  return decide_singletons(oracle, Target::kIndependent, cfg, rng);
}

DecisionResult decide_loopless(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  return decide_singletons(oracle, Target::kDependent, cfg, rng);
}

GirthResult compute_girth(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  check_config(cfg);
  const QueryReport start = oracle.report();
  const int n = oracle.ground_size();
  if (oracle.query_classical(SubsetMask::full(n))) return GirthResult{GirthValue::infinity(), oracle.report() - start};

  const int r = greedy_rank(oracle);
  // V is dependent, so some (r+1)-set is dependent and hi = r+1 always
  // satisfies the probe; the loop keeps lo <= girth <= hi.
  int lo = 1;
  int hi = r + 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (amplified_search(SearchSpace{n, mid, Target::kDependent}, oracle, cfg, rng)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return GirthResult{GirthValue{lo}, oracle.report() - start};
}

DecisionResult decide_uniform_classical(CountingOracle& oracle) {
  const QueryReport start = oracle.report();
  const int n = oracle.ground_size();
  const int r = greedy_rank(oracle);
  const std::uint64_t count = binomial(n, r);
  SubsetMask s = SubsetMask::full(r);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!oracle.query_classical(s)) return DecisionResult{0, oracle.report() - start, s};
    if (i + 1 < count) s = next_colex(s);
  }
  return DecisionResult{1, oracle.report() - start, std::nullopt};
}

DecisionResult decide_uniform(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  CountingOracle counter(oracle);
  return decide_uniform(counter, cfg, rng);
}

DecisionResult decide_paving(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  CountingOracle counter(oracle);
  return decide_paving(counter, cfg, rng);
}

DecisionResult decide_trivial(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  CountingOracle counter(oracle);
  return decide_trivial(counter, cfg, rng);
}

DecisionResult decide_loopless(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  CountingOracle counter(oracle);
  return decide_loopless(counter, cfg, rng);
}

GirthResult compute_girth(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng) {
  CountingOracle counter(oracle);
  return compute_girth(counter, cfg, rng);
}

}  // namespace mqq
