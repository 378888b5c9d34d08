#pragma once

#include <optional>

#include "matroidqq/enumeration.hpp"
#include "matroidqq/grover.hpp"
#include "matroidqq/oracle.hpp"
#include "matroidqq/random.hpp"

namespace mqq {

struct AmplificationConfig {
  // Grover rounds per decision; a "holds" answer on a violating input
  // survives all rounds with probability <= 2^-max_repeat.
  int max_repeat = 5;
};

// answer = 1: the property holds. answer = 0 comes with a witness that was
// verified by a classical query, so it is never wrong.
struct DecisionResult {
  int answer = 1;
  QueryReport report;
  std::optional<SubsetMask> witness;
};

struct GirthResult {
  GirthValue girth;
  QueryReport report;
};

// Greedy rank: one classical query per element.
int greedy_rank(CountingOracle& oracle);

// Uniform iff no r-set is dependent.
DecisionResult decide_uniform(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
// Paving iff (for r >= 2) no (r-1)-set is dependent; ranks 0 and 1 are paving.
DecisionResult decide_paving(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
// Trivial iff every singleton is dependent.
DecisionResult decide_trivial(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
// Loopless iff every singleton is independent.
DecisionResult decide_loopless(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng);

// Least k admitting a dependent k-set, found by binary search over [1, r+1]
// with amplified Grover probes. Never underestimates: a probe only moves
// the upper end on a verified dependent set.
GirthResult compute_girth(CountingOracle& oracle, const AmplificationConfig& cfg, Rng& rng);

// Deterministic classical baseline for the uniform decision: greedy rank,
// then query r-sets in colex order until one is dependent.
DecisionResult decide_uniform_classical(CountingOracle& oracle);

// Convenience overloads on a fresh counter.
DecisionResult decide_uniform(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
DecisionResult decide_paving(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
DecisionResult decide_trivial(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
DecisionResult decide_loopless(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng);
GirthResult compute_girth(const IndependenceOracle& oracle, const AmplificationConfig& cfg, Rng& rng);

}  // namespace mqq
