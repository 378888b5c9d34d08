#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matroidqq/oracle.hpp"
#include "matroidqq/random.hpp"

namespace mqq {

// Success probability of measuring a marked index after `iterations` Grover
// iterations from the uniform superposition over `size` indices, `marked`
// of them marked: sin^2((2j+1) asin(sqrt(k/N))).
double grover_success_probability(std::uint64_t size, std::uint64_t marked, std::int64_t iterations);

inline constexpr std::uint64_t kMaxDenseSearch = std::uint64_t{1} << 20;

// Dense simulation: evolves one amplitude per index through `iterations`
// oracle+diffusion steps, then measures. Throws CapacityError above
// kMaxDenseSearch indices.
std::uint64_t grover_exact_sample(std::uint64_t size, const std::function<bool(std::uint64_t)>& is_marked,
                                  std::int64_t iterations, Rng& rng);

// ceil(sqrt(x)) computed exactly.
std::uint64_t ceil_sqrt(std::uint64_t x);

// Iteration budget of one unknown-count search over `size` indices.
inline std::int64_t grover_budget(std::uint64_t size) { return 3 * static_cast<std::int64_t>(ceil_sqrt(size)); }

enum class Target { kIndependent, kDependent };

// The k-subsets of an n-set, indexed by colex rank. An index is marked when
// the oracle's verdict on its subset matches `target`.
struct SearchSpace {
  int n = 0;
  int k = 0;
  Target target = Target::kDependent;

  std::uint64_t size() const { return binomial(n, k); }
  SubsetMask element(std::uint64_t index) const { return colex_unrank(index, n, k); }
  bool is_marked(bool independent) const { return independent == (target == Target::kIndependent); }
};

// Measurement statistics depend only on (N, k, j) and the marked set, so the
// simulator keeps the marked indices plus two amplitudes (marked/unmarked)
// and evolves those. This reproduces the dense distribution exactly at a
// cost independent of N per iteration.
class GroverSimulator {
 public:
  GroverSimulator(std::uint64_t size, std::vector<std::uint64_t> marked);

  // Materializes the marked set with uncounted oracle evaluations.
  static GroverSimulator prepare(const SearchSpace& space, const IndependenceOracle& oracle);

  std::uint64_t size() const { return size_; }
  std::uint64_t marked_count() const { return marked_.size(); }
  const std::vector<std::uint64_t>& marked() const { return marked_; }

  // Marked-hit probability after `iterations`, by iterating the amplitudes.
  double marked_probability(std::int64_t iterations) const;
  std::uint64_t sample(std::int64_t iterations, Rng& rng) const;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> marked_;  // sorted
};

struct GroverOutcome {
  std::optional<std::uint64_t> found;
  std::int64_t quantum_queries = 0;
  std::int64_t classical_verifications = 0;
};

// Bounded-error search with an unknown number of solutions: m = 1; repeat
// { j uniform in [0, m); run j iterations and measure; verify classically;
// m = min(6m/5, sqrt(N)) } until a verified hit, or until 3*ceil(sqrt(N))
// iterations (or as many attempts) are spent. Quantum iterations are charged
// to `oracle` as quantum queries, verifications as classical ones.
GroverOutcome grover_search(const SearchSpace& space, const GroverSimulator& simulator, CountingOracle& oracle,
                            Rng& rng);
GroverOutcome grover_search(const SearchSpace& space, CountingOracle& oracle, Rng& rng);

}  // namespace mqq
