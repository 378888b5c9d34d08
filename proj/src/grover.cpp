#include "matroidqq/grover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matroidqq/errors.hpp"

namespace mqq {

double grover_success_probability(std::uint64_t size, std::uint64_t marked, std::int64_t iterations) {
  if (size == 0 || marked == 0) return 0.0;
  if (marked >= size) return 1.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(size)));
  const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
  return s * s;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : r + 1;
}

std::uint64_t grover_exact_sample(std::uint64_t size, const std::function<bool(std::uint64_t)>& is_marked,
                                  std::int64_t iterations, Rng& rng) {
  if (size == 0) throw ParameterError("grover_exact_sample: empty search space");
  if (size > kMaxDenseSearch) {
    throw CapacityError("grover_exact_sample: " + std::to_string(size) + " indices exceeds dense limit");
  }
  std::vector<char> marked(size);
  for (std::uint64_t i = 0; i < size; ++i) marked[i] = is_marked(i) ? 1 : 0;

  std::vector<double> amplitude(size, 1.0 / std::sqrt(static_cast<double>(size)));
  for (std::int64_t step = 0; step < iterations; ++step) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < size; ++i) {
      if (marked[i]) amplitude[i] = -amplitude[i];
      sum += amplitude[i];
    }
    // Inversion about the mean.
    const double twice_mean = 2.0 * sum / static_cast<double>(size);
    for (double& a : amplitude) a = twice_mean - a;
  }

  double total = 0.0;
  for (double a : amplitude) total += a * a;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::uint64_t i = 0; i < size; ++i) {
    acc += amplitude[i] * amplitude[i];
    if (u < acc) return i;
  }
  return size - 1;
}

GroverSimulator::GroverSimulator(std::uint64_t size, std::vector<std::uint64_t> marked)
    : size_(size), marked_(std::move(marked)) {
  if (size_ == 0) throw ParameterError("GroverSimulator: empty search space");
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (!marked_.empty() && marked_.back() >= size_) throw ParameterError("GroverSimulator: marked index out of range");
}

GroverSimulator GroverSimulator::prepare(const SearchSpace& space, const IndependenceOracle& oracle) {
  const std::uint64_t size = space.size();
  if (size == 0) throw ParameterError("search space of " + std::to_string(space.k) + "-subsets is empty");
  std::vector<std::uint64_t> marked;
  SubsetMask s = SubsetMask::full(space.k);
  for (std::uint64_t i = 0; i < size; ++i) {
    if (space.is_marked(oracle(s))) marked.push_back(i);
    if (i + 1 < size) s = next_colex(s);
  }
  return GroverSimulator(size, std::move(marked));
}

double GroverSimulator::marked_probability(std::int64_t iterations) const {
  const auto k = static_cast<double>(marked_.size());
  const auto n = static_cast<double>(size_);
  if (marked_.empty()) return 0.0;
  if (marked_.size() == size_) return 1.0;
  double marked_amp = 1.0 / std::sqrt(n);
  double unmarked_amp = marked_amp;
  for (std::int64_t step = 0; step < iterations; ++step) {
    marked_amp = -marked_amp;
    const double twice_mean = 2.0 * (k * marked_amp + (n - k) * unmarked_amp) / n;
    marked_amp = twice_mean - marked_amp;
    unmarked_amp = twice_mean - unmarked_amp;
  }
  return std::clamp(k * marked_amp * marked_amp, 0.0, 1.0);
}

std::uint64_t GroverSimulator::sample(std::int64_t iterations, Rng& rng) const {
  const double p = marked_probability(iterations);
  const double u = rng.uniform();
  if (!marked_.empty() && u < p) return marked_[rng.below(marked_.size())];
  // The t-th unmarked index: skip over the sorted marked indices at or below it.
  std::uint64_t index = rng.below(size_ - marked_.size());
  for (std::uint64_t m : marked_) {
    if (m > index) break;
    ++index;
  }
  return index;
}

GroverOutcome grover_search(const SearchSpace& space, const GroverSimulator& simulator, CountingOracle& oracle,
                            Rng& rng) {
  GroverOutcome out;
  const std::uint64_t size = simulator.size();
  const std::int64_t budget = grover_budget(size);
  const double max_m = std::sqrt(static_cast<double>(size));
  double m = 1.0;
  std::int64_t attempts = 0;
  while (true) {
    const auto choices = static_cast<std::uint64_t>(std::ceil(m));
    const std::int64_t iterations =
        std::min(static_cast<std::int64_t>(rng.below(choices)), budget - out.quantum_queries);
    const std::uint64_t candidate = simulator.sample(iterations, rng);
    oracle.charge_quantum(iterations);
    out.quantum_queries += iterations;
    ++attempts;
    ++out.classical_verifications;
    if (space.is_marked(oracle.query_classical(space.element(candidate)))) {
      out.found = candidate;
      return out;
    }
    if (out.quantum_queries >= budget || attempts >= budget) return out;
    m = std::min(m * 6.0 / 5.0, max_m);
  }
}

GroverOutcome grover_search(const SearchSpace& space, CountingOracle& oracle, Rng& rng) {
  return grover_search(space, GroverSimulator::prepare(space, oracle.inner()), oracle, rng);
}

}  // namespace mqq
