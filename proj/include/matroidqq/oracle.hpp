#pragma once

#include <cstdint>

#include "matroidqq/matroid.hpp"

namespace mqq {

struct QueryReport {
  std::int64_t classical = 0;
  std::int64_t quantum = 0;

  std::int64_t total() const { return classical + quantum; }

  friend QueryReport operator-(QueryReport a, QueryReport b) {
    return {a.classical - b.classical, a.quantum - b.quantum};
  }
  friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

// Independence oracle with query accounting. Classical queries are counted
// as they are answered; quantum queries (one per Grover iteration, i.e. per
// phase-oracle application) are charged explicitly by the search simulator.
//
// Single-threaded: parallel work gives each thread its own CountingOracle.
class CountingOracle {
 public:
  explicit CountingOracle(IndependenceOracle inner) : inner_(std::move(inner)) {}

  bool query_classical(SubsetMask s) {
    ++classical_;
    return inner_(s);
  }

  // Throws ParameterError on negative amounts.
  void charge_quantum(std::int64_t amount);

  QueryReport report() const { return {classical_, quantum_}; }
  void reset() { classical_ = quantum_ = 0; }

  int ground_size() const { return inner_.ground_size(); }
  // Uncounted access, for the simulator's amplitude evolution only.
  const IndependenceOracle& inner() const { return inner_; }

 private:
  IndependenceOracle inner_;
  std::int64_t classical_ = 0;
  std::int64_t quantum_ = 0;
};

}  // namespace mqq
