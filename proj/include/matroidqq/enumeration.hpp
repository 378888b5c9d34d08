#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidqq/matroid.hpp"

namespace mqq {

// Minimum circuit size, or infinity for a matroid without circuits.
class GirthValue {
 public:
  constexpr GirthValue() = default;  // infinity
  constexpr explicit GirthValue(int size) : size_(size) {}
  static constexpr GirthValue infinity() { return GirthValue{}; }

  constexpr bool is_infinite() const { return !size_.has_value(); }
  constexpr int value() const { return *size_; }

  std::string to_string() const { return size_ ? std::to_string(*size_) : "inf"; }

  friend constexpr bool operator==(const GirthValue&, const GirthValue&) = default;

 private:
  std::optional<int> size_;
};

inline constexpr int kMaxRankGround = 20;
inline constexpr int kMaxEnumerationGround = 16;
inline constexpr int kMaxEulerianGround = 12;

// Rank of S by the greedy scan over its elements. Exact for matroids.
int rank_of(const IndependenceOracle& oracle, SubsetMask s);
// Rank of S as the largest independent subset, by enumeration. Exact for
// any set system; intended for inputs that may fail the axioms.
int rank_of_exhaustive(const IndependenceOracle& oracle, SubsetMask s);

// cl(X) = {x : r(X + x) = r(X)}.
SubsetMask closure(const IndependenceOracle& oracle, SubsetMask x);

// Full 2^n independence table, one query per subset.
std::vector<bool> independence_table(const IndependenceOracle& oracle);

// All results are sorted ascending by mask value.
std::vector<SubsetMask> circuits(const IndependenceOracle& oracle);
std::vector<SubsetMask> bases(const IndependenceOracle& oracle);
std::vector<SubsetMask> flats(const IndependenceOracle& oracle);
std::vector<SubsetMask> hyperplanes(const IndependenceOracle& oracle);

// Size of the largest hyperplane; absent when there is none (rank 0).
std::optional<int> largest_hyperplane_size(const IndependenceOracle& oracle);

GirthValue girth_bruteforce(const IndependenceOracle& oracle);

// Does the ground set split into pairwise disjoint circuits?
bool is_eulerian_bruteforce(const IndependenceOracle& oracle);

// Brute-force classifiers. Each returns a certificate that the property
// fails, or nothing when it holds:
//   uniform  - a dependent r-set
//   paving   - a dependent (r-1)-set (r >= 2)
//   trivial  - an independent singleton
//   loopless - a loop
std::optional<SubsetMask> find_uniform_violation(const IndependenceOracle& oracle);
std::optional<SubsetMask> find_paving_violation(const IndependenceOracle& oracle);
std::optional<SubsetMask> find_trivial_violation(const IndependenceOracle& oracle);
std::optional<SubsetMask> find_loopless_violation(const IndependenceOracle& oracle);

// Paving by definition: every circuit has size >= rank.
bool is_paving_by_circuits(const IndependenceOracle& oracle);

}  // namespace mqq
