#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroidqq/subset.hpp"

namespace mqq {

enum class MatroidKind { kUniform, kBasisFamily, kSubsetFamily, kDeletedBasis1, kDeletedBasis2, kPavingCounter };

enum class DeletedVariant { kOne, kTwo };

std::string_view to_string(MatroidKind kind);
MatroidKind parse_kind(std::string_view name);

// Payload bit strings. basisFamily bit i is the r-set with colex index i;
// subsetFamily bit i is the subset with mask i.
using BitString = std::vector<bool>;

std::string format_bits(const BitString& bits);
BitString parse_bits(std::string_view text);

// Serializable, immutable description of a matroid on {0, ..., n-1}.
// Build through the make_* factories, which enforce every invariant.
class MatroidSpec {
 public:
  MatroidKind kind() const { return kind_; }
  int ground_size() const { return n_; }
  // Rank parameter; absent only for subsetFamily.
  std::optional<int> rank() const { return rank_; }
  // Excluded pattern A (deletedBasis1/2, pavingCounter); empty otherwise.
  SubsetMask excluded() const { return excluded_; }
  const BitString& payload() const { return payload_; }

  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;

 private:
  friend MatroidSpec make_uniform(int, int);
  friend MatroidSpec make_basis_family(int, int, BitString);
  friend MatroidSpec make_subset_family(int, BitString);
  friend MatroidSpec make_deleted_basis(int, int, SubsetMask, DeletedVariant);
  friend MatroidSpec make_paving_counterexample(int, int, SubsetMask);

  MatroidKind kind_ = MatroidKind::kUniform;
  int n_ = 0;
  std::optional<int> rank_;
  SubsetMask excluded_;
  BitString payload_;
};

MatroidSpec make_uniform(int n, int r);
// payload.size() must equal C(n, r).
MatroidSpec make_basis_family(int n, int r, BitString payload);
// payload.size() must equal 2^n. No axiom check; see verify_axioms.
MatroidSpec make_subset_family(int n, BitString payload);
// All r-sets are bases except A (variant 1), or except A and V-A (variant 2,
// which needs n even and r = n/2).
MatroidSpec make_deleted_basis(int n, int r, SubsetMask excluded, DeletedVariant variant);
// Bases are the r-sets that do not contain A, |A| = r-1.
MatroidSpec make_paving_counterexample(int n, int r, SubsetMask excluded);

// Pure membership test S -> {independent, dependent} over a fixed ground set.
// Copies share the underlying state, which is immutable.
class IndependenceOracle {
 public:
  using Fn = std::function<bool(SubsetMask)>;

  IndependenceOracle(int n, Fn fn);

  int ground_size() const { return n_; }
  SubsetMask ground() const { return SubsetMask::full(n_); }
  bool operator()(SubsetMask s) const { return fn_(s); }

 private:
  int n_;
  Fn fn_;
};

// Basis-family kinds answer "independent" iff S lies inside some base.
IndependenceOracle oracle_of(const MatroidSpec& spec);

// Direct sum of a free matroid on `coloops` and a rank-0 matroid on the
// remaining elements: S is independent iff S is a subset of `coloops`.
// Valid up to kMaxGround elements; used for trivial/loopless workloads.
IndependenceOracle loops_and_coloops(int n, SubsetMask coloops);

inline constexpr int kMaxAxiomGround = 12;

// Exhaustive check of I0 (empty set independent), I1 (hereditary) and
// I2 (exchange). Throws CapacityError above kMaxAxiomGround.
bool verify_axioms(const IndependenceOracle& oracle);
bool verify_axioms(const MatroidSpec& spec);

// Re-encode as an explicit base family; the rank is found greedily.
MatroidSpec materialize_bases(const MatroidSpec& spec);
// Re-encode as the full 2^n independence table.
MatroidSpec materialize_subsets(const MatroidSpec& spec);

// Text file format:
//   matroid n=<int> kind=<kind> [r=<int>] [A=<e,e,...>]
//   <payload as 0/1 string>      (basisFamily/subsetFamily only)
void write_matroid(std::ostream& out, const MatroidSpec& spec);
MatroidSpec read_matroid(std::istream& in);
std::string to_text(const MatroidSpec& spec);
MatroidSpec parse_matroid(std::string_view text);

}  // namespace mqq
