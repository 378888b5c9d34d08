#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matroidqq/matroid.hpp"

namespace mqq {

// Hard-input relations for the adversary lower bounds. X always holds the
// single encoding of U_{r,n}; Y holds one near-uniform matroid per
// admissible excluded set A. Strings are rank-r base indicators in colex
// order. R is all of X x Y.
enum class RelationKind {
  kUniformVsDeleted1,  // Y: all r-sets but A are bases
  kEulerianEven,       // Y: all r-sets but A and V-A (n even, r = n/2)
  kPavingVsCounter,    // Y: the r-sets not containing A, |A| = r-1
};

std::string_view to_string(RelationKind kind);
RelationKind parse_relation_kind(std::string_view name);

struct RelationSpec {
  RelationKind kind;
  int n = 0;
  int r = 0;
  std::vector<BitString> x;
  std::vector<BitString> y;
  std::vector<SubsetMask> excluded;  // the A behind each y, parallel to y

  MatroidSpec decode(const BitString& bits) const { return make_basis_family(n, r, bits); }
};

inline constexpr int kMaxRelationGround = 8;

// Throws CapacityError for n > kMaxRelationGround and ParameterError when
// the construction is not a matroid family for (n, r).
RelationSpec build_relation(RelationKind kind, int n, int r);

// The rank each lower-bound proof fixes for a given n.
int relation_rank(RelationKind kind, int n);

struct AdversaryParams {
  std::int64_t m = 0;
  std::int64_t m_prime = 0;
  std::int64_t l = 0;
  std::int64_t l_prime = 0;
  // bound = sqrt(radicand_num / radicand_den), fraction in lowest terms.
  std::int64_t radicand_num = 0;
  std::int64_t radicand_den = 1;
  double bound = 0.0;

  std::string radicand() const;  // "sqrt(10/3)" or "sqrt(6)"
};

// Exact min/max counts over the materialized relation.
AdversaryParams relation_params(const RelationSpec& spec);

// Closed-form bound at the proof's rank: sqrt(C(n, n/2)), sqrt(C(n, n/2)/2)
// or sqrt(C(n, r-1)/r) with r - 1 = floor(n/2).
double theoretical_bound(RelationKind kind, int n);

// Largest number of positions where two distinct y strings are both 0.
int max_shared_zeros(const RelationSpec& spec);

}  // namespace mqq
