#pragma once

#include <string>
#include <vector>

#include "matroidqq/matroid.hpp"

namespace mqq::testing {

struct Fixture {
  std::string name;
  IndependenceOracle oracle;
};

inline Fixture spec_fixture(const MatroidSpec& spec) {
  return Fixture{to_text(spec).substr(0, to_text(spec).find('\n')), oracle_of(spec)};
}

// U_{2,3} on {0,1,2} direct sum U_{1,2} on {3,4}: circuits {0,1,2} and {3,4}.
inline MatroidSpec two_block_sum() {
  BitString payload(32);
  for (std::uint64_t m = 0; m < 32; ++m) {
    const SubsetMask s{m};
    payload[m] = (s & SubsetMask::of({0, 1, 2})).size() <= 2 && (s & SubsetMask::of({3, 4})).size() <= 1;
  }
  return make_subset_family(5, payload);
}

// Every construction kind at n <= 10, plus direct sums of loops and coloops.
inline std::vector<Fixture> fixture_corpus() {
  using S = SubsetMask;
  std::vector<Fixture> out;
  for (auto [r, n] : {std::pair{0, 1}, {1, 1}, {0, 4}, {2, 4}, {4, 4}, {2, 5}, {3, 6}, {3, 7}, {5, 10}}) {
    out.push_back(spec_fixture(make_uniform(n, r)));
  }
  out.push_back(spec_fixture(make_deleted_basis(4, 2, S::of({0, 1}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(5, 2, S::of({0, 1}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(6, 3, S::of({0, 1, 2}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(7, 3, S::of({1, 3, 5}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(8, 4, S::of({0, 2, 4, 6}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(10, 5, S::of({0, 1, 2, 3, 4}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(10, 3, S::of({7, 8, 9}), DeletedVariant::kOne)));
  out.push_back(spec_fixture(make_deleted_basis(4, 2, S::of({0, 1}), DeletedVariant::kTwo)));
  out.push_back(spec_fixture(make_deleted_basis(6, 3, S::of({0, 2, 4}), DeletedVariant::kTwo)));
  out.push_back(spec_fixture(make_deleted_basis(8, 4, S::of({1, 2, 3, 4}), DeletedVariant::kTwo)));
  out.push_back(spec_fixture(make_deleted_basis(10, 5, S::of({0, 3, 5, 7, 9}), DeletedVariant::kTwo)));
  out.push_back(spec_fixture(make_paving_counterexample(4, 2, S::of({0}))));
  out.push_back(spec_fixture(make_paving_counterexample(5, 3, S::of({0, 1}))));
  out.push_back(spec_fixture(make_paving_counterexample(6, 3, S::of({2, 5}))));
  out.push_back(spec_fixture(make_paving_counterexample(8, 5, S::of({0, 1, 2, 3}))));
  out.push_back(spec_fixture(make_paving_counterexample(10, 6, S::of({1, 3, 5, 7, 9}))));
  out.push_back(spec_fixture(make_paving_counterexample(10, 3, S::of({4, 9}))));
  out.push_back(spec_fixture(two_block_sum()));
  out.push_back(Fixture{"loops+coloops n=6 coloops=0,2,3", loops_and_coloops(6, S::of({0, 2, 3}))});
  out.push_back(Fixture{"loops+coloops n=5 coloops=", loops_and_coloops(5, S{})});
  out.push_back(Fixture{"loops+coloops n=9 coloops=8", loops_and_coloops(9, S::of({8}))});
  out.push_back(Fixture{"loops+coloops n=1 coloops=0", loops_and_coloops(1, S::of({0}))});
  return out;
}

}  // namespace mqq::testing
