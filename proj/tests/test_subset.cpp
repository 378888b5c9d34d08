#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "matroidqq/errors.hpp"
#include "matroidqq/subset.hpp"

using mqq::SubsetMask;

namespace {

// Colex order on r-subsets is numeric order on their bitmasks, so sorting
// the masks gives the reference ranking independent of the number system.
std::vector<SubsetMask> colex_listing(int n, int r) {
  std::vector<SubsetMask> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (SubsetMask{m}.size() == r) out.push_back(SubsetMask{m});
  }
  return out;
}

}  // namespace

TEST_CASE("colex rank of small subsets") {
  CHECK(mqq::colex_rank(SubsetMask::of({0, 1}), 2) == 0);
  CHECK(mqq::colex_rank(SubsetMask::of({1, 2}), 2) == 2);
  CHECK(mqq::colex_rank(SubsetMask{}, 0) == 0);
  CHECK_THROWS_AS(mqq::colex_rank(SubsetMask::of({0, 1, 2}), 2), mqq::ParameterError);
  CHECK_THROWS_AS(mqq::colex_unrank(10, 5, 2), mqq::ParameterError);
}

TEST_CASE("colex rank matches the sorted listing, n <= 20, r <= 4") {
  for (int n = 0; n <= 20; ++n) {
    for (int r = 0; r <= std::min(n, 4); ++r) {
      const auto listing = colex_listing(n, r);
      REQUIRE(listing.size() == mqq::binomial(n, r));
      for (std::uint64_t i = 0; i < listing.size(); ++i) {
        REQUIRE(mqq::colex_rank(listing[i], r) == i);
        REQUIRE(mqq::colex_unrank(i, n, r) == listing[i]);
      }
    }
  }
}

TEST_CASE("colex round trip, sampled large subsets") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 64);
    const int r = static_cast<int>(gen() % (n + 1));
    const std::uint64_t count = mqq::binomial(n, r);
    const std::uint64_t index = gen() % count;
    const SubsetMask s = mqq::colex_unrank(index, n, r);
    CHECK(s.size() == r);
    CHECK(s.fits(n));
    CHECK(mqq::colex_rank(s, r) == index);
    if (index + 1 < count) {
      CHECK(mqq::next_colex(s) == mqq::colex_unrank(index + 1, n, r));
      CHECK(mqq::next_colex(s) > s);
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(mqq::binomial(4, 2) == 6);
  CHECK(mqq::binomial(16, 8) == 12870);
  CHECK(mqq::binomial(24, 12) == 2704156);
  CHECK(mqq::binomial(64, 32) == 1832624140942590534ULL);
  CHECK(mqq::binomial(5, 6) == 0);
  CHECK(mqq::binomial(5, -1) == 0);
}

TEST_CASE("element lists") {
  CHECK(mqq::format_elements(SubsetMask::of({4, 0, 1})) == "0,1,4");
  CHECK(mqq::format_elements(SubsetMask{}).empty());
  CHECK(mqq::parse_elements("0,1,4", 5) == SubsetMask::of({0, 1, 4}));
  CHECK(mqq::parse_elements("", 5) == SubsetMask{});
  CHECK_THROWS_AS(mqq::parse_elements("0,5", 5), mqq::ParseError);
  CHECK_THROWS_AS(mqq::parse_elements("0,,1", 5), mqq::ParseError);
  CHECK_THROWS_AS(mqq::parse_elements("1,1", 5), mqq::ParseError);
  CHECK_THROWS_AS(mqq::parse_elements("x", 5), mqq::ParseError);
}

TEST_CASE("mask helpers") {
  const SubsetMask s = SubsetMask::of({1, 3});
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.complement(4) == SubsetMask::of({0, 2}));
  CHECK(s.is_subset_of(SubsetMask::full(4)));
  CHECK_FALSE(SubsetMask::of({5}).fits(5));
  CHECK(SubsetMask::full(64).size() == 64);
  CHECK(s.lowest() == 1);
}
