#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace mqq {

// Widest ground set a SubsetMask can address. Matroid specs are further
// limited to kMaxSpecGround; only oracle-level algorithms that never
// enumerate subsets (trivial/loopless) go beyond that.
inline constexpr int kMaxGround = 64;
inline constexpr int kMaxSpecGround = 24;

// A subset of the ground set {0, ..., n-1}; element i is bit i.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> elements);

  static constexpr SubsetMask empty() { return SubsetMask{}; }
  static constexpr SubsetMask singleton(int e) { return SubsetMask{std::uint64_t{1} << e}; }
  static constexpr SubsetMask full(int n) {
    return SubsetMask{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  // True when no bit at position >= n is set.
  constexpr bool fits(int n) const { return is_subset_of(full(n)); }

  constexpr SubsetMask with(int e) const { return SubsetMask{bits_ | (std::uint64_t{1} << e)}; }
  constexpr SubsetMask without(int e) const { return SubsetMask{bits_ & ~(std::uint64_t{1} << e)}; }
  constexpr SubsetMask complement(int n) const { return SubsetMask{~bits_ & full(n).bits_}; }

  // Smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits_ | b.bits_}; }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits_ & b.bits_}; }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Iterates the elements of a mask in increasing order.
template <class F>
constexpr void for_each_element(SubsetMask s, F&& f) {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) f(std::countr_zero(b));
}

// "0,1,4"; the empty set formats as "".
std::string format_elements(SubsetMask s);
// Inverse of format_elements. Throws ParseError on junk or elements >= n.
SubsetMask parse_elements(std::string_view text, int n);

// Binomial coefficient C(n, k); 0 when k < 0 or k > n. Exact for n <= 64.
std::uint64_t binomial(int n, int k);

// Colex rank of an r-subset in the combinatorial number system:
// {c_1 < ... < c_r} maps to sum_i C(c_i, i).
std::uint64_t colex_rank(SubsetMask s, int r);
// Inverse of colex_rank over r-subsets of an n-set.
SubsetMask colex_unrank(std::uint64_t index, int n, int r);

// Next r-subset in colex order (Gosper's hack). Call only while s is not
// the last r-subset of the ground set.
constexpr SubsetMask next_colex(SubsetMask s) {
  const std::uint64_t x = s.bits();
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return SubsetMask{(((r ^ x) >> 2) / c) | r};
}

}  // namespace mqq
