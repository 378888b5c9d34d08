#include "matroidqq/subset.hpp"

#include <charconv>

#include "matroidqq/errors.hpp"

namespace mqq {

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  SubsetMask s;
  for (int e : elements) s = s.with(e);
  return s;
}

std::string format_elements(SubsetMask s) {
  std::string out;
  for_each_element(s, [&](int e) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  });
  return out;
}

SubsetMask parse_elements(std::string_view text, int n) {
  SubsetMask s;
  if (text.empty()) return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int e = -1;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), e);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError("bad element '" + std::string(token) + "' in list '" + std::string(text) + "'");
    }
    if (e < 0 || e >= n) {
      throw ParseError("element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
    }
    if (s.contains(e)) throw ParseError("duplicate element " + std::to_string(e));
    s = s.with(e);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each intermediate is itself a binomial so the
  // division is exact. unsigned __int128 keeps n <= 64 overflow-free.
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(SubsetMask s, int r) {
  if (s.size() != r) {
    throw ParameterError("colex_rank: subset has " + std::to_string(s.size()) + " elements, expected " +
                         std::to_string(r));
  }
  std::uint64_t index = 0;
  int i = 1;
  for_each_element(s, [&](int c) { index += binomial(c, i++); });
  return index;
}

SubsetMask colex_unrank(std::uint64_t index, int n, int r) {
  if (r < 0 || r > n || index >= binomial(n, r)) {
    throw ParameterError("colex_unrank: index " + std::to_string(index) + " out of range for C(" +
                         std::to_string(n) + "," + std::to_string(r) + ")");
  }
  SubsetMask s;
  int upper = n;
  // Greedy from the largest element down: c_i is the largest c with C(c, i) <= index.
  for (int i = r; i >= 1; --i) {
    int lo = i - 1;
    int hi = upper - 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i) <= index) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    s = s.with(lo);
    index -= binomial(lo, i);
    upper = lo;
  }
  return s;
}

}  // namespace mqq
