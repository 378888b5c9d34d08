#include "matroidqq/enumeration.hpp"

#include <algorithm>
#include <cstdint>

#include "matroidqq/errors.hpp"

namespace mqq {

namespace {

void check_cap(const IndependenceOracle& oracle, int cap, const char* what) {
  if (oracle.ground_size() > cap) {
    throw CapacityError(std::string(what) + " supports n <= " + std::to_string(cap) + ", got " +
                        std::to_string(oracle.ground_size()));
  }
}

// rank[S] for every S, from the independence table.
std::vector<std::uint8_t> rank_table(const std::vector<bool>& independent) {
  std::vector<std::uint8_t> rank(independent.size(), 0);
  for (std::uint64_t m = 0; m < rank.size(); ++m) {
    const SubsetMask s{m};
    if (independent[m]) {
      rank[m] = static_cast<std::uint8_t>(s.size());
      continue;
    }
    std::uint8_t best = 0;
    for_each_element(s, [&](int e) { best = std::max(best, rank[s.without(e).bits()]); });
    rank[m] = best;
  }
  return rank;
}

std::vector<SubsetMask> flats_from(int n, const std::vector<std::uint8_t>& rank) {
  std::vector<SubsetMask> out;
  for (std::uint64_t m = 0; m < rank.size(); ++m) {
    const SubsetMask s{m};
    bool closed = true;
    for (int e = 0; e < n && closed; ++e) {
      if (!s.contains(e) && rank[s.with(e).bits()] == rank[m]) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// Exact cover of `uncovered` by disjoint circuits, branching on the lowest
// uncovered element. `containing[e]` lists circuits whose smallest element is e.
bool cover(SubsetMask uncovered, const std::vector<std::vector<SubsetMask>>& containing) {
  if (uncovered.is_empty()) return true;
  const int e = uncovered.lowest();
  for (SubsetMask c : containing[e]) {
    if (c.is_subset_of(uncovered) && cover(uncovered - c, containing)) return true;
  }
  return false;
}

// First dependent k-set in colex order.
std::optional<SubsetMask> first_dependent(const IndependenceOracle& oracle, int k) {
  const std::uint64_t count = binomial(oracle.ground_size(), k);
  SubsetMask s = SubsetMask::full(k);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!oracle(s)) return s;
    if (i + 1 < count) s = next_colex(s);
  }
  return std::nullopt;
}

}  // namespace

int rank_of(const IndependenceOracle& oracle, SubsetMask s) {
  check_cap(oracle, kMaxRankGround, "rank_of");
  SubsetMask kept;
  for_each_element(s, [&](int e) {
    if (oracle(kept.with(e))) kept = kept.with(e);
  });
  return kept.size();
}

int rank_of_exhaustive(const IndependenceOracle& oracle, SubsetMask s) {
  check_cap(oracle, kMaxRankGround, "rank_of_exhaustive");
  int best = 0;
  // Walk every submask of s.
  for (std::uint64_t sub = s.bits();; sub = (sub - 1) & s.bits()) {
    const SubsetMask t{sub};
    if (t.size() > best && oracle(t)) best = t.size();
    if (sub == 0) break;
  }
  return best;
}

SubsetMask closure(const IndependenceOracle& oracle, SubsetMask x) {
  check_cap(oracle, kMaxRankGround, "closure");
  const int base_rank = rank_of(oracle, x);
  SubsetMask out;
  for (int e = 0; e < oracle.ground_size(); ++e) {
    if (x.contains(e) || rank_of(oracle, x.with(e)) == base_rank) out = out.with(e);
  }
  return out;
}

std::vector<bool> independence_table(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxRankGround, "independence_table");
  std::vector<bool> table(std::size_t{1} << oracle.ground_size());
  for (std::uint64_t m = 0; m < table.size(); ++m) table[m] = oracle(SubsetMask{m});
  return table;
}

std::vector<SubsetMask> circuits(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "circuits");
  const auto independent = independence_table(oracle);
  std::vector<SubsetMask> out;
  for (std::uint64_t m = 0; m < independent.size(); ++m) {
    if (independent[m]) continue;
    const SubsetMask s{m};
    bool minimal = true;
    for_each_element(s, [&](int e) { minimal = minimal && independent[s.without(e).bits()]; });
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<SubsetMask> bases(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "bases");
  const auto independent = independence_table(oracle);
  int rank = 0;
  for (std::uint64_t m = 0; m < independent.size(); ++m) {
    if (independent[m]) rank = std::max(rank, SubsetMask{m}.size());
  }
  std::vector<SubsetMask> out;
  for (std::uint64_t m = 0; m < independent.size(); ++m) {
    if (independent[m] && SubsetMask{m}.size() == rank) out.push_back(SubsetMask{m});
  }
  return out;
}

std::vector<SubsetMask> flats(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "flats");
  const int n = oracle.ground_size();
  return flats_from(n, rank_table(independence_table(oracle)));
}

std::vector<SubsetMask> hyperplanes(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "hyperplanes");
  const int n = oracle.ground_size();
  const auto rank = rank_table(independence_table(oracle));
  const int full_rank = rank.back();
  std::vector<SubsetMask> out;
  for (SubsetMask f : flats_from(n, rank)) {
    if (rank[f.bits()] == full_rank - 1) out.push_back(f);
  }
  return out;
}

std::optional<int> largest_hyperplane_size(const IndependenceOracle& oracle) {
  std::optional<int> best;
  for (SubsetMask h : hyperplanes(oracle)) best = std::max(best.value_or(0), h.size());
  return best;
}

GirthValue girth_bruteforce(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "girth_bruteforce");
  GirthValue girth;
  for (SubsetMask c : circuits(oracle)) {
    if (girth.is_infinite() || c.size() < girth.value()) girth = GirthValue{c.size()};
  }
  return girth;
}

bool is_eulerian_bruteforce(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEulerianGround, "is_eulerian_bruteforce");
  const int n = oracle.ground_size();
  std::vector<std::vector<SubsetMask>> containing(n);
  for (SubsetMask c : circuits(oracle)) containing[c.lowest()].push_back(c);
  return cover(oracle.ground(), containing);
}

std::optional<SubsetMask> find_uniform_violation(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "find_uniform_violation");
  // Uniform of rank r iff every r-set is independent (smaller sets follow by I1).
  return first_dependent(oracle, rank_of(oracle, oracle.ground()));
}

std::optional<SubsetMask> find_paving_violation(const IndependenceOracle& oracle) {
  check_cap(oracle, kMaxEnumerationGround, "find_paving_violation");
  const int r = rank_of(oracle, oracle.ground());
  if (r < 2) return std::nullopt;
  return first_dependent(oracle, r - 1);
}

std::optional<SubsetMask> find_trivial_violation(const IndependenceOracle& oracle) {
  for (int e = 0; e < oracle.ground_size(); ++e) {
    if (oracle(SubsetMask::singleton(e))) return SubsetMask::singleton(e);
  }
  return std::nullopt;
}

std::optional<SubsetMask> find_loopless_violation(const IndependenceOracle& oracle) {
  for (int e = 0; e < oracle.ground_size(); ++e) {
    if (!oracle(SubsetMask::singleton(e))) return SubsetMask::singleton(e);
  }
  return std::nullopt;
}

bool is_paving_by_circuits(const IndependenceOracle& oracle) {
  const int r = rank_of(oracle, oracle.ground());
  const auto all = circuits(oracle);
  return std::all_of(all.begin(), all.end(), [r](SubsetMask c) { return c.size() >= r; });
}

}  // namespace mqq
