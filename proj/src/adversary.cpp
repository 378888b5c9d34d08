#include "matroidqq/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "matroidqq/errors.hpp"

namespace mqq {

namespace {

constexpr std::string_view kRelationNames[] = {"uniformVsDeleted1", "eulerianEven", "pavingVsCounter"};

std::int64_t count_differences_max(const std::vector<BitString>& from, const std::vector<BitString>& to) {
  std::int64_t best = 0;
  for (const BitString& a : from) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t count = 0;
      for (const BitString& b : to) count += a[i] != b[i] ? 1 : 0;
      best = std::max(best, count);
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(RelationKind kind) { return kRelationNames[static_cast<int>(kind)]; }

RelationKind parse_relation_kind(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kRelationNames)); ++i) {
    if (kRelationNames[i] == name) return static_cast<RelationKind>(i);
  }
  throw ParseError("unknown relation kind '" + std::string(name) + "'");
}

int relation_rank(RelationKind kind, int n) {
  switch (kind) {
    case RelationKind::kUniformVsDeleted1:
    case RelationKind::kEulerianEven:
      return n / 2;
    case RelationKind::kPavingVsCounter:
      return n / 2 + 1;
  }
  return 0;
}

RelationSpec build_relation(RelationKind kind, int n, int r) {
  if (n > kMaxRelationGround) {
    throw CapacityError("build_relation materializes C(n,r)-bit strings only for n <= " +
                        std::to_string(kMaxRelationGround));
  }
  RelationSpec spec{kind, n, r, {}, {}, {}};
  spec.x.push_back(materialize_bases(make_uniform(n, r)).payload());

  std::set<BitString> seen;
  auto add = [&](const MatroidSpec& matroid, SubsetMask a) {
    BitString bits = materialize_bases(matroid).payload();
    if (seen.insert(bits).second) {
      spec.y.push_back(std::move(bits));
      spec.excluded.push_back(a);
    }
  };

  const int pattern = kind == RelationKind::kPavingVsCounter ? r - 1 : r;
  if (pattern < 0 || pattern > n) throw ParameterError("rank out of range for relation");
  const std::uint64_t count = binomial(n, pattern);
  SubsetMask a = SubsetMask::full(pattern);
  for (std::uint64_t i = 0; i < count; ++i) {
    switch (kind) {
      case RelationKind::kUniformVsDeleted1:
        add(make_deleted_basis(n, r, a, DeletedVariant::kOne), a);
        break;
      case RelationKind::kEulerianEven:
        // A and V-A give the same matroid; `seen` keeps the first of each pair.
        add(make_deleted_basis(n, r, a, DeletedVariant::kTwo), a);
        break;
      case RelationKind::kPavingVsCounter:
        add(make_paving_counterexample(n, r, a), a);
        break;
    }
    if (i + 1 < count) a = next_colex(a);
  }
  return spec;
}

std::string AdversaryParams::radicand() const {
  if (radicand_den == 1) return "sqrt(" + std::to_string(radicand_num) + ")";
  return "sqrt(" + std::to_string(radicand_num) + "/" + std::to_string(radicand_den) + ")";
}

AdversaryParams relation_params(const RelationSpec& spec) {
  AdversaryParams p;
  // R = X x Y: every x relates to all of Y and every y to all of X.
  p.m = static_cast<std::int64_t>(spec.y.size());
  p.m_prime = static_cast<std::int64_t>(spec.x.size());
  p.l = count_differences_max(spec.x, spec.y);
  p.l_prime = count_differences_max(spec.y, spec.x);
  if (p.m == 0 || p.m_prime == 0 || p.l == 0 || p.l_prime == 0) {
    throw ParameterError("degenerate relation: every parameter must be positive");
  }
  const std::int64_t num = p.m * p.m_prime;
  const std::int64_t den = p.l * p.l_prime;
  const std::int64_t g = std::gcd(num, den);
  p.radicand_num = num / g;
  p.radicand_den = den / g;
  p.bound = std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  return p;
}

double theoretical_bound(RelationKind kind, int n) {
  if (n < 2) throw ParameterError("theoretical_bound needs n >= 2");
  const auto middle = static_cast<double>(binomial(n, n / 2));
  switch (kind) {
    case RelationKind::kUniformVsDeleted1:
      return std::sqrt(middle);
    case RelationKind::kEulerianEven:
      if (n % 2 != 0) throw ParameterError("eulerianEven needs n even");
      return std::sqrt(middle / 2.0);
    case RelationKind::kPavingVsCounter: {
      const int r = relation_rank(kind, n);
      return std::sqrt(static_cast<double>(binomial(n, r - 1)) / r);
    }
  }
  return 0.0;
}

int max_shared_zeros(const RelationSpec& spec) {
  int best = 0;
  for (std::size_t a = 0; a < spec.y.size(); ++a) {
    for (std::size_t b = a + 1; b < spec.y.size(); ++b) {
      int shared = 0;
      for (std::size_t i = 0; i < spec.y[a].size(); ++i) shared += (!spec.y[a][i] && !spec.y[b][i]) ? 1 : 0;
      best = std::max(best, shared);
    }
  }
  return best;
}

}  // namespace mqq
