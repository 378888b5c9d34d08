#include "matroidqq/matroid.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "matroidqq/errors.hpp"

namespace mqq {

namespace {

constexpr std::string_view kKindNames[] = {"uniform",       "basisFamily",   "subsetFamily",
                                           "deletedBasis1", "deletedBasis2", "pavingCounter"};

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

void check_ground(int n) {
  require(n >= 0 && n <= kMaxSpecGround,
          "ground size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxSpecGround) + "]");
}

void check_rank(int n, int r) {
  check_ground(n);
  require(r >= 0 && r <= n, "rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
}

// Largest n for which oracle_of tabulates a base family into a 2^n table.
constexpr int kTabulateLimit = 20;

// Downward closure of a base family: independent[S] iff S lies in some base.
std::vector<bool> tabulate_independent(int n, int r, const BitString& payload) {
  std::vector<bool> table(std::size_t{1} << n, false);
  if (payload.empty()) return table;
  SubsetMask s = SubsetMask::full(r);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i]) table[s.bits()] = true;
    if (i + 1 < payload.size()) s = next_colex(s);
  }
  // Walk masks from large to small: supersets are settled before subsets.
  for (std::uint64_t m = table.size(); m-- > 0;) {
    const SubsetMask set{m};
    if (table[m] || set.size() >= r) continue;
    for (int e = 0; e < n; ++e) {
      if (!set.contains(e) && table[set.with(e).bits()]) {
        table[m] = true;
        break;
      }
    }
  }
  return table;
}

IndependenceOracle basis_family_oracle(const MatroidSpec& spec) {
  const int n = spec.ground_size();
  const int r = *spec.rank();
  if (n <= kTabulateLimit) {
    auto table = std::make_shared<const std::vector<bool>>(tabulate_independent(n, r, spec.payload()));
    return IndependenceOracle(n, [table](SubsetMask s) { return static_cast<bool>((*table)[s.bits()]); });
  }
  auto bases = std::make_shared<std::vector<SubsetMask>>();
  SubsetMask s = SubsetMask::full(r);
  const auto& payload = spec.payload();
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i]) bases->push_back(s);
    if (i + 1 < payload.size()) s = next_colex(s);
  }
  return IndependenceOracle(n, [bases = std::shared_ptr<const std::vector<SubsetMask>>(bases)](SubsetMask s) {
    return std::any_of(bases->begin(), bases->end(), [s](SubsetMask b) { return s.is_subset_of(b); });
  });
}

}  // namespace

std::string_view to_string(MatroidKind kind) { return kKindNames[static_cast<int>(kind)]; }

MatroidKind parse_kind(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kKindNames)); ++i) {
    if (kKindNames[i] == name) return static_cast<MatroidKind>(i);
  }
  throw ParseError("unknown matroid kind '" + std::string(name) + "'");
}

std::string format_bits(const BitString& bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i] = '1';
  }
  return out;
}

BitString parse_bits(std::string_view text) {
  BitString bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw ParseError("payload must be a 0/1 string");
    bits[i] = text[i] == '1';
  }
  return bits;
}

MatroidSpec make_uniform(int n, int r) {
  check_rank(n, r);
  MatroidSpec spec;
  spec.kind_ = MatroidKind::kUniform;
  spec.n_ = n;
  spec.rank_ = r;
  return spec;
}

MatroidSpec make_basis_family(int n, int r, BitString payload) {
  check_rank(n, r);
  require(payload.size() == binomial(n, r), "basisFamily payload has " + std::to_string(payload.size()) +
                                                " bits, expected C(n,r) = " + std::to_string(binomial(n, r)));
  MatroidSpec spec;
  spec.kind_ = MatroidKind::kBasisFamily;
  spec.n_ = n;
  spec.rank_ = r;
  spec.payload_ = std::move(payload);
  return spec;
}

MatroidSpec make_subset_family(int n, BitString payload) {
  check_ground(n);
  require(payload.size() == (std::size_t{1} << n), "subsetFamily payload has " + std::to_string(payload.size()) +
                                                       " bits, expected 2^n = " +
                                                       std::to_string(std::size_t{1} << n));
  MatroidSpec spec;
  spec.kind_ = MatroidKind::kSubsetFamily;
  spec.n_ = n;
  spec.payload_ = std::move(payload);
  return spec;
}

MatroidSpec make_deleted_basis(int n, int r, SubsetMask excluded, DeletedVariant variant) {
  check_rank(n, r);
  require(excluded.fits(n), "excluded set A leaves the ground set");
  require(excluded.size() == r, "|A| = " + std::to_string(excluded.size()) + " but r = " + std::to_string(r));
  if (variant == DeletedVariant::kOne) {
    // Removing the only r-set (r = 0 or r = n) leaves no base at all.
    require(r >= 1 && r < n, "deletedBasis1 needs 1 <= r < n to keep a base");
  } else {
    require(n % 2 == 0 && 2 * r == n, "deletedBasis2 needs n even and r = n/2");
    require(n >= 4, "deletedBasis2 needs n >= 4 to keep a base");
  }
  MatroidSpec spec;
  spec.kind_ = variant == DeletedVariant::kOne ? MatroidKind::kDeletedBasis1 : MatroidKind::kDeletedBasis2;
  spec.n_ = n;
  spec.rank_ = r;
  spec.excluded_ = excluded;
  return spec;
}

MatroidSpec make_paving_counterexample(int n, int r, SubsetMask excluded) {
  check_rank(n, r);
  require(r >= 1, "pavingCounter needs r >= 1");
  require(excluded.fits(n), "excluded set A leaves the ground set");
  require(excluded.size() == r - 1,
          "|A| = " + std::to_string(excluded.size()) + " but r - 1 = " + std::to_string(r - 1));
  // Every r-set contains A when A is empty or when r = n; B_A is then empty.
  require(r >= 2 && r < n, "pavingCounter with these parameters has no bases");
  MatroidSpec spec;
  spec.kind_ = MatroidKind::kPavingCounter;
  spec.n_ = n;
  spec.rank_ = r;
  spec.excluded_ = excluded;
  return spec;
}

IndependenceOracle::IndependenceOracle(int n, Fn fn) : n_(n), fn_(std::move(fn)) {
  if (n < 0 || n > kMaxGround) throw ParameterError("oracle ground size out of range");
}

IndependenceOracle oracle_of(const MatroidSpec& spec) {
  const int n = spec.ground_size();
  const int r = spec.rank().value_or(0);
  const SubsetMask a = spec.excluded();
  switch (spec.kind()) {
    case MatroidKind::kUniform:
      return IndependenceOracle(n, [r](SubsetMask s) { return s.size() <= r; });
    case MatroidKind::kDeletedBasis1:
      // With 1 <= r < n every proper subset of A still extends to another r-set.
      return IndependenceOracle(n, [r, a](SubsetMask s) { return s.size() < r || (s.size() == r && s != a); });
    case MatroidKind::kDeletedBasis2: {
      const SubsetMask b = a.complement(n);
      return IndependenceOracle(
          n, [r, a, b](SubsetMask s) { return s.size() < r || (s.size() == r && s != a && s != b); });
    }
    case MatroidKind::kPavingCounter:
      // S extends to an r-set avoiding A exactly when S does not already contain A.
      return IndependenceOracle(n, [r, a](SubsetMask s) { return s.size() <= r && !a.is_subset_of(s); });
    case MatroidKind::kBasisFamily:
      return basis_family_oracle(spec);
    case MatroidKind::kSubsetFamily: {
      auto table = std::make_shared<const BitString>(spec.payload());
      return IndependenceOracle(n, [table](SubsetMask s) { return static_cast<bool>((*table)[s.bits()]); });
    }
  }
  throw ParameterError("unhandled matroid kind");
}

IndependenceOracle loops_and_coloops(int n, SubsetMask coloops) {
  if (!coloops.fits(n)) throw ParameterError("coloop set leaves the ground set");
  return IndependenceOracle(n, [coloops](SubsetMask s) { return s.is_subset_of(coloops); });
}

bool verify_axioms(const IndependenceOracle& oracle) {
  const int n = oracle.ground_size();
  if (n > kMaxAxiomGround) {
    throw CapacityError("verify_axioms supports n <= " + std::to_string(kMaxAxiomGround) + ", got " +
                        std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<bool> independent(count);
  for (std::uint64_t m = 0; m < count; ++m) independent[m] = oracle(SubsetMask{m});

  if (!independent[0]) return false;  // I0

  for (std::uint64_t m = 0; m < count; ++m) {  // I1: one-element deletions suffice
    if (!independent[m]) continue;
    const SubsetMask s{m};
    bool hereditary = true;
    for_each_element(s, [&](int e) { hereditary = hereditary && independent[s.without(e).bits()]; });
    if (!hereditary) return false;
  }

  std::vector<std::vector<SubsetMask>> by_size(n + 1);
  for (std::uint64_t m = 0; m < count; ++m) {
    if (independent[m]) by_size[SubsetMask{m}.size()].push_back(SubsetMask{m});
  }
  for (int small = 0; small <= n; ++small) {  // I2
    for (int large = small + 1; large <= n; ++large) {
      for (SubsetMask a : by_size[small]) {
        for (SubsetMask b : by_size[large]) {
          bool augmentable = false;
          for_each_element(b - a, [&](int v) { augmentable = augmentable || independent[a.with(v).bits()]; });
          if (!augmentable) return false;
        }
      }
    }
  }
  return true;
}

bool verify_axioms(const MatroidSpec& spec) {
  if (spec.ground_size() > kMaxAxiomGround) {
    throw CapacityError("verify_axioms supports n <= " + std::to_string(kMaxAxiomGround));
  }
  return verify_axioms(oracle_of(spec));
}

MatroidSpec materialize_bases(const MatroidSpec& spec) {
  const IndependenceOracle oracle = oracle_of(spec);
  const int n = spec.ground_size();
  int r = 0;
  if (spec.rank()) {
    r = *spec.rank();
  } else {
    SubsetMask kept;
    for (int e = 0; e < n; ++e) {
      if (oracle(kept.with(e))) kept = kept.with(e);
    }
    r = kept.size();
  }
  BitString payload(binomial(n, r));
  SubsetMask s = SubsetMask::full(r);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    payload[i] = oracle(s);
    if (i + 1 < payload.size()) s = next_colex(s);
  }
  return make_basis_family(n, r, std::move(payload));
}

MatroidSpec materialize_subsets(const MatroidSpec& spec) {
  const IndependenceOracle oracle = oracle_of(spec);
  BitString payload(std::size_t{1} << spec.ground_size());
  for (std::uint64_t m = 0; m < payload.size(); ++m) payload[m] = oracle(SubsetMask{m});
  return make_subset_family(spec.ground_size(), std::move(payload));
}

void write_matroid(std::ostream& out, const MatroidSpec& spec) {
  out << "matroid n=" << spec.ground_size() << " kind=" << to_string(spec.kind());
  if (spec.rank()) out << " r=" << *spec.rank();
  switch (spec.kind()) {
    case MatroidKind::kDeletedBasis1:
    case MatroidKind::kDeletedBasis2:
    case MatroidKind::kPavingCounter:
      out << " A=" << format_elements(spec.excluded());
      break;
    default:
      break;
  }
  out << '\n';
  if (spec.kind() == MatroidKind::kBasisFamily || spec.kind() == MatroidKind::kSubsetFamily) {
    out << format_bits(spec.payload()) << '\n';
  }
}

std::string to_text(const MatroidSpec& spec) {
  std::ostringstream out;
  write_matroid(out, spec);
  return out.str();
}

MatroidSpec read_matroid(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty matroid file");
  std::istringstream tokens(header);
  std::string word;
  tokens >> word;
  if (word != "matroid") throw ParseError("matroid file must start with 'matroid'");

  std::optional<int> n;
  std::optional<int> r;
  std::optional<MatroidKind> kind;
  std::optional<std::string> elements;
  auto to_int = [](const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("bad integer for " + key + ": '" + value + "'");
    return v;
  };
  while (tokens >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + word + "'");
    const std::string key = word.substr(0, eq);
    const std::string value = word.substr(eq + 1);
    if (key == "n") {
      n = to_int(key, value);
    } else if (key == "r") {
      r = to_int(key, value);
    } else if (key == "kind") {
      kind = parse_kind(value);
    } else if (key == "A") {
      elements = value;
    } else {
      throw ParseError("unknown header key '" + key + "'");
    }
  }
  if (!n || !kind) throw ParseError("header needs n= and kind=");
  if (*n < 0 || *n > kMaxSpecGround) throw ParseError("n out of range");
  const bool needs_a =
      *kind == MatroidKind::kDeletedBasis1 || *kind == MatroidKind::kDeletedBasis2 || *kind == MatroidKind::kPavingCounter;
  if (needs_a && !elements) throw ParseError(std::string(to_string(*kind)) + " needs A=");
  if (*kind != MatroidKind::kSubsetFamily && !r) throw ParseError(std::string(to_string(*kind)) + " needs r=");
  const SubsetMask a = elements ? parse_elements(*elements, *n) : SubsetMask{};

  BitString payload;
  if (*kind == MatroidKind::kBasisFamily || *kind == MatroidKind::kSubsetFamily) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing payload line");
    payload = parse_bits(line);
  }

  switch (*kind) {
    case MatroidKind::kUniform:
      return make_uniform(*n, *r);
    case MatroidKind::kBasisFamily:
      return make_basis_family(*n, *r, std::move(payload));
    case MatroidKind::kSubsetFamily:
      return make_subset_family(*n, std::move(payload));
    case MatroidKind::kDeletedBasis1:
      return make_deleted_basis(*n, *r, a, DeletedVariant::kOne);
    case MatroidKind::kDeletedBasis2:
      return make_deleted_basis(*n, *r, a, DeletedVariant::kTwo);
    case MatroidKind::kPavingCounter:
      return make_paving_counterexample(*n, *r, a);
  }
  throw ParseError("unhandled kind");
}

MatroidSpec parse_matroid(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matroid(in);
}

}  // namespace mqq
