#include "bivalence/lattice.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bivalence/error.hpp"

namespace bivalence {
namespace {

constexpr unsigned kMaxBooleanRank = 10;
constexpr unsigned kMaxChainLength = 512;
constexpr unsigned kMaxLanternPairs = 256;

/// Fixed-width bitset sized at runtime, one row of a relation matrix.
class Row {
public:
  explicit Row(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Row& operator|=(const Row& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Row operator&(const Row& o) const {
    Row r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

Errc errc_for(Law law) {
  switch (law) {
  case Law::UnknownElement: return Errc::UnknownElement;
  case Law::NoUniqueBound: return Errc::NoUniqueBound;
  case Law::NoBoundedExtremes: return Errc::NoBoundedExtremes;
  case Law::BadInvolution:
  case Law::InvolutionSelfInverse:
  case Law::InvolutionSwapsBounds: return Errc::BadInvolution;
  case Law::DuplicateElement: return Errc::MalformedInput;
  default: return Errc::NotAPartialOrder;
  }
}

struct Analysis {
  std::vector<LawViolation> violations;
  std::optional<LatticeTables> tables;
};

/// Shared by the validating constructor and the LatticeSpec audit: collects
/// every defect and, when there are none, the finished tables.
Analysis analyse(const LatticeSpec& spec) {
  Analysis out;
  auto report = [&](Law law, std::vector<std::string> witnesses, std::string detail) {
    out.violations.push_back({law, std::move(witnesses), std::move(detail)});
  };

  const std::size_t n = spec.elements.size();
  if (n == 0) {
    report(Law::NoBoundedExtremes, {}, "no elements declared");
    return out;
  }

  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& name = spec.elements[i];
    if (name.empty()) report(Law::DuplicateElement, {name}, "empty element name");
    if (!index.emplace(name, i).second) report(Law::DuplicateElement, {name}, "declared twice");
  }
  auto lookup = [&](const std::string& name) -> std::optional<std::uint32_t> {
    auto it = index.find(name);
    if (it == index.end()) {
      report(Law::UnknownElement, {name}, "not declared in elements");
      return std::nullopt;
    }
    return it->second;
  };

  std::vector<Row> up(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : spec.order) {
    auto a = lookup(lo);
    auto b = lookup(hi);
    if (a && b) up[*a].set(*b);
  }

  std::vector<std::uint32_t> involution(n, 0);
  std::vector<int> seen(n, 0);
  for (const auto& [y, z] : spec.involution) {
    auto a = lookup(y);
    auto b = lookup(z);
    if (!a || !b) continue;
    involution[*a] = *b;
    involution[*b] = *a;
    ++seen[*a];
    if (*a != *b) ++seen[*b];
  }
  if (!out.violations.empty()) return out;

  for (std::uint32_t i = 0; i < n; ++i) {
    if (seen[i] == 0) report(Law::BadInvolution, {spec.elements[i]}, "element has no involution image");
    if (seen[i] > 1) report(Law::BadInvolution, {spec.elements[i]}, "element appears in several involution pairs");
  }

  // Transitive closure: Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && up[i].test(k)) up[i] |= up[k];
    }
  }

  bool partial_order = true;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = y + 1; z < n; ++z) {
      if (up[y].test(z) && up[z].test(y)) {
        partial_order = false;
        report(Law::NotAPartialOrder, {spec.elements[y], spec.elements[z]},
               "order cycle makes distinct elements mutually below each other");
      }
    }
  }
  if (!partial_order) return out;

  std::vector<Row> down(n, Row(n));
  for (std::size_t y = 0; y < n; ++y) up[y].for_each([&](std::size_t z) { down[z].set(y); });

  std::optional<std::uint32_t> bottom;
  std::optional<std::uint32_t> top;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (up[i].count() == n) bottom = i;
    if (down[i].count() == n) top = i;
  }
  if (!bottom) report(Law::NoBoundedExtremes, {}, "no least element");
  if (!top) report(Law::NoBoundedExtremes, {}, "no greatest element");

  std::vector<std::size_t> up_count(n);
  std::vector<std::size_t> down_count(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_count[i] = up[i].count();
    down_count[i] = down[i].count();
  }

  // The least upper bound of {y, z} is the common upper bound u whose up-set
  // is the whole common up-set; dually for the greatest lower bound.
  auto least_of = [](const Row& common, const std::vector<std::size_t>& counts)
      -> std::optional<std::uint32_t> {
    const std::size_t size = common.count();
    std::optional<std::uint32_t> found;
    common.for_each([&](std::size_t u) {
      if (counts[u] == size) found = static_cast<std::uint32_t>(u);
    });
    return found;
  };

  std::vector<std::uint32_t> join(n * n, 0);
  std::vector<std::uint32_t> meet(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = y; z < n; ++z) {
      auto lub = least_of(up[y] & up[z], up_count);
      auto glb = least_of(down[y] & down[z], down_count);
      if (!lub) {
        report(Law::NoUniqueBound, {spec.elements[y], spec.elements[z]}, "pair has no least upper bound");
      } else {
        join[y * n + z] = join[z * n + y] = *lub;
      }
      if (!glb) {
        report(Law::NoUniqueBound, {spec.elements[y], spec.elements[z]}, "pair has no greatest lower bound");
      } else {
        meet[y * n + z] = meet[z * n + y] = *glb;
      }
    }
  }

  if (bottom && top && seen[*bottom] == 1 && involution[*bottom] != *top) {
    report(Law::BadInvolution, {spec.elements[*bottom], spec.elements[involution[*bottom]]},
           "involution does not map bottom to top");
  }
  if (!out.violations.empty()) return out;

  LatticeTables t;
  t.names = spec.elements;
  t.leq.assign(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) up[y].for_each([&](std::size_t z) { t.leq[y * n + z] = 1; });
  t.join = std::move(join);
  t.meet = std::move(meet);
  t.involution = std::move(involution);
  t.bottom = *bottom;
  t.top = *top;
  out.tables = std::move(t);
  return out;
}

std::string subset_name(unsigned mask, unsigned rank) {
  if (mask == 0) return "0";
  if (mask == (1U << rank) - 1) return "1";
  std::string s;
  for (unsigned bit = 0; bit < rank; ++bit) {
    if (mask & (1U << bit)) s.push_back(static_cast<char>('a' + bit));
  }
  return s;
}

Lattice boolean_lattice(unsigned rank) {
  LatticeSpec spec;
  const unsigned count = 1U << rank;
  for (unsigned mask = 0; mask < count; ++mask) spec.elements.push_back(subset_name(mask, rank));
  for (unsigned mask = 0; mask < count; ++mask) {
    for (unsigned bit = 0; bit < rank; ++bit) {
      if (!(mask & (1U << bit))) spec.order.emplace_back(spec.elements[mask], spec.elements[mask | (1U << bit)]);
    }
    const unsigned complement = (count - 1) ^ mask;
    if (mask <= complement) spec.involution.emplace_back(spec.elements[mask], spec.elements[complement]);
  }
  return build_from_order(spec);
}

Lattice chain_lattice(unsigned length) {
  LatticeSpec spec;
  spec.elements.push_back("0");
  for (unsigned k = 1; k < length; ++k) spec.elements.push_back("c" + std::to_string(k));
  spec.elements.push_back("1");
  for (unsigned k = 0; k < length; ++k) spec.order.emplace_back(spec.elements[k], spec.elements[k + 1]);
  for (unsigned k = 0; 2 * k <= length; ++k) spec.involution.emplace_back(spec.elements[k], spec.elements[length - k]);
  return build_from_order(spec);
}

Lattice lantern_lattice(unsigned pairs) {
  LatticeSpec spec;
  spec.elements.push_back("0");
  for (unsigned i = 1; i <= pairs; ++i) {
    spec.elements.push_back("p" + std::to_string(i));
    spec.elements.push_back("q" + std::to_string(i));
  }
  spec.elements.push_back("1");
  spec.involution.emplace_back("0", "1");
  for (unsigned i = 1; i <= pairs; ++i) {
    const auto p = "p" + std::to_string(i);
    const auto q = "q" + std::to_string(i);
    spec.order.emplace_back("0", p);
    spec.order.emplace_back("0", q);
    spec.order.emplace_back(p, "1");
    spec.order.emplace_back(q, "1");
    spec.involution.emplace_back(p, q);
  }
  return build_from_order(spec);
}

} // namespace

std::string_view to_string(Law law) noexcept {
  switch (law) {
  case Law::DuplicateElement: return "DuplicateElement";
  case Law::UnknownElement: return "UnknownElement";
  case Law::NotAPartialOrder: return "NotAPartialOrder";
  case Law::NoUniqueBound: return "NoUniqueBound";
  case Law::NoBoundedExtremes: return "NoBoundedExtremes";
  case Law::BadInvolution: return "BadInvolution";
  case Law::Reflexivity: return "Reflexivity";
  case Law::Antisymmetry: return "Antisymmetry";
  case Law::Transitivity: return "Transitivity";
  case Law::JoinIsLeastUpperBound: return "JoinIsLeastUpperBound";
  case Law::MeetIsGreatestLowerBound: return "MeetIsGreatestLowerBound";
  case Law::JoinCommutative: return "JoinCommutative";
  case Law::MeetCommutative: return "MeetCommutative";
  case Law::JoinAssociative: return "JoinAssociative";
  case Law::MeetAssociative: return "MeetAssociative";
  case Law::JoinIdempotent: return "JoinIdempotent";
  case Law::MeetIdempotent: return "MeetIdempotent";
  case Law::JoinAbsorption: return "JoinAbsorption";
  case Law::MeetAbsorption: return "MeetAbsorption";
  case Law::Bounded: return "Bounded";
  case Law::InvolutionSelfInverse: return "InvolutionSelfInverse";
  case Law::InvolutionSwapsBounds: return "InvolutionSwapsBounds";
  }
  return "Unknown";
}

std::string to_string(const LawViolation& violation) {
  std::ostringstream os;
  os << to_string(violation.law);
  if (!violation.witnesses.empty()) {
    os << " (";
    for (std::size_t i = 0; i < violation.witnesses.size(); ++i) os << (i ? ", " : "") << violation.witnesses[i];
    os << ')';
  }
  if (!violation.detail.empty()) os << ": " << violation.detail;
  return os.str();
}

Element Lattice::element(std::string_view name) const {
  const auto& names = tables_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(Errc::UnknownElement, "no element named '" + std::string(name) + "'");
  return Element{static_cast<std::uint32_t>(it - names.begin())};
}

bool Lattice::contains(std::string_view name) const noexcept {
  const auto& names = tables_->names;
  return std::find(names.begin(), names.end(), name) != names.end();
}

void Lattice::check(Element e) const {
  if (e.index >= size()) throw Error(Errc::UnknownElement, "element index " + std::to_string(e.index) + " out of range");
}

const std::string& Lattice::name(Element e) const {
  check(e);
  return tables_->names[e.index];
}

std::vector<Element> Lattice::elements() const {
  std::vector<Element> out(size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Element{i};
  return out;
}

bool Lattice::leq(Element y, Element z) const {
  check(y);
  check(z);
  return tables_->less_equal(y.index, z.index);
}

Element Lattice::join(Element y, Element z) const {
  check(y);
  check(z);
  return Element{tables_->join_of(y.index, z.index)};
}

Element Lattice::meet(Element y, Element z) const {
  check(y);
  check(z);
  return Element{tables_->meet_of(y.index, z.index)};
}

Element Lattice::involute(Element y) const {
  check(y);
  return Element{tables_->involution[y.index]};
}

LatticeSpec Lattice::to_spec() const {
  const auto& t = *tables_;
  const std::size_t n = t.size();
  LatticeSpec spec;
  spec.elements = t.names;
  for (std::uint32_t y = 0; y < n; ++y) {
    for (std::uint32_t z = 0; z < n; ++z) {
      if (y == z || !t.less_equal(y, z)) continue;
      bool cover = true;
      for (std::uint32_t w = 0; w < n && cover; ++w) {
        if (w != y && w != z && t.less_equal(y, w) && t.less_equal(w, z)) cover = false;
      }
      if (cover) spec.order.emplace_back(t.names[y], t.names[z]);
    }
  }
  for (std::uint32_t y = 0; y < n; ++y) {
    if (y <= t.involution[y]) spec.involution.emplace_back(t.names[y], t.names[t.involution[y]]);
  }
  return spec;
}

Lattice build_from_order(const LatticeSpec& spec) {
  Analysis a = analyse(spec);
  if (!a.violations.empty()) {
    const auto& first = a.violations.front();
    throw Error(errc_for(first.law), to_string(first));
  }
  return Lattice(std::make_shared<const LatticeTables>(std::move(*a.tables)));
}

Lattice build_from_order(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> order,
                         std::vector<std::pair<std::string, std::string>> involution) {
  return build_from_order(LatticeSpec{std::move(elements), std::move(order), std::move(involution)});
}

Lattice builtin(Family family, unsigned n) {
  if (n < 1) throw Error(Errc::OutOfRange, "builtin lattice size must be at least 1");
  switch (family) {
  case Family::Boolean:
    if (n > kMaxBooleanRank) throw Error(Errc::OutOfRange, "boolean rank above " + std::to_string(kMaxBooleanRank));
    return boolean_lattice(n);
  case Family::Chain:
    if (n > kMaxChainLength) throw Error(Errc::OutOfRange, "chain length above " + std::to_string(kMaxChainLength));
    return chain_lattice(n);
  case Family::Lantern:
    if (n > kMaxLanternPairs) throw Error(Errc::OutOfRange, "lantern size above " + std::to_string(kMaxLanternPairs));
    return lantern_lattice(n);
  }
  throw Error(Errc::UnsupportedFamily, "unknown family");
}

Lattice builtin(std::string_view family, unsigned n) {
  if (family == "boolean") return builtin(Family::Boolean, n);
  if (family == "chain") return builtin(Family::Chain, n);
  if (family == "lantern") return builtin(Family::Lantern, n);
  throw Error(Errc::UnsupportedFamily, "unknown lattice family '" + std::string(family) + "'");
}

std::vector<LawViolation> verify_axioms(const LatticeTables& t) {
  std::vector<LawViolation> out;
  const std::size_t n = t.size();
  if (n == 0) {
    out.push_back({Law::NoBoundedExtremes, {}, "empty lattice"});
    return out;
  }
  if (t.leq.size() != n * n || t.join.size() != n * n || t.meet.size() != n * n || t.involution.size() != n ||
      t.bottom >= n || t.top >= n) {
    out.push_back({Law::UnknownElement, {}, "table dimensions do not match the element count"});
    return out;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.join[i] >= n || t.meet[i] >= n) {
      out.push_back({Law::UnknownElement, {}, "operation table refers to a nonexistent element"});
      return out;
    }
  }
  for (auto img : t.involution) {
    if (img >= n) {
      out.push_back({Law::UnknownElement, {}, "involution refers to a nonexistent element"});
      return out;
    }
  }

  const auto& nm = t.names;
  auto add = [&](Law law, std::initializer_list<std::uint32_t> w, std::string detail = {}) {
    std::vector<std::string> names;
    for (auto i : w) names.push_back(nm[i]);
    out.push_back({law, std::move(names), std::move(detail)});
  };

  for (std::uint32_t y = 0; y < n; ++y) {
    if (!t.less_equal(y, y)) add(Law::Reflexivity, {y});
    if (!t.less_equal(t.bottom, y) || !t.less_equal(y, t.top)) add(Law::Bounded, {y});
    if (t.join_of(y, y) != y) add(Law::JoinIdempotent, {y});
    if (t.meet_of(y, y) != y) add(Law::MeetIdempotent, {y});
    if (t.involution[t.involution[y]] != y) add(Law::InvolutionSelfInverse, {y});
  }
  if (t.involution[t.bottom] != t.top || t.involution[t.top] != t.bottom) {
    add(Law::InvolutionSwapsBounds, {t.bottom, t.top});
  }

  for (std::uint32_t y = 0; y < n; ++y) {
    for (std::uint32_t z = 0; z < n; ++z) {
      if (y < z && t.less_equal(y, z) && t.less_equal(z, y)) add(Law::Antisymmetry, {y, z});
      if (y < z && t.join_of(y, z) != t.join_of(z, y)) add(Law::JoinCommutative, {y, z});
      if (y < z && t.meet_of(y, z) != t.meet_of(z, y)) add(Law::MeetCommutative, {y, z});
      if (t.join_of(y, t.meet_of(y, z)) != y) add(Law::JoinAbsorption, {y, z});
      if (t.meet_of(y, t.join_of(y, z)) != y) add(Law::MeetAbsorption, {y, z});

      const auto j = t.join_of(y, z);
      const auto m = t.meet_of(y, z);
      bool lub = t.less_equal(y, j) && t.less_equal(z, j);
      bool glb = t.less_equal(m, y) && t.less_equal(m, z);
      for (std::uint32_t w = 0; w < n; ++w) {
        if (t.less_equal(y, z) && t.less_equal(z, w) && !t.less_equal(y, w)) add(Law::Transitivity, {y, z, w});
        if (lub && t.less_equal(y, w) && t.less_equal(z, w) && !t.less_equal(j, w)) lub = false;
        if (glb && t.less_equal(w, y) && t.less_equal(w, z) && !t.less_equal(w, m)) glb = false;
        if (t.join_of(t.join_of(y, z), w) != t.join_of(y, t.join_of(z, w))) add(Law::JoinAssociative, {y, z, w});
        if (t.meet_of(t.meet_of(y, z), w) != t.meet_of(y, t.meet_of(z, w))) add(Law::MeetAssociative, {y, z, w});
      }
      if (!lub) add(Law::JoinIsLeastUpperBound, {y, z});
      if (!glb) add(Law::MeetIsGreatestLowerBound, {y, z});
    }
  }
  return out;
}

std::vector<LawViolation> verify_axioms(const Lattice& lattice) { return verify_axioms(lattice.tables()); }

std::vector<LawViolation> verify_axioms(const LatticeSpec& spec) {
  Analysis a = analyse(spec);
  if (!a.violations.empty()) return a.violations;
  return verify_axioms(*a.tables);
}

} // namespace bivalence
