#ifndef BIVALENCE_LATTICE_HPP
#define BIVALENCE_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bivalence {

/// Handle to an element of a particular `Lattice`; the index is the
/// element's position in declaration order.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(Element, Element) = default;
};

/// Unvalidated textual description of a lattice: element names, a cover or
/// full order relation given as (lesser, greater) pairs, and the involution as
/// (y, ~y) pairs where every element appears in exactly one pair.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> involution;
};

enum class Law {
  DuplicateElement,
  UnknownElement,
  NotAPartialOrder,
  NoUniqueBound,
  NoBoundedExtremes,
  BadInvolution,
  Reflexivity,
  Antisymmetry,
  Transitivity,
  JoinIsLeastUpperBound,
  MeetIsGreatestLowerBound,
  JoinCommutative,
  MeetCommutative,
  JoinAssociative,
  MeetAssociative,
  JoinIdempotent,
  MeetIdempotent,
  JoinAbsorption,
  MeetAbsorption,
  Bounded,
  InvolutionSelfInverse,
  InvolutionSwapsBounds,
};

std::string_view to_string(Law law) noexcept;

struct LawViolation {
  Law law;
  std::vector<std::string> witnesses;
  std::string detail;

  friend bool operator==(const LawViolation&, const LawViolation&) = default;
};

std::string to_string(const LawViolation& violation);

/// Raw operation tables. Indices are element positions; `leq`, `join` and
/// `meet` are row-major n*n.
struct LatticeTables {
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq;
  std::vector<std::uint32_t> join;
  std::vector<std::uint32_t> meet;
  std::vector<std::uint32_t> involution;
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;

  std::size_t size() const noexcept { return names.size(); }
  bool less_equal(std::uint32_t y, std::uint32_t z) const { return leq[y * size() + z] != 0; }
  std::uint32_t join_of(std::uint32_t y, std::uint32_t z) const { return join[y * size() + z]; }
  std::uint32_t meet_of(std::uint32_t y, std::uint32_t z) const { return meet[y * size() + z]; }

  friend bool operator==(const LatticeTables&, const LatticeTables&) = default;
};

/// Finite bounded lattice with involution. Immutable once built; copies share
/// the underlying tables.
class Lattice {
public:
  std::size_t size() const noexcept { return tables_->size(); }

  Element bottom() const noexcept { return Element{tables_->bottom}; }
  Element top() const noexcept { return Element{tables_->top}; }

  /// Throws `Error{Errc::UnknownElement}`.
  Element element(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;
  const std::string& name(Element e) const;
  const std::vector<std::string>& names() const noexcept { return tables_->names; }
  std::vector<Element> elements() const;

  bool leq(Element y, Element z) const;
  Element join(Element y, Element z) const;
  Element meet(Element y, Element z) const;
  Element involute(Element y) const;

  bool is_extreme(Element y) const noexcept { return y == bottom() || y == top(); }

  const LatticeTables& tables() const noexcept { return *tables_; }

  /// Description whose `order` is the covering relation; feeding it back to
  /// `build_from_order` reproduces these tables.
  LatticeSpec to_spec() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.tables() == b.tables(); }

private:
  friend Lattice build_from_order(const LatticeSpec& spec);
  explicit Lattice(std::shared_ptr<const LatticeTables> tables) : tables_(std::move(tables)) {}

  void check(Element e) const;

  std::shared_ptr<const LatticeTables> tables_;
};

/// Validates the description and computes the closure and operation tables.
/// Throws `Error` with the category of the first violation found.
Lattice build_from_order(const LatticeSpec& spec);

Lattice build_from_order(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> order,
                         std::vector<std::pair<std::string, std::string>> involution);

enum class Family { Boolean, Chain, Lantern };

/// boolean(n): powerset of {a, b, ...} with complement; chain(n): 0 < c1 < ...
/// < 1 with n+1 elements and order reversal; lantern(n): MO_n, pairs p_i/q_i.
Lattice builtin(Family family, unsigned n);
Lattice builtin(std::string_view family, unsigned n);

/// Exhaustive law check of an arbitrary table set. Never throws.
std::vector<LawViolation> verify_axioms(const LatticeTables& tables);
std::vector<LawViolation> verify_axioms(const Lattice& lattice);

/// Reports every defect of an unvalidated description (poset, bound and
/// involution problems); when the description is sound the table laws are
/// checked as well.
std::vector<LawViolation> verify_axioms(const LatticeSpec& spec);

/// Lattice file format: `{"elements": [...], "order": [[lo, hi], ...],
/// "involution": [[y, ~y], ...]}`.
LatticeSpec parse_lattice_spec(std::string_view json_text);
std::string render_lattice_spec(const LatticeSpec& spec);

} // namespace bivalence

#endif // BIVALENCE_LATTICE_HPP
